/*
   Copyright 2026 The pppkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace pppkit {

/// Argument outside the mathematical domain of an operation (negative distance,
/// moment order outside {1,2,3}, non-positive normalisation, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A model failed construction-time validation, or a moment integral diverged.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// The model lacks a capability the operation needs (e.g. moments-only fading
/// has neither a sampler nor a density).
class UnsupportedError : public std::logic_error {
public:
    explicit UnsupportedError(const std::string& what) : std::logic_error(what) {}
};

namespace detail {

inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw ValidationError(message);
    }
}

} // namespace detail
} // namespace pppkit
