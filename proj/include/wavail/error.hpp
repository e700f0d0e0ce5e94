// SPDX-License-Identifier: Apache-2.0
//
// wavail - wireless availability planning toolkit
// Copyright (C) 2026 The wavail authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WAVAIL_ERROR_HPP
#define WAVAIL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace wavail {

// Root of every error the library throws. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input outside an operation's domain (non-positive frequency, near field, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// Plate spacing at or below λ/2: the guided mode does not propagate.
class BelowCutoffError : public DomainError {
public:
    using DomainError::DomainError;
};

// Log-count regression with zero slope.
class NoGrowthError : public DomainError {
public:
    using DomainError::DomainError;
};

// Frame codec failures, each distinguishable by type.
class FormatError : public Error {
public:
    using Error::Error;
};

class TruncationError : public Error {
public:
    using Error::Error;
};

class IntegrityError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
    if (!condition) throw DomainError(message);
}

}  // namespace detail
}  // namespace wavail

#endif  // WAVAIL_ERROR_HPP
