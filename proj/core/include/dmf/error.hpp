/*
   Copyright 2026 The dmf Authors

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

#ifndef DMF_ERROR_HPP
#define DMF_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dmf {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid mathematical input: division by zero, non-unit inversion,
/// reducible modulus, weight/type mismatch, non-integral reduction.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncated series does not carry enough coefficients for the request.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A u-series is not the expansion of a modular form of the requested
/// weight and type.
class NotModularError : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace dmf

#endif  // DMF_ERROR_HPP
