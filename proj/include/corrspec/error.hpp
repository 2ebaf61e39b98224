// Copyright 2026 The corrspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CORRSPEC_ERROR_HPP
#define CORRSPEC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace corrspec {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Arguments violate a documented precondition.
class InvalidInput : public Error {
   public:
    using Error::Error;
};

/// A statistic is mathematically undefined for the given data (e.g. CV with zero mean).
class UndefinedStatistic : public Error {
   public:
    using Error::Error;
};

/// Floating point results broke an invariant beyond the allowed tolerance.
class NumericalInconsistency : public Error {
   public:
    using Error::Error;
};

/// The requested problem exceeds a hard size cap.
class ResourceLimit : public Error {
   public:
    using Error::Error;
};

}  // namespace corrspec

#endif
