// Copyright 2026 The cpcorr Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace cpcorr {

// Base of every error the library throws. The CLI maps the subclasses onto
// process exit codes (config -> 2, numerical -> 3).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid or inconsistent user configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Sphere touching or penetrating the surface.
class GeometryError : public Error {
 public:
  using Error::Error;
};

// Linear system too close to singular to solve reliably.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf or other breakdown inside a numerical pipeline.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Degenerate extrapolation input (coincident abscissae).
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

// Regression over a window with too few points.
class FitError : public Error {
 public:
  using Error::Error;
};

// Quantities combined although computed under different numerical plans.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cpcorr
