// Copyright 2026 The gksl Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace gksl {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit together, or a size limit was exceeded.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Non-finite input, or a structural invariant (Hermiticity, trace,
// positivity) violated beyond tolerance.
class NumericError : public Error {
 public:
  using Error::Error;
};

// A model description is incomplete or inconsistent, e.g. a bath that does
// not cover every Bohr frequency.
class SpecError : public Error {
 public:
  using Error::Error;
};

class PositivityError : public Error {
 public:
  using Error::Error;
};

class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// The adaptive integrator could not make progress.
class IntegrationError : public Error {
 public:
  using Error::Error;
};

// Kraus generators violate completeness.
class MapError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace gksl
