// Copyright 2026 The divstoch Authors
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

namespace divstoch {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Source/target alphabets do not line up for sequential composition.
struct CompositionError : Error {
  using Error::Error;
};

/// Operands have incompatible shapes or alphabets.
struct ShapeError : Error {
  using Error::Error;
};

/// Input fails a stochasticity invariant (negative mass, bad column sum, NaN).
struct ValidationError : Error {
  using Error::Error;
};

/// Requested operation is not available on this numeric backend or family.
struct UnsupportedError : Error {
  using Error::Error;
};

/// A continuous model violates its contract (e.g. decreasing cdf).
struct ModelError : Error {
  using Error::Error;
};

/// A scan or enumeration would exceed its hard resource cap.
struct ResourceError : Error {
  using Error::Error;
};

/// Currying failed: some slice of the map is not a divergence morphism.
struct CurryError : Error {
  using Error::Error;
};

/// Malformed input file or job description.
struct ParseError : Error {
  using Error::Error;
};

}  // namespace divstoch
