/*
   Copyright 2026 The knotslice Authors

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

namespace knotslice {

/// Matrix shapes do not fit the requested operation.
struct dimension_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Argument outside the domain of an operation (zero polynomial, even n, ...).
struct domain_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A computed object violated an invariant it is supposed to satisfy.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

/// The obstruction machinery does not apply to this input.
struct inapplicable_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace knotslice
