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

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <string>

#include "knotslice/errors.hpp"

namespace knotslice {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

// Free-function protocol every coefficient ring provides. Types living in
// namespace knotslice are found by ADL; the multiprecision overloads are
// declared here so that ordinary lookup sees them from the templates below.

inline bool is_zero(const Integer& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline Integer zero_like(const Integer&) { return 0; }
inline Rational zero_like(const Rational&) { return 0; }
inline Integer one_like(const Integer&) { return 1; }
inline Rational one_like(const Rational&) { return 1; }

inline Integer conjugate(const Integer& x) { return x; }
inline Rational conjugate(const Rational& x) { return x; }

inline Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw domain_error("exact_div: division by zero");
  Integer q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (!r.is_zero()) throw domain_error("exact_div: inexact integer division");
  return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw domain_error("exact_div: division by zero");
  return a / b;
}

inline std::string to_string(const Integer& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

/// Canonical residue of x modulo m (m > 0), in [0, m).
inline Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

namespace detail {

// Unqualified calls from here see both the overloads above and, through
// ADL, those declared next to later coefficient types.
template <class R>
bool coeff_is_zero(const R& x) {
  return is_zero(x);
}

}  // namespace detail

template <class R>
concept CommutativeRing = std::copyable<R> && requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { zero_like(a) } -> std::convertible_to<R>;
  { one_like(a) } -> std::convertible_to<R>;
};

/// Integral domain whose elements support exact division by divisors.
template <class R>
concept ExactDomain = CommutativeRing<R> && requires(const R& a, const R& b) {
  { exact_div(a, b) } -> std::convertible_to<R>;
};

/// Ring with an involution (xi -> xi^-1 on Z[xi], trivial on the prime rings).
template <class R>
concept InvolutiveRing = CommutativeRing<R> && requires(const R& a) {
  { conjugate(a) } -> std::convertible_to<R>;
};

}  // namespace knotslice
