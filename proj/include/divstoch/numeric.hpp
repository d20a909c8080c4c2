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

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "divstoch/errors.hpp"

namespace divstoch {

/// Exact rational scalar (arbitrary-precision, always in lowest terms).
using Rat = boost::multiprecision::cpp_rational;

/// Exact conversion: every finite double is m * 2^e for integer m, e.
inline Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw ValidationError("cannot convert non-finite double to rational");
  int exp = 0;
  double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
  auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
  exp -= 53;
  Rat r(mant);
  if (exp >= 0) {
    r *= Rat(boost::multiprecision::cpp_int(1) << exp);
  } else {
    r /= Rat(boost::multiprecision::cpp_int(1) << -exp);
  }
  return r;
}

inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "num/den" or a plain integer string.
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw ParseError("rational with zero denominator: " + s);
    return Rat(num, den);
  } catch (const std::runtime_error&) {
    throw ParseError("malformed rational: " + s);
  }
}

// Scalar traits shared by the two numeric backends (double and Rat).

template <class T>
struct scalar;

template <>
struct scalar<double> {
  static constexpr bool exact = false;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_double(double x) { return x; }
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
  static bool valid(double x) { return std::isfinite(x); }
};

template <>
struct scalar<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static Rat from_double(double x) { return rat_from_double(x); }
  static double to_double(const Rat& x) { return x.convert_to<double>(); }
  static Rat abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
  static bool valid(const Rat&) { return true; }
};

/// Extended nonnegative value: a finite scalar or +infinity. Never NaN.
template <class T>
class Ext {
 public:
  Ext() : value_(scalar<T>::zero()), inf_(false) {}
  explicit Ext(T v) : value_(std::move(v)), inf_(false) {
    if (!scalar<T>::valid(value_)) throw ValidationError("non-finite extended value");
  }
  static Ext infinity() {
    Ext e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }
  /// Finite value; calling this on +inf is a bug.
  const T& finite() const { return value_; }
  double to_double() const {
    return inf_ ? std::numeric_limits<double>::infinity() : scalar<T>::to_double(value_);
  }

  friend Ext operator+(const Ext& a, const Ext& b) {
    if (a.inf_ || b.inf_) return infinity();
    return Ext(a.value_ + b.value_);
  }
  friend bool operator==(const Ext& a, const Ext& b) {
    if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Ext& a, const Ext& b) { return !(a == b); }
  friend bool operator<(const Ext& a, const Ext& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Ext& a, const Ext& b) { return a < b || a == b; }
  friend bool operator>(const Ext& a, const Ext& b) { return b < a; }
  friend bool operator>=(const Ext& a, const Ext& b) { return b <= a; }

 private:
  T value_;
  bool inf_;
};

using ExtD = Ext<double>;
using ExtR = Ext<Rat>;

/// Ext<double> from a raw double that may already be +inf.
inline ExtD ext_from_double(double x) {
  if (std::isnan(x)) throw ValidationError("NaN in extended value");
  if (std::isinf(x)) return ExtD::infinity();
  return ExtD(x);
}

}  // namespace divstoch
