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

#include <cstddef>
#include <utility>
#include <vector>

#include "divstoch/alphabet.hpp"
#include "divstoch/errors.hpp"
#include "divstoch/numeric.hpp"

namespace divstoch {

/// Stochasticity tolerance: constructors renormalize only when the deviation
/// is strictly below this, and reject otherwise.
inline constexpr double kEpsStoch = 1e-9;

namespace detail {

// Clamps one probability entry into [0,1], rejecting anything that is off by
// kEpsStoch or more. Shared by Distribution and Channel constructors.
template <class T>
T clamp_entry(const T& v, const char* what) {
  if (!scalar<T>::valid(v)) throw ValidationError(std::string(what) + ": non-finite entry");
  const T eps = scalar<T>::from_double(kEpsStoch);
  if (v < scalar<T>::zero()) {
    if (scalar<T>::abs(v) >= eps) throw ValidationError(std::string(what) + ": negative entry");
    return scalar<T>::zero();
  }
  if (v > scalar<T>::one()) {
    if (v - scalar<T>::one() >= eps) throw ValidationError(std::string(what) + ": entry above 1");
    return scalar<T>::one();
  }
  return v;
}

template <class T>
void normalize_block(std::vector<T>& v, std::size_t begin, std::size_t stride, std::size_t count,
                     const char* what) {
  T sum = scalar<T>::zero();
  for (std::size_t k = 0; k < count; ++k) sum += v[begin + k * stride];
  const T dev = scalar<T>::abs(sum - scalar<T>::one());
  if (dev >= scalar<T>::from_double(kEpsStoch))
    throw ValidationError(std::string(what) + ": mass does not sum to 1");
  if (sum != scalar<T>::one())
    for (std::size_t k = 0; k < count; ++k) v[begin + k * stride] /= sum;
}

}  // namespace detail

/// Finite probability vector over a named alphabet. Immutable after
/// construction; entries are in [0,1] and sum to one.
template <class T>
class Distribution {
 public:
  Distribution(Alphabet alphabet, std::vector<T> probs)
      : alphabet_(std::move(alphabet)), probs_(std::move(probs)) {
    if (probs_.size() != alphabet_.size())
      throw ValidationError("distribution: length does not match alphabet");
    for (auto& v : probs_) v = detail::clamp_entry(v, "distribution");
    detail::normalize_block(probs_, 0, 1, probs_.size(), "distribution");
  }

  /// Point mass at symbol index x.
  static Distribution point_mass(Alphabet alphabet, std::size_t x) {
    std::vector<T> p(alphabet.size(), scalar<T>::zero());
    p.at(x) = scalar<T>::one();
    return Distribution(std::move(alphabet), std::move(p));
  }

  static Distribution uniform(Alphabet alphabet) {
    const std::size_t n = alphabet.size();
    std::vector<T> p(n, scalar<T>::one() / scalar<T>::from_double(double(n)));
    return Distribution(std::move(alphabet), std::move(p));
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t size() const { return probs_.size(); }
  const T& operator[](std::size_t x) const { return probs_[x]; }
  const std::vector<T>& probs() const { return probs_; }

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.alphabet_ == b.alphabet_ && a.probs_ == b.probs_;
  }

 private:
  Alphabet alphabet_;
  std::vector<T> probs_;
};

/// Column-stochastic matrix: columns indexed by the source alphabet, rows by
/// the target. Entry (y|x) is the transition probability from x to y.
template <class T>
class Channel {
 public:
  /// `matrix` is row-major with target.size() rows and source.size() columns.
  Channel(Alphabet source, Alphabet target, std::vector<T> matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    const std::size_t n = source_.size(), m = target_.size();
    if (matrix_.size() != n * m) throw ValidationError("channel: matrix shape mismatch");
    for (auto& v : matrix_) v = detail::clamp_entry(v, "channel");
    for (std::size_t x = 0; x < n; ++x) detail::normalize_block(matrix_, x, n, m, "channel column");
  }

  static Channel identity(const Alphabet& x) {
    const std::size_t n = x.size();
    std::vector<T> m(n * n, scalar<T>::zero());
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] = scalar<T>::one();
    return Channel(x, x, std::move(m));
  }

  /// Deterministic channel defined by a function source -> target.
  static Channel from_function(const Alphabet& source, const Alphabet& target,
                               const std::vector<std::size_t>& fn) {
    if (fn.size() != source.size()) throw ValidationError("function length mismatch");
    std::vector<T> m(source.size() * target.size(), scalar<T>::zero());
    for (std::size_t x = 0; x < fn.size(); ++x) {
      if (fn[x] >= target.size()) throw ValidationError("function value out of range");
      m[fn[x] * source.size() + x] = scalar<T>::one();
    }
    return Channel(source, target, std::move(m));
  }

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  std::size_t source_size() const { return source_.size(); }
  std::size_t target_size() const { return target_.size(); }

  const T& operator()(std::size_t y, std::size_t x) const { return matrix_[y * source_.size() + x]; }
  const std::vector<T>& matrix() const { return matrix_; }

  /// Column x as a Distribution on the target alphabet.
  Distribution<T> column(std::size_t x) const {
    std::vector<T> p(target_.size());
    for (std::size_t y = 0; y < target_.size(); ++y) p[y] = (*this)(y, x);
    return Distribution<T>(target_, std::move(p));
  }

  friend bool operator==(const Channel& a, const Channel& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.matrix_ == b.matrix_;
  }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<T> matrix_;
};

/// A distribution on a product alphabet, remembering the two factors so
/// marginals are well defined.
template <class T>
class Joint {
 public:
  Joint(Alphabet left, Alphabet right, Distribution<T> dist)
      : left_(std::move(left)), right_(std::move(right)), dist_(std::move(dist)) {
    if (dist_.alphabet() != product(left_, right_))
      throw ShapeError("joint: alphabet is not the product of its factors");
  }

  Joint(Alphabet left, Alphabet right, std::vector<T> probs)
      : Joint(left, right, Distribution<T>(product(left, right), std::move(probs))) {}

  const Alphabet& left() const { return left_; }
  const Alphabet& right() const { return right_; }
  const Distribution<T>& dist() const { return dist_; }
  const T& operator()(std::size_t x, std::size_t y) const {
    return dist_[pair_index(x, y, right_.size())];
  }

 private:
  Alphabet left_;
  Alphabet right_;
  Distribution<T> dist_;
};

// ---------------------------------------------------------------------------
// Structural morphisms

/// copy: X -> X (x) X, mapping x to (x,x) with probability one.
template <class T>
Channel<T> copy_channel(const Alphabet& x) {
  const std::size_t n = x.size();
  std::vector<T> m(n * n * n, scalar<T>::zero());
  for (std::size_t i = 0; i < n; ++i) m[pair_index(i, i, n) * n + i] = scalar<T>::one();
  return Channel<T>(x, product(x, x), std::move(m));
}

/// discard: X -> I, the all-ones row.
template <class T>
Channel<T> discard_channel(const Alphabet& x) {
  return Channel<T>(x, Alphabet::unit(), std::vector<T>(x.size(), scalar<T>::one()));
}

/// swap: X (x) Y -> Y (x) X, permuting the pairing.
template <class T>
Channel<T> swap_channel(const Alphabet& x, const Alphabet& y) {
  const std::size_t nx = x.size(), ny = y.size(), n = nx * ny;
  std::vector<std::size_t> fn(n);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) fn[pair_index(i, j, ny)] = pair_index(j, i, nx);
  return Channel<T>::from_function(product(x, y), product(y, x), fn);
}

/// A source is a one-column channel from the unit object.
template <class T>
Channel<T> as_channel(const Distribution<T>& p) {
  return Channel<T>(Alphabet::unit(), p.alphabet(), p.probs());
}

/// A source viewed as a constant channel that discards its input.
template <class T>
Channel<T> constant_channel(const Alphabet& source, const Distribution<T>& p) {
  std::vector<T> m(source.size() * p.size());
  for (std::size_t y = 0; y < p.size(); ++y)
    for (std::size_t x = 0; x < source.size(); ++x) m[y * source.size() + x] = p[y];
  return Channel<T>(source, p.alphabet(), std::move(m));
}

// ---------------------------------------------------------------------------
// Composition and tensor

/// Chapman-Kolmogorov composition: (g.f)(z|x) = sum_y g(z|y) f(y|x).
template <class T>
Channel<T> compose(const Channel<T>& g, const Channel<T>& f) {
  if (f.target() != g.source())
    throw CompositionError("compose: inner alphabets do not match");
  const std::size_t n = f.source_size(), k = f.target_size(), m = g.target_size();
  std::vector<T> out(m * n, scalar<T>::zero());
  for (std::size_t z = 0; z < m; ++z)
    for (std::size_t y = 0; y < k; ++y) {
      const T& gzy = g(z, y);
      if (gzy == scalar<T>::zero()) continue;
      for (std::size_t x = 0; x < n; ++x) out[z * n + x] += gzy * f(y, x);
    }
  return Channel<T>(f.source(), g.target(), std::move(out));
}

/// Applies a channel to a source: the distribution f.p on the target.
template <class T>
Distribution<T> apply(const Channel<T>& f, const Distribution<T>& p) {
  if (f.source() != p.alphabet()) throw CompositionError("apply: alphabet mismatch");
  std::vector<T> out(f.target_size(), scalar<T>::zero());
  for (std::size_t y = 0; y < f.target_size(); ++y)
    for (std::size_t x = 0; x < p.size(); ++x) out[y] += f(y, x) * p[x];
  return Distribution<T>(f.target(), std::move(out));
}

/// Tensor of channels: entries are products of the component entries.
template <class T>
Channel<T> tensor(const Channel<T>& f, const Channel<T>& h) {
  const std::size_t nx = f.source_size(), na = h.source_size();
  const std::size_t my = f.target_size(), mb = h.target_size();
  std::vector<T> out(nx * na * my * mb);
  const std::size_t cols = nx * na;
  for (std::size_t y = 0; y < my; ++y)
    for (std::size_t b = 0; b < mb; ++b)
      for (std::size_t x = 0; x < nx; ++x)
        for (std::size_t a = 0; a < na; ++a)
          out[pair_index(y, b, mb) * cols + pair_index(x, a, na)] = f(y, x) * h(b, a);
  return Channel<T>(product(f.source(), h.source()), product(f.target(), h.target()),
                    std::move(out));
}

/// Product source p (x) q.
template <class T>
Joint<T> tensor(const Distribution<T>& p, const Distribution<T>& q) {
  std::vector<T> out(p.size() * q.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) out[pair_index(x, y, q.size())] = p[x] * q[y];
  return Joint<T>(p.alphabet(), q.alphabet(), std::move(out));
}

// ---------------------------------------------------------------------------
// Joints and marginals

/// Joint source of p and f: fp(x,y) = p(x) f(y|x).
template <class T>
Joint<T> joint(const Distribution<T>& p, const Channel<T>& f) {
  if (f.source() != p.alphabet()) throw CompositionError("joint: alphabet mismatch");
  const std::size_t n = p.size(), m = f.target_size();
  std::vector<T> out(n * m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < m; ++y) out[pair_index(x, y, m)] = p[x] * f(y, x);
  return Joint<T>(p.alphabet(), f.target(), std::move(out));
}

/// Joint morphism of p: A -> X and f: X (x) A -> Y, giving A -> X (x) Y with
/// entries p(x|a) f(y|x,a).
template <class T>
Channel<T> joint_channel(const Channel<T>& p, const Channel<T>& f) {
  const Alphabet& a_alpha = p.source();
  const Alphabet& x_alpha = p.target();
  if (f.source() != product(x_alpha, a_alpha))
    throw CompositionError("joint_channel: f must have source X (x) A");
  const std::size_t na = a_alpha.size(), nx = x_alpha.size(), ny = f.target_size();
  std::vector<T> out(nx * ny * na);
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y)
        out[pair_index(x, y, ny) * na + a] = p(x, a) * f(y, pair_index(x, a, na));
  return Channel<T>(a_alpha, product(x_alpha, f.target()), std::move(out));
}

/// Both marginals of a joint source, by row/column sums.
template <class T>
std::pair<Distribution<T>, Distribution<T>> marginals(const Joint<T>& r) {
  const std::size_t nx = r.left().size(), ny = r.right().size();
  std::vector<T> px(nx, scalar<T>::zero()), py(ny, scalar<T>::zero());
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      px[x] += r(x, y);
      py[y] += r(x, y);
    }
  return {Distribution<T>(r.left(), std::move(px)), Distribution<T>(r.right(), std::move(py))};
}

/// Marginal channels of h: A -> X (x) Y, summing out one factor per column.
template <class T>
std::pair<Channel<T>, Channel<T>> channel_marginals(const Channel<T>& h, const Alphabet& x_alpha,
                                                    const Alphabet& y_alpha) {
  const std::size_t nx = x_alpha.size(), ny = y_alpha.size();
  if (h.target() != product(x_alpha, y_alpha))
    throw ShapeError("channel_marginals: target is not the stated product");
  const std::size_t na = h.source_size();
  std::vector<T> mx(nx * na, scalar<T>::zero()), my(ny * na, scalar<T>::zero());
  for (std::size_t a = 0; a < na; ++a)
    for (std::size_t x = 0; x < nx; ++x)
      for (std::size_t y = 0; y < ny; ++y) {
        const T& v = h(pair_index(x, y, ny), a);
        mx[x * na + a] += v;
        my[y * na + a] += v;
      }
  return {Channel<T>(h.source(), x_alpha, std::move(mx)),
          Channel<T>(h.source(), y_alpha, std::move(my))};
}

// ---------------------------------------------------------------------------
// Determinism and almost-sure equality

/// Entrywise test: all entries within tol of {0,1}.
template <class T>
bool is_zero_one(const Channel<T>& f, double tol = 1e-9) {
  const T t = scalar<T>::from_double(tol);
  for (const auto& v : f.matrix()) {
    if (scalar<T>::abs(v) > t && scalar<T>::abs(v - scalar<T>::one()) > t) return false;
  }
  return true;
}

/// Categorical test: copy.f == (f (x) f).copy entrywise within tol. On finite
/// alphabets this agrees with is_zero_one.
template <class T>
bool is_deterministic(const Channel<T>& f, double tol = 1e-9) {
  const Channel<T> lhs = compose(copy_channel<T>(f.target()), f);
  const Channel<T> rhs = compose(tensor(f, f), copy_channel<T>(f.source()));
  const T t = scalar<T>::from_double(tol);
  for (std::size_t i = 0; i < lhs.matrix().size(); ++i)
    if (scalar<T>::abs(lhs.matrix()[i] - rhs.matrix()[i]) > t) return false;
  return true;
}

/// f and g agree p-almost surely: p(x) f(y|x) == p(x) g(y|x) within tol.
template <class T>
bool as_equal(const Channel<T>& f, const Channel<T>& g, const Distribution<T>& p,
              double tol = 1e-9) {
  if (f.source() != g.source() || f.target() != g.target())
    throw ShapeError("as_equal: channel shapes differ");
  if (f.source() != p.alphabet()) throw ShapeError("as_equal: source does not match p");
  const T t = scalar<T>::from_double(tol);
  for (std::size_t x = 0; x < f.source_size(); ++x)
    for (std::size_t y = 0; y < f.target_size(); ++y)
      if (scalar<T>::abs(p[x] * (f(y, x) - g(y, x))) > t) return false;
  return true;
}

}  // namespace divstoch
