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
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "divstoch/errors.hpp"

namespace divstoch {

/// Finite ordered alphabet. The order is part of the identity: it indexes
/// matrix rows and columns everywhere else in the library.
class Alphabet {
 public:
  /// Labels must be pairwise distinct and nonempty as a list.
  explicit Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("alphabet must have at least one symbol");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
      if (!seen.insert(l).second) throw ValidationError("duplicate alphabet symbol: " + l);
    }
  }

  /// Anonymous alphabet {0, 1, ..., n-1}.
  static Alphabet indexed(std::size_t n, const std::string& prefix = "") {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return Alphabet(std::move(labels));
  }

  /// The unit alphabet I (one point).
  static Alphabet unit() { return Alphabet({"*"}); }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.labels_ == b.labels_; }
  friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

 private:
  std::vector<std::string> labels_;
};

/// Row-major pairing: index(x, y) = x * |Y| + y, fixed globally.
inline std::size_t pair_index(std::size_t x, std::size_t y, std::size_t ny) {
  return x * ny + y;
}

/// Product alphabet X (x) Y with row-major label order.
inline Alphabet product(const Alphabet& x, const Alphabet& y) {
  std::vector<std::string> labels;
  labels.reserve(x.size() * y.size());
  for (const auto& a : x.labels())
    for (const auto& b : y.labels()) labels.push_back(a + "," + b);
  return Alphabet(std::move(labels));
}

}  // namespace divstoch
