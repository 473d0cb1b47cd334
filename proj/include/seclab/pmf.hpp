// Copyright 2026 The Secrecy Lab Authors
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

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace seclab {

/// Tolerance for validating that probability vectors sum to one.
inline constexpr double kProbSumTol = 1e-9;

/// A probability mass function over a finite alphabet {0, ..., size-1}.
///
/// Entries are validated on construction (nonnegative, summing to one
/// within kProbSumTol) and renormalized exactly once so that downstream
/// exact enumerations start from mass that sums to 1.
class Pmf {
 public:
  Pmf() = default;

  explicit Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
      throw std::invalid_argument("Pmf: empty probability vector");
    }
    double sum = 0.0;
    for (double p : probs_) {
      if (!(p >= 0.0)) {
        throw std::invalid_argument("Pmf: negative or NaN entry " +
                                    std::to_string(p));
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
      throw std::invalid_argument("Pmf: entries sum to " + std::to_string(sum) +
                                  ", expected 1");
    }
    for (double& p : probs_) p /= sum;
  }

  Pmf(std::initializer_list<double> probs)
      : Pmf(std::vector<double>(probs)) {}

  /// Point mass on `symbol`.
  static Pmf degenerate(std::size_t size, std::size_t symbol) {
    std::vector<double> v(size, 0.0);
    v.at(symbol) = 1.0;
    return Pmf(std::move(v));
  }

  static Pmf uniform(std::size_t size) {
    return Pmf(std::vector<double>(size, 1.0 / static_cast<double>(size)));
  }

  /// Bernoulli(p) as [1-p, p]; symbol 1 carries probability p.
  static Pmf bernoulli(double p) { return Pmf({1.0 - p, p}); }

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  const std::vector<double>& probs() const { return probs_; }

 private:
  std::vector<double> probs_;
};

/// Shannon entropy in bits, with 0 log 0 := 0.
inline double entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

inline double entropy(const Pmf& p) { return entropy(std::span(p.probs())); }

/// Binary entropy h(p) in bits.
inline double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

}  // namespace seclab
