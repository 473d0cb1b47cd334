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

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace seclab {

/// A per-letter distortion measure d(source symbol, reconstruction symbol).
class DistortionMeasure {
 public:
  DistortionMeasure() = default;

  DistortionMeasure(std::size_t source_size, std::size_t recon_size,
                    std::vector<double> row_major)
      : source_size_(source_size),
        recon_size_(recon_size),
        d_(std::move(row_major)) {
    if (d_.size() != source_size_ * recon_size_ || d_.empty()) {
      throw std::invalid_argument("DistortionMeasure: shape mismatch");
    }
    for (double v : d_) {
      if (!(v >= 0.0)) {
        throw std::invalid_argument("DistortionMeasure: negative entry");
      }
    }
    d_max_ = *std::max_element(d_.begin(), d_.end());
  }

  static DistortionMeasure hamming(std::size_t size) {
    std::vector<double> m(size * size, 1.0);
    for (std::size_t i = 0; i < size; ++i) m[i * size + i] = 0.0;
    return DistortionMeasure(size, size, std::move(m));
  }

  std::size_t source_size() const { return source_size_; }
  std::size_t recon_size() const { return recon_size_; }
  double d_max() const { return d_max_; }
  double operator()(std::size_t s, std::size_t a) const {
    return d_[s * recon_size_ + a];
  }

 private:
  std::size_t source_size_ = 0;
  std::size_t recon_size_ = 0;
  std::vector<double> d_;
  double d_max_ = 0.0;
};

/// A deterministic reconstruction map (a, y) -> s_hat stored as a flat
/// lookup table indexed a*y_size + y. The first argument is the codeword
/// symbol the decoder committed to (U for the basic hybrid scheme, V for
/// the superposition scheme).
struct PhiMap {
  std::size_t a_size = 0;
  std::size_t y_size = 0;
  std::size_t shat_size = 0;
  std::vector<std::size_t> table;

  PhiMap() = default;
  PhiMap(std::size_t a, std::size_t y, std::size_t shat,
         std::vector<std::size_t> t)
      : a_size(a), y_size(y), shat_size(shat), table(std::move(t)) {
    if (table.size() != a_size * y_size) {
      throw std::invalid_argument("PhiMap: table must cover all of A x Y");
    }
    for (std::size_t v : table) {
      if (v >= shat_size) {
        throw std::invalid_argument("PhiMap: entry out of range");
      }
    }
  }

  std::size_t operator()(std::size_t a, std::size_t y) const {
    return table[a * y_size + y];
  }
};

}  // namespace seclab
