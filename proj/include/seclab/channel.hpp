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

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "seclab/pmf.hpp"

namespace seclab {

/// A discrete memoryless channel: one Pmf over outputs per input symbol.
///
/// Composite inputs or outputs (pairs such as (Y,Z) or (S,U)) are flattened
/// row-major: the pair (a, b) with b ranging over an alphabet of size nb maps
/// to index a*nb + b.
class Channel {
 public:
  Channel() = default;

  Channel(std::size_t input_size, std::size_t output_size,
          std::vector<double> row_major)
      : input_size_(input_size), output_size_(output_size) {
    if (input_size == 0 || output_size == 0) {
      throw std::invalid_argument("Channel: zero alphabet size");
    }
    if (row_major.size() != input_size * output_size) {
      throw std::invalid_argument("Channel: matrix shape mismatch");
    }
    rows_.reserve(input_size);
    for (std::size_t i = 0; i < input_size; ++i) {
      rows_.emplace_back(std::vector<double>(
          row_major.begin() + static_cast<std::ptrdiff_t>(i * output_size),
          row_major.begin() + static_cast<std::ptrdiff_t>((i + 1) * output_size)));
    }
  }

  explicit Channel(std::vector<Pmf> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("Channel: no rows");
    input_size_ = rows_.size();
    output_size_ = rows_.front().size();
    for (const Pmf& r : rows_) {
      if (r.size() != output_size_) {
        throw std::invalid_argument("Channel: ragged rows");
      }
    }
  }

  /// Binary symmetric channel with crossover probability p.
  static Channel bsc(double p) {
    return Channel(2, 2, {1.0 - p, p, p, 1.0 - p});
  }

  /// Identity channel on an alphabet of the given size.
  static Channel identity(std::size_t size) {
    std::vector<double> m(size * size, 0.0);
    for (std::size_t i = 0; i < size; ++i) m[i * size + i] = 1.0;
    return Channel(size, size, std::move(m));
  }

  /// Deterministic map input -> table[input].
  static Channel deterministic(std::size_t output_size,
                               const std::vector<std::size_t>& table) {
    std::vector<double> m(table.size() * output_size, 0.0);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table[i] >= output_size) {
        throw std::invalid_argument("Channel: deterministic table out of range");
      }
      m[i * output_size + table[i]] = 1.0;
    }
    return Channel(table.size(), output_size, std::move(m));
  }

  std::size_t input_size() const { return input_size_; }
  std::size_t output_size() const { return output_size_; }
  const Pmf& row(std::size_t i) const { return rows_.at(i); }
  double operator()(std::size_t out, std::size_t in) const {
    return rows_[in][out];
  }

  /// Output marginal when the input is distributed as `input`.
  Pmf push(const Pmf& input) const {
    if (input.size() != input_size_) {
      throw std::invalid_argument("Channel::push: input size mismatch");
    }
    std::vector<double> out(output_size_, 0.0);
    for (std::size_t i = 0; i < input_size_; ++i) {
      const double pi = input[i];
      if (pi == 0.0) continue;
      for (std::size_t o = 0; o < output_size_; ++o) {
        out[o] += pi * rows_[i][o];
      }
    }
    return Pmf(std::move(out));
  }

  /// Cascade: this (A->B) followed by `next` (B->C), yielding A->C.
  Channel then(const Channel& next) const {
    if (next.input_size() != output_size_) {
      throw std::invalid_argument("Channel::then: size mismatch");
    }
    std::vector<double> m(input_size_ * next.output_size(), 0.0);
    for (std::size_t a = 0; a < input_size_; ++a) {
      for (std::size_t b = 0; b < output_size_; ++b) {
        const double pab = rows_[a][b];
        if (pab == 0.0) continue;
        for (std::size_t c = 0; c < next.output_size(); ++c) {
          m[a * next.output_size() + c] += pab * next(c, b);
        }
      }
    }
    return Channel(input_size_, next.output_size(), std::move(m));
  }

  /// Posterior channel output -> input under `prior` (Bayes inversion).
  /// Outputs with zero marginal get a uniform row; they carry no mass.
  Channel bayes_invert(const Pmf& prior) const {
    const Pmf out = push(prior);
    std::vector<double> m(output_size_ * input_size_, 0.0);
    for (std::size_t o = 0; o < output_size_; ++o) {
      if (out[o] > 0.0) {
        for (std::size_t i = 0; i < input_size_; ++i) {
          m[o * input_size_ + i] = prior[i] * rows_[i][o] / out[o];
        }
      } else {
        for (std::size_t i = 0; i < input_size_; ++i) {
          m[o * input_size_ + i] = 1.0 / static_cast<double>(input_size_);
        }
      }
    }
    return Channel(output_size_, input_size_, std::move(m));
  }

 private:
  std::size_t input_size_ = 0;
  std::size_t output_size_ = 0;
  std::vector<Pmf> rows_;
};

/// A broadcast channel X -> (Y, Z) stored with the output pair flattened
/// row-major (index y*z_size + z), remembering the component sizes.
struct Broadcast {
  Channel yz;
  std::size_t y_size = 0;
  std::size_t z_size = 0;

  Broadcast() = default;
  Broadcast(Channel yz_in, std::size_t ny, std::size_t nz)
      : yz(std::move(yz_in)), y_size(ny), z_size(nz) {
    if (yz.output_size() != y_size * z_size) {
      throw std::invalid_argument("Broadcast: output size != y_size*z_size");
    }
  }

  /// Independent component channels: P(y,z|x) = P(y|x) P(z|x).
  static Broadcast product(const Channel& bob, const Channel& eve) {
    if (bob.input_size() != eve.input_size()) {
      throw std::invalid_argument("Broadcast::product: input size mismatch");
    }
    const std::size_t nx = bob.input_size();
    const std::size_t ny = bob.output_size();
    const std::size_t nz = eve.output_size();
    std::vector<double> m(nx * ny * nz, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < ny; ++y) {
        for (std::size_t z = 0; z < nz; ++z) {
          m[x * ny * nz + y * nz + z] = bob(y, x) * eve(z, x);
        }
      }
    }
    return Broadcast(Channel(nx, ny * nz, std::move(m)), ny, nz);
  }

  std::size_t input_size() const { return yz.input_size(); }

  /// Marginal channel X -> Y.
  Channel marginal_y() const {
    const std::size_t nx = input_size();
    std::vector<double> m(nx * y_size, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t y = 0; y < y_size; ++y) {
        for (std::size_t z = 0; z < z_size; ++z) {
          m[x * y_size + y] += yz(y * z_size + z, x);
        }
      }
    }
    return Channel(nx, y_size, std::move(m));
  }

  /// Marginal channel X -> Z.
  Channel marginal_z() const {
    const std::size_t nx = input_size();
    std::vector<double> m(nx * z_size, 0.0);
    for (std::size_t x = 0; x < nx; ++x) {
      for (std::size_t z = 0; z < z_size; ++z) {
        for (std::size_t y = 0; y < y_size; ++y) {
          m[x * z_size + z] += yz(y * z_size + z, x);
        }
      }
    }
    return Channel(nx, z_size, std::move(m));
  }
};

}  // namespace seclab
