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
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "seclab/channel.hpp"
#include "seclab/pmf.hpp"

namespace seclab {

/// A joint distribution over named finite variables, stored as a dense
/// row-major array. Composite variables (flattened pairs) are split back
/// into their components with split_var, which is a pure reshape.
class JointDist {
 public:
  JointDist() = default;

  JointDist(std::vector<std::string> names, std::vector<std::size_t> shape,
            std::vector<double> mass)
      : names_(std::move(names)), shape_(std::move(shape)), mass_(std::move(mass)) {
    if (names_.size() != shape_.size() || shape_.empty()) {
      throw std::invalid_argument("JointDist: names/shape mismatch");
    }
    std::size_t cells = 1;
    for (std::size_t s : shape_) {
      if (s == 0) throw std::invalid_argument("JointDist: zero-size variable");
      cells *= s;
    }
    if (mass_.size() != cells) {
      throw std::invalid_argument("JointDist: mass size mismatch");
    }
    double sum = 0.0;
    for (double v : mass_) {
      if (!(v >= 0.0)) throw std::invalid_argument("JointDist: negative mass");
      sum += v;
    }
    if (std::abs(sum - 1.0) > kProbSumTol) {
      throw std::invalid_argument("JointDist: total mass " + std::to_string(sum));
    }
    for (double& v : mass_) v /= sum;
    rebuild_strides();
  }

  const std::vector<std::string>& names() const { return names_; }
  const std::vector<std::size_t>& shape() const { return shape_; }
  const std::vector<double>& mass() const { return mass_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t cells() const { return mass_.size(); }
  std::size_t stride(std::size_t dim) const { return strides_[dim]; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return i;
    }
    throw std::invalid_argument("JointDist: no variable named " + name);
  }

  std::vector<std::size_t> indices_of(std::span<const std::string> names) const {
    std::vector<std::size_t> out;
    out.reserve(names.size());
    for (const auto& n : names) out.push_back(index_of(n));
    return out;
  }

  /// Marginal over the listed variables, kept in the listed order.
  JointDist marginal(std::span<const std::size_t> keep) const {
    check_vars(keep);
    std::vector<std::string> names;
    std::vector<std::size_t> shape;
    for (std::size_t v : keep) {
      names.push_back(names_[v]);
      shape.push_back(shape_[v]);
    }
    std::vector<double> out(product(shape), 0.0);
    // out_stride[d] = stride of full-dim d inside the output array (0 if dropped)
    std::vector<std::size_t> out_stride(rank(), 0);
    {
      std::size_t s = 1;
      for (std::size_t i = keep.size(); i-- > 0;) {
        out_stride[keep[i]] = s;
        s *= shape_[keep[i]];
      }
    }
    std::vector<std::size_t> idx(rank(), 0);
    std::size_t oi = 0;
    for (std::size_t flat = 0; flat < mass_.size(); ++flat) {
      out[oi] += mass_[flat];
      // odometer increment
      for (std::size_t d = rank(); d-- > 0;) {
        oi += out_stride[d];
        if (++idx[d] < shape_[d]) break;
        idx[d] = 0;
        oi -= out_stride[d] * shape_[d];
      }
    }
    return JointDist(std::move(names), std::move(shape), std::move(out));
  }

  JointDist marginal(std::span<const std::string> keep) const {
    return marginal(std::span<const std::size_t>(indices_of(keep)));
  }
  JointDist marginal(std::initializer_list<std::string> keep) const {
    return marginal(std::span<const std::string>(keep.begin(), keep.size()));
  }

  /// Conditional distribution of the remaining variables given var = value.
  JointDist condition(std::size_t var, std::size_t value) const {
    if (var >= rank() || value >= shape_[var]) {
      throw std::invalid_argument("JointDist::condition: out of range");
    }
    if (rank() == 1) {
      throw std::invalid_argument("JointDist::condition: nothing left to keep");
    }
    std::vector<std::string> names;
    std::vector<std::size_t> shape;
    for (std::size_t d = 0; d < rank(); ++d) {
      if (d == var) continue;
      names.push_back(names_[d]);
      shape.push_back(shape_[d]);
    }
    std::vector<double> out;
    out.reserve(product(shape));
    std::vector<std::size_t> idx(rank(), 0);
    double total = 0.0;
    for (std::size_t flat = 0; flat < mass_.size(); ++flat) {
      if (idx[var] == value) {
        out.push_back(mass_[flat]);
        total += mass_[flat];
      }
      for (std::size_t d = rank(); d-- > 0;) {
        if (++idx[d] < shape_[d]) break;
        idx[d] = 0;
      }
    }
    if (total <= 0.0) {
      throw std::invalid_argument(
          "JointDist::condition: conditioning event has zero probability");
    }
    for (double& v : out) v /= total;
    return JointDist(std::move(names), std::move(shape), std::move(out));
  }

  JointDist condition(const std::string& var, std::size_t value) const {
    return condition(index_of(var), value);
  }

  /// Reshape one composite variable into several components (row-major
  /// flattening is assumed, so the mass array is unchanged).
  JointDist split_var(std::size_t var, std::span<const std::size_t> sizes,
                      std::span<const std::string> new_names) const {
    if (var >= rank() || sizes.size() != new_names.size() || sizes.empty()) {
      throw std::invalid_argument("JointDist::split_var: bad arguments");
    }
    if (product(sizes) != shape_[var]) {
      throw std::invalid_argument(
          "JointDist::split_var: component sizes do not factor the variable");
    }
    std::vector<std::string> names;
    std::vector<std::size_t> shape;
    for (std::size_t d = 0; d < rank(); ++d) {
      if (d == var) {
        names.insert(names.end(), new_names.begin(), new_names.end());
        shape.insert(shape.end(), sizes.begin(), sizes.end());
      } else {
        names.push_back(names_[d]);
        shape.push_back(shape_[d]);
      }
    }
    return JointDist(std::move(names), std::move(shape), mass_);
  }

  JointDist split_var(const std::string& var,
                      std::initializer_list<std::size_t> sizes,
                      std::initializer_list<std::string> new_names) const {
    return split_var(index_of(var),
                     std::span<const std::size_t>(sizes.begin(), sizes.size()),
                     std::span<const std::string>(new_names.begin(), new_names.size()));
  }

  void check_vars(std::span<const std::size_t> vars) const {
    for (std::size_t v : vars) {
      if (v >= rank()) throw std::invalid_argument("JointDist: variable index out of range");
    }
  }

  static std::size_t product(std::span<const std::size_t> v) {
    std::size_t p = 1;
    for (std::size_t s : v) p *= s;
    return p;
  }

 private:
  void rebuild_strides() {
    strides_.assign(rank(), 1);
    for (std::size_t d = rank() - 1; d-- > 0;) {
      strides_[d] = strides_[d + 1] * shape_[d + 1];
    }
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> shape_;
  std::vector<double> mass_;
  std::vector<std::size_t> strides_;
};

/// One factor of a chained factorization: a new variable drawn from either a
/// marginal Pmf or a Channel conditioned on previously introduced variables
/// (flattened row-major in the order listed in `given`).
struct JointComponent {
  std::string name;
  std::variant<Pmf, Channel> law;
  std::vector<std::size_t> given;
};

/// Multiplies chained components into the full joint distribution.
inline JointDist build_joint(const std::vector<JointComponent>& comps) {
  if (comps.empty()) throw std::invalid_argument("build_joint: no components");
  std::vector<std::string> names;
  std::vector<std::size_t> shape;
  std::vector<double> mass{1.0};
  for (const auto& comp : comps) {
    for (std::size_t g : comp.given) {
      if (g >= names.size()) {
        throw std::invalid_argument(
            "build_joint: conditioning index must reference an earlier variable");
      }
    }
    const std::size_t new_size = std::holds_alternative<Pmf>(comp.law)
                                     ? std::get<Pmf>(comp.law).size()
                                     : std::get<Channel>(comp.law).output_size();
    if (std::holds_alternative<Channel>(comp.law)) {
      std::size_t in = 1;
      for (std::size_t g : comp.given) in *= shape[g];
      if (std::get<Channel>(comp.law).input_size() != in) {
        throw std::invalid_argument("build_joint: channel input size " +
                                    std::to_string(std::get<Channel>(comp.law).input_size()) +
                                    " does not match conditioning alphabet " +
                                    std::to_string(in));
      }
    } else if (!comp.given.empty()) {
      throw std::invalid_argument("build_joint: a Pmf component cannot be conditioned");
    }

    const std::size_t old_cells = mass.size();
    std::vector<double> next(old_cells * new_size);
    std::vector<std::size_t> idx(shape.size(), 0);
    for (std::size_t flat = 0; flat < old_cells; ++flat) {
      std::size_t cond = 0;
      for (std::size_t g : comp.given) cond = cond * shape[g] + idx[g];
      for (std::size_t v = 0; v < new_size; ++v) {
        const double f = std::holds_alternative<Pmf>(comp.law)
                             ? std::get<Pmf>(comp.law)[v]
                             : std::get<Channel>(comp.law)(v, cond);
        next[flat * new_size + v] = mass[flat] * f;
      }
      for (std::size_t d = shape.size(); d-- > 0;) {
        if (++idx[d] < shape[d]) break;
        idx[d] = 0;
      }
    }
    mass = std::move(next);
    names.push_back(comp.name);
    shape.push_back(new_size);
  }
  return JointDist(std::move(names), std::move(shape), std::move(mass));
}

/// Convenience builder with name-based conditioning.
class JointBuilder {
 public:
  JointBuilder& add(const std::string& name, Pmf p) {
    comps_.push_back({name, std::move(p), {}});
    return *this;
  }
  JointBuilder& add(const std::string& name, Channel c,
                    std::initializer_list<std::string> given) {
    std::vector<std::size_t> idx;
    for (const auto& g : given) idx.push_back(find(g));
    comps_.push_back({name, std::move(c), std::move(idx)});
    return *this;
  }
  JointDist build() const { return build_joint(comps_); }

 private:
  std::size_t find(const std::string& name) const {
    for (std::size_t i = 0; i < comps_.size(); ++i) {
      if (comps_[i].name == name) return i;
    }
    throw std::invalid_argument("JointBuilder: unknown variable " + name);
  }
  std::vector<JointComponent> comps_;
};

namespace detail {
inline void check_disjoint(std::span<const std::size_t> a,
                           std::span<const std::size_t> b) {
  for (std::size_t x : a) {
    for (std::size_t y : b) {
      if (x == y) {
        throw std::invalid_argument("variable groups must be disjoint");
      }
    }
  }
}
inline std::vector<std::size_t> concat(std::span<const std::size_t> a,
                                       std::span<const std::size_t> b) {
  std::vector<std::size_t> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}
}  // namespace detail

/// Entropy (bits) of the marginal over a group of variables.
inline double entropy_of(const JointDist& j, std::span<const std::size_t> vars) {
  if (vars.empty()) return 0.0;
  return entropy(std::span(j.marginal(vars).mass()));
}

/// I(A;B) in bits; groups must be disjoint.
inline double mutual_information(const JointDist& j,
                                 std::span<const std::size_t> group_a,
                                 std::span<const std::size_t> group_b) {
  j.check_vars(group_a);
  j.check_vars(group_b);
  detail::check_disjoint(group_a, group_b);
  const double ha = entropy_of(j, group_a);
  const double hb = entropy_of(j, group_b);
  const double hab = entropy_of(j, detail::concat(group_a, group_b));
  return std::max(0.0, ha + hb - hab);
}

/// I(A;B|C) in bits; the three groups must be pairwise disjoint.
inline double conditional_mutual_information(const JointDist& j,
                                             std::span<const std::size_t> group_a,
                                             std::span<const std::size_t> group_b,
                                             std::span<const std::size_t> group_c) {
  if (group_c.empty()) return mutual_information(j, group_a, group_b);
  j.check_vars(group_a);
  j.check_vars(group_b);
  j.check_vars(group_c);
  detail::check_disjoint(group_a, group_b);
  detail::check_disjoint(group_a, group_c);
  detail::check_disjoint(group_b, group_c);
  const double hac = entropy_of(j, detail::concat(group_a, group_c));
  const double hbc = entropy_of(j, detail::concat(group_b, group_c));
  const double hc = entropy_of(j, group_c);
  const double habc =
      entropy_of(j, detail::concat(detail::concat(group_a, group_b), group_c));
  return std::max(0.0, hac + hbc - hc - habc);
}

// Name-based overloads.
inline double mutual_information(const JointDist& j,
                                 std::initializer_list<std::string> a,
                                 std::initializer_list<std::string> b) {
  auto ia = j.indices_of(std::span<const std::string>(a.begin(), a.size()));
  auto ib = j.indices_of(std::span<const std::string>(b.begin(), b.size()));
  return mutual_information(j, std::span<const std::size_t>(ia),
                            std::span<const std::size_t>(ib));
}
inline double conditional_mutual_information(const JointDist& j,
                                             std::initializer_list<std::string> a,
                                             std::initializer_list<std::string> b,
                                             std::initializer_list<std::string> c) {
  auto ia = j.indices_of(std::span<const std::string>(a.begin(), a.size()));
  auto ib = j.indices_of(std::span<const std::string>(b.begin(), b.size()));
  auto ic = j.indices_of(std::span<const std::string>(c.begin(), c.size()));
  return conditional_mutual_information(j, std::span<const std::size_t>(ia),
                                        std::span<const std::size_t>(ib),
                                        std::span<const std::size_t>(ic));
}

/// Total variation distance (1/2) sum |a - b| over cells; requires equal shapes.
inline double tv_distance(const JointDist& a, const JointDist& b) {
  if (a.shape() != b.shape()) {
    throw std::invalid_argument("tv_distance: shape mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.cells(); ++i) {
    s += std::abs(a.mass()[i] - b.mass()[i]);
  }
  return 0.5 * s;
}

}  // namespace seclab
