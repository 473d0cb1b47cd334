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
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "seclab/channel.hpp"
#include "seclab/distortion.hpp"
#include "seclab/joint.hpp"
#include "seclab/pmf.hpp"

namespace seclab {

// Mutual informations this small are treated as exactly zero when they appear
// as the denominator of a transition fraction; the two distortion terms being
// mixed coincide there, so the fraction is set to 1 for determinism.
inline constexpr double kDegenerateMiTol = 1e-13;

/// Basic hybrid coding: codeword variable U drawn from the source, channel
/// input X a stochastic symbol-by-symbol function of (S, U), reconstruction
/// phi(U, Y). p_x_given_su is conditioned on (S, U) flattened row-major.
struct SchemeISpec {
  Pmf p_s;
  Channel p_u_given_s;
  Channel p_x_given_su;
  Broadcast bc;
  PhiMap phi;
  DistortionMeasure dist;

  std::size_t s_size() const { return p_s.size(); }
  std::size_t u_size() const { return p_u_given_s.output_size(); }
  std::size_t x_size() const { return bc.input_size(); }

  void validate() const {
    if (p_u_given_s.input_size() != s_size() ||
        p_x_given_su.input_size() != s_size() * u_size() ||
        p_x_given_su.output_size() != x_size()) {
      throw std::invalid_argument("SchemeISpec: alphabet chain mismatch");
    }
    if (phi.a_size != u_size() || phi.y_size != bc.y_size ||
        phi.shat_size != dist.recon_size() || dist.source_size() != s_size()) {
      throw std::invalid_argument("SchemeISpec: phi/distortion mismatch");
    }
  }
};

/// Operationally separate source-channel coding. The source-side variables
/// (S, Shat, U1) are independent of the channel-side variables
/// (U2, V2, X, Y, Z) by construction, so they live in separate joints.
struct SchemeOSpec {
  Pmf p_s;
  Channel p_shat_given_s;
  Channel p_u1_given_shat;
  Pmf p_u2;
  Channel p_v2_given_u2;
  Channel p_x_given_v2;
  Broadcast bc;
  DistortionMeasure dist;

  std::size_t s_size() const { return p_s.size(); }
  std::size_t shat_size() const { return p_shat_given_s.output_size(); }
  std::size_t u1_size() const { return p_u1_given_shat.output_size(); }
  std::size_t u2_size() const { return p_u2.size(); }
  std::size_t v2_size() const { return p_v2_given_u2.output_size(); }

  void validate() const {
    if (p_shat_given_s.input_size() != s_size() ||
        p_u1_given_shat.input_size() != shat_size() ||
        p_v2_given_u2.input_size() != u2_size() ||
        p_x_given_v2.input_size() != v2_size() ||
        p_x_given_v2.output_size() != bc.input_size()) {
      throw std::invalid_argument("SchemeOSpec: alphabet chain mismatch");
    }
    if (dist.source_size() != s_size() || dist.recon_size() != shat_size()) {
      throw std::invalid_argument("SchemeOSpec: distortion shape mismatch");
    }
  }
};

/// Superposition hybrid coding: cloud center U superimposed on V, channel
/// input from (S, U, V). p_x_given_suv is conditioned on (S, U, V) flattened
/// row-major; reconstruction is phi(V, Y).
struct SchemeIISpec {
  Pmf p_s;
  Channel p_v_given_s;
  Channel p_u_given_v;
  Channel p_x_given_suv;
  Broadcast bc;
  PhiMap phi;
  DistortionMeasure dist;

  std::size_t s_size() const { return p_s.size(); }
  std::size_t v_size() const { return p_v_given_s.output_size(); }
  std::size_t u_size() const { return p_u_given_v.output_size(); }
  std::size_t x_size() const { return bc.input_size(); }

  void validate() const {
    if (p_v_given_s.input_size() != s_size() ||
        p_u_given_v.input_size() != v_size() ||
        p_x_given_suv.input_size() != s_size() * u_size() * v_size() ||
        p_x_given_suv.output_size() != x_size()) {
      throw std::invalid_argument("SchemeIISpec: alphabet chain mismatch");
    }
    if (phi.a_size != v_size() || phi.y_size != bc.y_size ||
        phi.shat_size != dist.recon_size() || dist.source_size() != s_size()) {
      throw std::invalid_argument("SchemeIISpec: phi/distortion mismatch");
    }
  }
};

/// One evaluated point of an achievability region.
struct RegionPoint {
  bool feasible = false;
  // Right-hand side minus left-hand side of the rate condition (the minimum
  // over both conditions for the separate scheme); positive means feasible.
  double rate_slack = 0.0;
  double d_b = 0.0;
  double d_e = 0.0;
  std::map<std::string, double> diagnostics;
};

/// min over reconstruction symbols a of E[d(S, a)] -- the distortion of the
/// best a-priori estimate, which no eavesdropper can be forced above.
inline double perfect_secrecy_bound(const Pmf& p_s, const DistortionMeasure& dist) {
  if (dist.source_size() != p_s.size()) {
    throw std::invalid_argument("perfect_secrecy_bound: size mismatch");
  }
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < dist.recon_size(); ++a) {
    double e = 0.0;
    for (std::size_t s = 0; s < p_s.size(); ++s) e += p_s[s] * dist(s, a);
    best = std::min(best, e);
  }
  return best;
}

namespace detail {

// sum over realized conditioning cells of min_a sum_s P(s, cond) d(s, a).
// The minimum over all estimator functions psi(cond) decomposes pointwise;
// argmin ties go to the lowest reconstruction index (irrelevant to the value).
inline double min_conditional_distortion(const JointDist& j, std::size_t s_var,
                                         std::vector<std::size_t> cond_vars,
                                         const DistortionMeasure& dist) {
  std::vector<std::size_t> keep{s_var};
  keep.insert(keep.end(), cond_vars.begin(), cond_vars.end());
  const JointDist m = j.marginal(std::span<const std::size_t>(keep));
  const std::size_t ns = m.shape()[0];
  const std::size_t ncond = m.cells() / ns;
  double total = 0.0;
  for (std::size_t c = 0; c < ncond; ++c) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < dist.recon_size(); ++a) {
      double e = 0.0;
      for (std::size_t s = 0; s < ns; ++s) {
        e += m.mass()[s * ncond + c] * dist(s, a);
      }
      best = std::min(best, e);
    }
    total += best;
  }
  return total;
}

// E[d(S, phi(A, Y))] over the marginal of (s_var, a_var, y_var).
inline double expected_phi_distortion(const JointDist& j, std::size_t s_var,
                                      std::size_t a_var, std::size_t y_var,
                                      const PhiMap& phi,
                                      const DistortionMeasure& dist) {
  const std::vector<std::size_t> keep{s_var, a_var, y_var};
  const JointDist m = j.marginal(std::span<const std::size_t>(keep));
  const std::size_t ns = m.shape()[0], na = m.shape()[1], ny = m.shape()[2];
  double total = 0.0;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t y = 0; y < ny; ++y) {
        total += m.mass()[(s * na + a) * ny + y] * dist(s, phi(a, y));
      }
    }
  }
  return total;
}

// E[d(S, Shat)] for two variables of a joint.
inline double expected_pair_distortion(const JointDist& j, std::size_t s_var,
                                       std::size_t shat_var,
                                       const DistortionMeasure& dist) {
  const std::vector<std::size_t> keep{s_var, shat_var};
  const JointDist m = j.marginal(std::span<const std::size_t>(keep));
  const std::size_t ns = m.shape()[0], nh = m.shape()[1];
  double total = 0.0;
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t a = 0; a < nh; ++a) {
      total += m.mass()[s * nh + a] * dist(s, a);
    }
  }
  return total;
}

// Transition fraction num/den clamped to [0,1]; a vanishing denominator means
// the two mixed distortion terms coincide, resolved as 1 for determinism.
inline double transition_fraction(double num, double den) {
  if (den <= kDegenerateMiTol) return 1.0;
  return std::min(std::max(num, 0.0) / den, 1.0);
}

inline void check_minima_order(double coarser, double finer) {
  if (finer > coarser + 1e-12) {
    throw std::logic_error(
        "conditional minimum exceeded its coarser counterpart");
  }
}

}  // namespace detail

/// Evaluates the basic hybrid scheme on the given single-letter distribution.
/// Infeasibility (rate condition not strictly satisfied beyond eps_rate) is a
/// result, not an error; the distortion formulas are reported regardless.
inline RegionPoint eval_scheme_i(const SchemeISpec& spec, double eps_rate = 0.0) {
  spec.validate();
  JointDist j = JointBuilder()
                    .add("S", spec.p_s)
                    .add("U", spec.p_u_given_s, {"S"})
                    .add("X", spec.p_x_given_su, {"S", "U"})
                    .add("YZ", spec.bc.yz, {"X"})
                    .build()
                    .split_var("YZ", {spec.bc.y_size, spec.bc.z_size}, {"Y", "Z"});

  const double mi_us = mutual_information(j, {"U"}, {"S"});
  const double mi_uy = mutual_information(j, {"U"}, {"Y"});
  const double mi_uz = mutual_information(j, {"U"}, {"Z"});
  const double cmi_su_z = conditional_mutual_information(j, {"S"}, {"U"}, {"Z"});

  const double beta = detail::transition_fraction(mi_uy - mi_uz, cmi_su_z);
  const std::size_t s = j.index_of("S"), u = j.index_of("U"),
                    y = j.index_of("Y"), z = j.index_of("Z");
  const double psi0 = detail::min_conditional_distortion(j, s, {z}, spec.dist);
  const double psi1 = detail::min_conditional_distortion(j, s, {u, z}, spec.dist);
  detail::check_minima_order(psi0, psi1);

  RegionPoint pt;
  pt.rate_slack = mi_uy - mi_us;
  pt.feasible = pt.rate_slack > eps_rate;
  pt.d_b = detail::expected_phi_distortion(j, s, u, y, spec.phi, spec.dist);
  pt.d_e = beta * psi0 + (1.0 - beta) * psi1;
  pt.diagnostics = {{"beta", beta},       {"mi_us", mi_us},
                    {"mi_uy", mi_uy},     {"mi_uz", mi_uz},
                    {"cmi_su_given_z", cmi_su_z},
                    {"psi0", psi0},       {"psi1", psi1},
                    {"w0", beta},         {"w1", 1.0 - beta}};
  return pt;
}

/// Evaluates the operationally separate scheme. Feasibility requires both the
/// public rate condition I(S;U1) < I(U2;Y) and the confidential condition
/// I(S;Shat|U1) < I(V2;Y|U2) - I(V2;Z|U2), each strict beyond eps_rate.
inline RegionPoint eval_scheme_o(const SchemeOSpec& spec, double eps_rate = 0.0) {
  spec.validate();
  JointDist src = JointBuilder()
                      .add("S", spec.p_s)
                      .add("Shat", spec.p_shat_given_s, {"S"})
                      .add("U1", spec.p_u1_given_shat, {"Shat"})
                      .build();
  JointDist ch = JointBuilder()
                     .add("U2", spec.p_u2)
                     .add("V2", spec.p_v2_given_u2, {"U2"})
                     .add("X", spec.p_x_given_v2, {"V2"})
                     .add("YZ", spec.bc.yz, {"X"})
                     .build()
                     .split_var("YZ", {spec.bc.y_size, spec.bc.z_size}, {"Y", "Z"});

  const double mi_su1 = mutual_information(src, {"S"}, {"U1"});
  const double cmi_sshat_u1 =
      conditional_mutual_information(src, {"S"}, {"Shat"}, {"U1"});
  const double mi_u2y = mutual_information(ch, {"U2"}, {"Y"});
  const double mi_u2z = mutual_information(ch, {"U2"}, {"Z"});
  const double secrecy_v2 =
      conditional_mutual_information(ch, {"V2"}, {"Y"}, {"U2"}) -
      conditional_mutual_information(ch, {"V2"}, {"Z"}, {"U2"});

  const double slack_pub = mi_u2y - mi_su1;
  const double slack_conf = secrecy_v2 - cmi_sshat_u1;
  const double eta = detail::transition_fraction(mi_u2y - mi_u2z, mi_su1);

  const std::size_t s = src.index_of("S");
  const double psi_prior = perfect_secrecy_bound(spec.p_s, spec.dist);
  const double psi_u1 = detail::min_conditional_distortion(
      src, s, {src.index_of("U1")}, spec.dist);
  detail::check_minima_order(psi_prior, psi_u1);

  RegionPoint pt;
  pt.rate_slack = std::min(slack_pub, slack_conf);
  pt.feasible = slack_pub > eps_rate && slack_conf > eps_rate;
  pt.d_b = detail::expected_pair_distortion(src, s, src.index_of("Shat"), spec.dist);
  pt.d_e = eta * psi_prior + (1.0 - eta) * psi_u1;
  pt.diagnostics = {{"eta", eta},
                    {"mi_su1", mi_su1},
                    {"mi_u2y", mi_u2y},
                    {"mi_u2z", mi_u2z},
                    {"cmi_sshat_given_u1", cmi_sshat_u1},
                    {"secrecy_v2", secrecy_v2},
                    {"slack_pub", slack_pub},
                    {"slack_conf", slack_conf},
                    {"psi_prior", psi_prior},
                    {"psi_u1", psi_u1},
                    // Boundary case the strictness rule resolves as infeasible:
                    // zero confidential need meeting zero confidential surplus.
                    {"eq_conf_boundary",
                     (cmi_sshat_u1 <= kDegenerateMiTol &&
                      std::abs(slack_conf) <= kDegenerateMiTol)
                         ? 1.0
                         : 0.0}};
  return pt;
}

/// Evaluates the superposition hybrid scheme.
inline RegionPoint eval_scheme_ii(const SchemeIISpec& spec, double eps_rate = 0.0) {
  spec.validate();
  JointDist j = JointBuilder()
                    .add("S", spec.p_s)
                    .add("V", spec.p_v_given_s, {"S"})
                    .add("U", spec.p_u_given_v, {"V"})
                    .add("X", spec.p_x_given_suv, {"S", "U", "V"})
                    .add("YZ", spec.bc.yz, {"X"})
                    .build()
                    .split_var("YZ", {spec.bc.y_size, spec.bc.z_size}, {"Y", "Z"});

  const double mi_vs = mutual_information(j, {"V"}, {"S"});
  const double mi_uvy = mutual_information(j, {"U", "V"}, {"Y"});
  const double mi_us = mutual_information(j, {"U"}, {"S"});
  const double mi_uy = mutual_information(j, {"U"}, {"Y"});
  const double mi_uz = mutual_information(j, {"U"}, {"Z"});
  const double cmi_su_z = conditional_mutual_information(j, {"S"}, {"U"}, {"Z"});
  const double cmi_vy_u = conditional_mutual_information(j, {"V"}, {"Y"}, {"U"});
  const double cmi_zv_u = conditional_mutual_information(j, {"Z"}, {"V"}, {"U"});
  const double cmi_sv_zu =
      conditional_mutual_information(j, {"S"}, {"V"}, {"Z", "U"});

  const double beta = detail::transition_fraction(mi_uy - mi_uz, cmi_su_z);
  const double r_s = std::min(cmi_vy_u, mi_uvy - mi_us);
  const double alpha = detail::transition_fraction(r_s - cmi_zv_u, cmi_sv_zu);

  const std::size_t s = j.index_of("S"), v = j.index_of("V"),
                    u = j.index_of("U"), y = j.index_of("Y"),
                    z = j.index_of("Z");
  const double psi0 = detail::min_conditional_distortion(j, s, {z}, spec.dist);
  const double psi1 = detail::min_conditional_distortion(j, s, {u, z}, spec.dist);
  const double psi2 = detail::min_conditional_distortion(j, s, {v, z}, spec.dist);
  detail::check_minima_order(psi0, psi1);
  detail::check_minima_order(psi0, psi2);

  const double w0 = std::min(beta, alpha);
  const double w1 = alpha - w0;
  const double w2 = 1.0 - alpha;

  RegionPoint pt;
  pt.rate_slack = mi_uvy - mi_vs;
  pt.feasible = pt.rate_slack > eps_rate;
  pt.d_b = detail::expected_phi_distortion(j, s, v, y, spec.phi, spec.dist);
  pt.d_e = w0 * psi0 + w1 * psi1 + w2 * psi2;
  pt.diagnostics = {{"alpha", alpha},
                    {"beta", beta},
                    {"r_s", r_s},
                    {"mi_vs", mi_vs},
                    {"mi_uvy", mi_uvy},
                    {"mi_us", mi_us},
                    {"mi_uy", mi_uy},
                    {"mi_uz", mi_uz},
                    {"cmi_su_given_z", cmi_su_z},
                    {"cmi_vy_given_u", cmi_vy_u},
                    {"cmi_zv_given_u", cmi_zv_u},
                    {"cmi_sv_given_zu", cmi_sv_zu},
                    {"psi0", psi0},
                    {"psi1", psi1},
                    {"psi2", psi2},
                    {"w0", w0},
                    {"w1", w1},
                    {"w2", w2}};
  return pt;
}

/// Rewrites a separate-scheme specification as a superposition-scheme one
/// under the assignment U <- (U1,U2), V <- (Shat,V2), exploiting the
/// independence of the source-side and channel-side variables. Evaluating the
/// result reproduces the separate scheme's point with alpha = 1 and beta = eta.
inline SchemeIISpec embed_o_in_ii(const SchemeOSpec& o) {
  o.validate();
  const std::size_t ns = o.s_size(), nsh = o.shat_size(), nu1 = o.u1_size(),
                    nu2 = o.u2_size(), nv2 = o.v2_size(), nx = o.bc.input_size();
  const std::size_t nv = nsh * nv2;  // V = (Shat, V2), row-major
  const std::size_t nu = nu1 * nu2;  // U = (U1, U2), row-major

  const Pmf p_v2 = o.p_v2_given_u2.push(o.p_u2);
  const Channel p_u2_given_v2 = o.p_v2_given_u2.bayes_invert(o.p_u2);

  // P(v | s) = P(shat | s) P(v2): the channel-side prefix is independent of S.
  std::vector<double> vs(ns * nv, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t sh = 0; sh < nsh; ++sh) {
      for (std::size_t v2 = 0; v2 < nv2; ++v2) {
        vs[s * nv + sh * nv2 + v2] = o.p_shat_given_s(sh, s) * p_v2[v2];
      }
    }
  }

  // P(u | v) = P(u1 | shat) P(u2 | v2).
  std::vector<double> uv(nv * nu, 0.0);
  for (std::size_t sh = 0; sh < nsh; ++sh) {
    for (std::size_t v2 = 0; v2 < nv2; ++v2) {
      for (std::size_t u1 = 0; u1 < nu1; ++u1) {
        for (std::size_t u2 = 0; u2 < nu2; ++u2) {
          uv[(sh * nv2 + v2) * nu + u1 * nu2 + u2] =
              o.p_u1_given_shat(u1, sh) * p_u2_given_v2(u2, v2);
        }
      }
    }
  }

  // P(x | s, u, v) = P(x | v2): the channel input depends on V2 alone.
  std::vector<double> xsuv(ns * nu * nv * nx, 0.0);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t u = 0; u < nu; ++u) {
      for (std::size_t sh = 0; sh < nsh; ++sh) {
        for (std::size_t v2 = 0; v2 < nv2; ++v2) {
          const std::size_t row = (s * nu + u) * nv + sh * nv2 + v2;
          for (std::size_t x = 0; x < nx; ++x) {
            xsuv[row * nx + x] = o.p_x_given_v2(x, v2);
          }
        }
      }
    }
  }

  // phi((shat, v2), y) = shat: the reconstruction is carried inside V.
  std::vector<std::size_t> phi_table(nv * o.bc.y_size, 0);
  for (std::size_t sh = 0; sh < nsh; ++sh) {
    for (std::size_t v2 = 0; v2 < nv2; ++v2) {
      for (std::size_t y = 0; y < o.bc.y_size; ++y) {
        phi_table[(sh * nv2 + v2) * o.bc.y_size + y] = sh;
      }
    }
  }

  SchemeIISpec ii;
  ii.p_s = o.p_s;
  ii.p_v_given_s = Channel(ns, nv, std::move(vs));
  ii.p_u_given_v = Channel(nv, nu, std::move(uv));
  ii.p_x_given_suv = Channel(ns * nu * nv, nx, std::move(xsuv));
  ii.bc = o.bc;
  ii.phi = PhiMap(nv, o.bc.y_size, nsh, std::move(phi_table));
  ii.dist = o.dist;
  ii.validate();
  return ii;
}

}  // namespace seclab
