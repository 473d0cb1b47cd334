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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "seclab/channel.hpp"
#include "seclab/joint.hpp"
#include "seclab/pmf.hpp"

using namespace seclab;

namespace {

// Random joint over the given shape, seeded; mass from i.i.d. uniforms.
JointDist random_joint(std::vector<std::size_t> shape, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  std::uniform_real_distribution<double> unif(0.01, 1.0);
  std::size_t cells = 1;
  for (auto s : shape) cells *= s;
  std::vector<double> mass(cells);
  double sum = 0.0;
  for (auto& v : mass) {
    v = unif(eng);
    sum += v;
  }
  for (auto& v : mass) v /= sum;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < shape.size(); ++i) {
    names.push_back("V" + std::to_string(i));
  }
  return JointDist(names, shape, mass);
}

}  // namespace

TEST_CASE("entropy basics") {
  CHECK(entropy(Pmf{0.5, 0.5}) == Catch::Approx(1.0).margin(1e-15));
  CHECK(entropy(Pmf{1.0, 0.0}) == Catch::Approx(0.0).margin(1e-15));
  // closed-form binary entropy h(0.3)
  const double h03 = -0.3 * std::log2(0.3) - 0.7 * std::log2(0.7);
  CHECK(entropy(Pmf{0.3, 0.7}) == Catch::Approx(h03).epsilon(1e-12));
  CHECK(entropy(Pmf{0.3, 0.7}) == Catch::Approx(0.881290899).margin(1e-9));
  // bounds
  CHECK(entropy(Pmf::uniform(8)) == Catch::Approx(3.0).margin(1e-12));
}

TEST_CASE("pmf validation") {
  CHECK_THROWS_AS(Pmf({0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf({-0.1, 1.1}), std::invalid_argument);
  CHECK_THROWS_AS(Pmf(std::vector<double>{}), std::invalid_argument);
  // within tolerance: renormalized once
  Pmf p({0.5, 0.5 + 5e-10});
  CHECK(p[0] + p[1] == Catch::Approx(1.0).margin(1e-15));
}

TEST_CASE("mutual information examples") {
  // product of two fair bits -> 0
  JointDist indep = JointBuilder()
                        .add("A", Pmf{0.5, 0.5})
                        .add("B", Channel(2, 2, {0.5, 0.5, 0.5, 0.5}), {"A"})
                        .build();
  CHECK(mutual_information(indep, {"A"}, {"B"}) == Catch::Approx(0.0).margin(1e-12));

  // Y = X uniform -> I = H(X) = 1
  JointDist copy = JointBuilder()
                       .add("X", Pmf{0.5, 0.5})
                       .add("Y", Channel::identity(2), {"X"})
                       .build();
  CHECK(mutual_information(copy, {"X"}, {"Y"}) == Catch::Approx(1.0).margin(1e-12));

  // X uniform through BSC(0.3): I = 1 - h(0.3)
  JointDist bsc = JointBuilder()
                      .add("X", Pmf{0.5, 0.5})
                      .add("Y", Channel::bsc(0.3), {"X"})
                      .build();
  CHECK(mutual_information(bsc, {"X"}, {"Y"}) ==
        Catch::Approx(1.0 - binary_entropy(0.3)).epsilon(1e-12));
  CHECK(mutual_information(bsc, {"X"}, {"Y"}) ==
        Catch::Approx(0.118709101).margin(1e-9));

  // overlap is an error
  CHECK_THROWS_AS(mutual_information(bsc, {"X"}, {"X"}), std::invalid_argument);
}

TEST_CASE("conditional mutual information examples") {
  // C independent of (A,B), A=B uniform -> I(A;B|C) = 1
  JointDist j1 = JointBuilder()
                     .add("A", Pmf{0.5, 0.5})
                     .add("B", Channel::identity(2), {"A"})
                     .add("C", Pmf{0.25, 0.75})
                     .build();
  CHECK(conditional_mutual_information(j1, {"A"}, {"B"}, {"C"}) ==
        Catch::Approx(1.0).margin(1e-12));

  // Markov chain A - C - B: I(A;B|C) = 0
  JointDist j2 = JointBuilder()
                     .add("C", Pmf{0.5, 0.5})
                     .add("A", Channel::bsc(0.2), {"C"})
                     .add("B", Channel::bsc(0.35), {"C"})
                     .build();
  CHECK(conditional_mutual_information(j2, {"A"}, {"B"}, {"C"}) ==
        Catch::Approx(0.0).margin(1e-12));

  // S uniform, U = S, Z = S through BSC(0.3): I(S;U|Z) = h(0.3)
  JointDist j3 = JointBuilder()
                     .add("S", Pmf{0.5, 0.5})
                     .add("U", Channel::identity(2), {"S"})
                     .add("Z", Channel::bsc(0.3), {"S"})
                     .build();
  CHECK(conditional_mutual_information(j3, {"S"}, {"U"}, {"Z"}) ==
        Catch::Approx(binary_entropy(0.3)).epsilon(1e-12));
  CHECK(conditional_mutual_information(j3, {"S"}, {"U"}, {"Z"}) ==
        Catch::Approx(0.881290899).margin(1e-9));

  CHECK_THROWS_AS(conditional_mutual_information(j3, {"S"}, {"U"}, {"S"}),
                  std::invalid_argument);
}

TEST_CASE("build_joint examples") {
  // single Pmf component
  JointDist single = build_joint({{"S", Pmf{0.3, 0.7}, {}}});
  CHECK(single.cells() == 2);
  CHECK(single.mass()[0] == Catch::Approx(0.3).margin(1e-15));

  // copy channel -> diagonal
  JointDist diag = JointBuilder()
                       .add("S", Pmf{0.5, 0.5})
                       .add("Y", Channel::identity(2), {"S"})
                       .build();
  CHECK(diag.mass()[0] == Catch::Approx(0.5).margin(1e-15));
  CHECK(diag.mass()[1] == Catch::Approx(0.0).margin(1e-15));
  CHECK(diag.mass()[2] == Catch::Approx(0.0).margin(1e-15));
  CHECK(diag.mass()[3] == Catch::Approx(0.5).margin(1e-15));

  // elementwise product with BSC(0.3)
  JointDist bsc = JointBuilder()
                      .add("S", Pmf{0.3, 0.7})
                      .add("Y", Channel::bsc(0.3), {"S"})
                      .build();
  CHECK(bsc.mass()[0] == Catch::Approx(0.21).margin(1e-15));
  CHECK(bsc.mass()[1] == Catch::Approx(0.09).margin(1e-15));
  CHECK(bsc.mass()[2] == Catch::Approx(0.21).margin(1e-15));
  CHECK(bsc.mass()[3] == Catch::Approx(0.49).margin(1e-15));

  // dimension mismatch
  CHECK_THROWS_AS(
      build_joint({{"S", Pmf{0.3, 0.7}, {}}, {"T", Channel::identity(3), {0}}}),
      std::invalid_argument);
}

TEST_CASE("marginalize, condition, tv examples") {
  JointDist j = JointBuilder()
                    .add("S", Pmf{0.3, 0.7})
                    .add("Y", Channel::bsc(0.25), {"S"})
                    .build();
  JointDist ms = j.marginal({"S"});
  CHECK(ms.mass()[0] == Catch::Approx(0.3).margin(1e-15));

  JointDist cond = j.condition("S", 1);
  CHECK(cond.mass()[0] == Catch::Approx(0.25).margin(1e-15));
  CHECK(cond.mass()[1] == Catch::Approx(0.75).margin(1e-15));

  // conditioning on a zero-probability event
  JointDist zero = JointBuilder()
                       .add("S", Pmf{1.0, 0.0})
                       .add("Y", Channel::identity(2), {"S"})
                       .build();
  CHECK_THROWS_AS(zero.condition("S", 1), std::invalid_argument);

  JointDist a = build_joint({{"S", Pmf{0.3, 0.7}, {}}});
  JointDist b = build_joint({{"S", Pmf{0.5, 0.5}, {}}});
  JointDist c = build_joint({{"S", Pmf{1.0, 0.0}, {}}});
  JointDist d = build_joint({{"S", Pmf{0.0, 1.0}, {}}});
  CHECK(tv_distance(a, a) == 0.0);
  CHECK(tv_distance(c, d) == Catch::Approx(1.0).margin(1e-15));
  CHECK(tv_distance(a, b) == Catch::Approx(0.2).margin(1e-15));
}

TEST_CASE("split_var is a pure reshape") {
  // (S, YZ) with YZ flattened row-major must split into (S, Y, Z)
  JointDist j = JointBuilder()
                    .add("S", Pmf{0.4, 0.6})
                    .add("YZ", Channel(2, 4, {0.1, 0.2, 0.3, 0.4,
                                              0.25, 0.25, 0.25, 0.25}),
                         {"S"})
                    .build();
  JointDist split = j.split_var("YZ", {2, 2}, {"Y", "Z"});
  CHECK(split.rank() == 3);
  CHECK(split.mass() == j.mass());
  // P(Y=1|S=0) = 0.3 + 0.4
  JointDist sy = split.marginal({"S", "Y"});
  CHECK(sy.mass()[1] == Catch::Approx(0.4 * 0.7).margin(1e-15));
}

TEST_CASE("property: MI bounds and chain rule on random joints") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    JointDist j = random_joint({2, 3, 2}, seed);
    const double ha = entropy_of(j, std::vector<std::size_t>{0});
    const double hb = entropy_of(j, std::vector<std::size_t>{1});
    const double i_ab = mutual_information(j, {"V0"}, {"V1"});
    REQUIRE(i_ab >= 0.0);
    REQUIRE(i_ab <= std::min(ha, hb) + 1e-12);

    // chain rule: I(A;B,C) = I(A;C) + I(A;B|C)
    const double lhs = mutual_information(j, {"V0"}, {"V1", "V2"});
    const double rhs = mutual_information(j, {"V0"}, {"V2"}) +
                       conditional_mutual_information(j, {"V0"}, {"V1"}, {"V2"});
    REQUIRE(lhs == Catch::Approx(rhs).margin(1e-10));
  }
}

TEST_CASE("property: tv distance symmetry and triangle inequality") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    JointDist a = random_joint({2, 4}, seed);
    JointDist b = random_joint({2, 4}, seed + 1000);
    JointDist c = random_joint({2, 4}, seed + 2000);
    const double ab = tv_distance(a, b);
    REQUIRE(ab == tv_distance(b, a));
    REQUIRE(ab >= 0.0);
    REQUIRE(ab <= 1.0);
    REQUIRE(ab <= tv_distance(a, c) + tv_distance(c, b) + 1e-15);
  }
}

TEST_CASE("property: build then marginalize reproduces the input pmf") {
  // dyadic inputs reproduce exactly
  Pmf p{0.25, 0.75};
  JointDist j = JointBuilder()
                    .add("S", p)
                    .add("Y", Channel::bsc(0.25), {"S"})
                    .build();
  JointDist m = j.marginal({"S"});
  CHECK(m.mass()[0] == 0.25);
  CHECK(m.mass()[1] == 0.75);

  std::mt19937_64 eng(7);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int rep = 0; rep < 20; ++rep) {
    const double q = unif(eng);
    Pmf ps{q, 1.0 - q};
    JointDist jj = JointBuilder()
                       .add("S", ps)
                       .add("Y", Channel::bsc(unif(eng)), {"S"})
                       .add("Z", Channel::bsc(unif(eng)), {"Y"})
                       .build();
    JointDist mm = jj.marginal({"S"});
    REQUIRE(mm.mass()[0] == Catch::Approx(ps[0]).margin(1e-15));
    REQUIRE(mm.mass()[1] == Catch::Approx(ps[1]).margin(1e-15));
  }
}
