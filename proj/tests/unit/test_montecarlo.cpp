/*
 *            Copyright 2026 The casimir-born Authors
 *
 *      Licensed under the Apache License, Version 2.0 (the "License")
 *
 * You may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *              http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "casimir/green.hpp"
#include "casimir/montecarlo.hpp"
#include "casimir/planar.hpp"
#include "oracles.hpp"
#include "rel_approx.hpp"

using namespace casimir;
using Eigen::Vector3d;

namespace {

constexpr double pi = std::numbers::pi;

Body finite_box(Vector3d lo, Vector3d hi) { return Body{lo, hi}; }

bool within(double a, double b, double sigma, double k = 3.0) {
  return std::abs(a - b) <= k * sigma + 1e-14 * std::abs(b);
}

}  // namespace

TEST_SUITE("montecarlo") {

TEST_CASE("box pair geometry") {
  const VolumePair v = VolumePair::box_pair(1.0, 2.0);
  CHECK(v.contains({0.5, 0.5, -3.0}));
  CHECK(v.contains({-1.0, 1.0, 1.0}));
  CHECK_FALSE(v.contains({0.0, 0.0, 0.5}));
  CHECK_FALSE(v.contains({1.2, 0.0, -1.0}));
  CHECK(descriptor_name(v.descriptor()) == "box_pair");
  const VolumePair w = VolumePair::box_pair_from_lambda(2.0, 1.0);
  const auto& shape = std::get<BoxPairShape>(w.descriptor());
  CHECK(shape.L == 2.0);
  CHECK(shape.d == 1.0);
  CHECK_THROWS_AS(VolumePair::box_pair(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("sampler density is normalized and consistent") {
  const Body box = finite_box({-1, -1.5, -2}, {1.5, 1, 0});
  const VolumePair v = VolumePair::from_bodies(box, finite_box({-1, -1, 1}, {1, 1, 3}));
  const Vector3d r(0.1, 0.2, 0.4);
  for (double xi : {0.3, 2.0}) {
    const BodySampler smp = v.sampler(0, r, xi);
    const Eigen::VectorXd mass = oracle::box_product_quadrature(
        [&](const Vector3d& s) { return Eigen::VectorXd::Constant(1, smp.pdf(s)); }, box, r, 1, 10, 1);
    CHECK(mass[0] == Rel(1.0).epsilon(1e-10));

    SampleStream stream(7, 0);
    for (int i = 0; i < 2000; ++i) {
      std::array<double, 5> u;
      for (double& x : u) x = stream.uniform();
      const WeightedPoint p = smp(u);
      REQUIRE(box.contains(p.s));
      CHECK(p.pdf == Rel(smp.pdf(p.s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("sampler domain errors") {
  const VolumePair v = VolumePair::box_pair(1.0, 2.0);
  CHECK_THROWS_AS(v.sampler(0, {0, 0, 0.5}, 0.0), std::domain_error);
  CHECK_THROWS_AS(v.sampler(0, {0, 0, -0.5}, 1.0), std::domain_error);
  // Beside a column but within its z-extent.
  CHECK_THROWS_AS(v.sampler(0, {3, 0, -0.5}, 1.0), std::domain_error);
}

TEST_CASE("scalar density integrand equals the Green's function trace") {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> U(0.05, 3.0);
  for (int i = 0; i < 50; ++i) {
    const Vector3d r(0, 0, 0), s(U(gen), -U(gen), U(gen));
    const double xi = U(gen), R = s.norm(), x = xi * R;
    const Eigen::Matrix3d H = h_prop_realspace(r, s, xi, 1.0);
    const Eigen::Matrix3d C = curl_h_prop(r, s, xi, 1.0);
    const double trace = xi * xi * xi * xi * (H * H).trace() - xi * xi * (C * C.transpose()).trace();
    const double scalar = std::exp(-2 * x) * (8 * x * x + 12 * x + 6) / (16 * pi * pi * std::pow(R, 6));
    CHECK(trace == Rel(scalar).epsilon(1e-12));
  }
}

TEST_CASE("g1_general on the slab pair matches the spectral form") {
  const double L = 1.0, xi = 1.3, eps = 2.0, z = 0.3;
  const VolumePair v = VolumePair::slab_pair(L);
  const Vector3d r(0.0, 0.0, z);
  const GreenEstimate est = g1_general(r, v, xi, eps, 200000, 11);
  const SlabPair g{L, Permittivity::constant(eps), Permittivity::constant(1.0)};
  const EqualPointGreen ref = green_first_order_mid(g, z, xi);
  const Eigen::Vector3d e_ref(ref.electric.xx, ref.electric.yy, ref.electric.zz);
  const Eigen::Vector3d b_ref(ref.magnetic.xx, ref.magnetic.yy, ref.magnetic.zz);
  for (int i = 0; i < 3; ++i) {
    CHECK(within(est.electric(i, i), e_ref[i], est.electric_err(i, i)));
    CHECK(within(est.magnetic(i, i), b_ref[i], est.magnetic_err(i, i)));
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      CHECK(within(est.electric(i, j), 0.0, est.electric_err(i, j)));
      CHECK(within(est.magnetic(i, j), 0.0, est.magnetic_err(i, j)));
    }
  }
  // Reciprocity: the estimator is symmetric sample by sample.
  CHECK((est.electric - est.electric.transpose()).norm() <= 1e-12 * est.electric.norm());
  CHECK((est.magnetic - est.magnetic.transpose()).norm() <= 1e-12 * est.magnetic.norm());
}

TEST_CASE("g1_general against product quadrature on finite cubes") {
  const double L = 1.0, xi = 0.8, eps = 3.0;
  const Body a = finite_box({-1, -1, -2}, {1, 1, 0});
  const Body b = finite_box({-1, -1, L}, {1, 1, L + 2});
  const VolumePair v = VolumePair::from_bodies(a, b);
  const Vector3d r(0.15, -0.25, 0.4);
  auto integrand = [&](const Vector3d& s) {
    const Eigen::Matrix3d H = h_prop_realspace(r, s, xi, 1.0);
    const Eigen::Matrix3d C = curl_h_prop(r, s, xi, 1.0);
    const Eigen::Matrix3d e = H * H, m = C * C.transpose();
    Eigen::VectorXd y(18);
    y.head<9>() = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(e.data());
    y.tail<9>() = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(m.data());
    return y;
  };
  const Eigen::VectorXd ref = -xi * xi * (eps - 1) *
                              (oracle::box_product_quadrature(integrand, a, r, 2, 10, 18) +
                               oracle::box_product_quadrature(integrand, b, r, 2, 10, 18));
  const GreenEstimate est = g1_general(r, v, xi, eps, 100000, 5);
  for (int k = 0; k < 9; ++k) {
    CHECK(within(est.electric.data()[k], ref[k], est.electric_err.data()[k]));
    CHECK(within(est.magnetic.data()[k], ref[9 + k], est.magnetic_err.data()[k]));
  }
}

TEST_CASE("zero contrast and domain errors") {
  const VolumePair v = VolumePair::box_pair(1.0, 2.0);
  const Vector3d r(0, 0, 0.5);
  const GreenEstimate g = g1_general(r, v, 1.0, 1.0, 100, 1);
  CHECK(g.electric.isZero(0.0));
  CHECK(g.magnetic.isZero(0.0));
  McSpec spec;
  spec.n_samples = 100;
  CHECK(energy_density_first_order_general(r, v, 1.0, spec).value == 0.0);

  CHECK_THROWS_AS(g1_general({0, 0, -1}, v, 1.0, 2.0, 100, 1), std::domain_error);
  CHECK_THROWS_AS(g1_general(r, v, 1.0, 2.0, 0, 1), std::domain_error);
  spec.n_samples = 0;
  CHECK_THROWS_AS(energy_density_first_order_general(r, v, 2.0, spec), std::domain_error);
  spec.n_samples = 100;
  spec.xi_nodes = 1;
  CHECK_THROWS_AS(validate(spec), std::invalid_argument);
}

TEST_CASE("seeded determinism and thread independence") {
  const VolumePair v = VolumePair::box_pair(1.0, 1.0);
  const Vector3d r(0.2, 0.1, 0.3);
  McSpec spec;
  spec.n_samples = 10000;
  spec.batch_size = 1000;
  spec.seed = 42;
  spec.threads = 1;
  const McResult a = energy_density_first_order_general(r, v, 2.0, spec);
  const McResult b = energy_density_first_order_general(r, v, 2.0, spec);
  spec.threads = 3;
  const McResult c = energy_density_first_order_general(r, v, 2.0, spec);
  CHECK(a.value == b.value);
  CHECK(a.std_error == b.std_error);
  CHECK(a.value == c.value);
  CHECK(a.std_error == c.std_error);
  CHECK(a.seed == 42);
  spec.seed = 43;
  CHECK(energy_density_first_order_general(r, v, 2.0, spec).value != a.value);
}

TEST_CASE("box-pair density against the deterministic oracle") {
  McSpec spec;
  spec.n_samples = 20000;
  for (const auto& [d, r] : {std::pair{2.0, Vector3d(0.3, 0.1, 0.4)},
                             std::pair{0.5, Vector3d(0.35, 0.0, 0.5)}}) {
    const VolumePair v = VolumePair::box_pair(1.0, d);
    const McResult m = energy_density_first_order_general(r, v, 2.0, spec);
    const double ref = oracle::box_pair_density(2.0, 1.0, d, r);
    CHECK(within(m.value, ref, m.std_error));
    CHECK(m.std_error < 0.05 * std::abs(ref));
  }
}

TEST_CASE("slab pair density matches the infinite-plate formula") {
  McSpec spec;
  spec.n_samples = 20000;
  const McResult m = energy_density_first_order_general({0, 0, 0.3}, VolumePair::slab_pair(1.0), 2.0, spec);
  CHECK(within(m.value, infinite_plate_density(2.0, 1.0, 0.3), m.std_error));
}

TEST_CASE("standard error falls as n^-1/2") {
  const VolumePair v = VolumePair::box_pair(1.0, 1.0);
  McSpec spec;
  spec.n_samples = 5000;
  const double s1 = energy_density_first_order_general({0, 0, 0.2}, v, 2.0, spec).std_error;
  spec.n_samples = 20000;
  const double s2 = energy_density_first_order_general({0, 0, 0.2}, v, 2.0, spec).std_error;
  CHECK(s1 / s2 == Rel(2.0).epsilon(0.2));
}

TEST_CASE("density map symmetry and flagged rows") {
  const VolumePair v = VolumePair::box_pair_from_lambda(2.0, 1.0);
  McSpec spec;
  spec.n_samples = 10000;
  const std::vector<Vector3d> grid = {{0.3, 0.1, 0.2}, {-0.3, 0.1, 0.2}, {0.1, 0.3, 0.2},
                                      {0.0, 0.0, -0.5}, {2.0, 0.0, 3.0}};
  const std::vector<DensityRow> rows = density_map(v, 2.0, grid, 2.0, spec);
  REQUIRE(rows.size() == grid.size());
  for (int i : {1, 2}) {
    const double s = std::hypot(rows[0].std_error, rows[i].std_error);
    CHECK(within(rows[i].ratio, rows[0].ratio, s));
  }
  CHECK(rows[0].ratio > 0.0);
  CHECK_FALSE(rows[0].flagged);
  CHECK(rows[3].flagged);
  CHECK(rows[4].flagged);
  CHECK_THROWS_AS(density_map(v, 2.0, grid, 1.0, spec), std::invalid_argument);
}

}  // TEST_SUITE
