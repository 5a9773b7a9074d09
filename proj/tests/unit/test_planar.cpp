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
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "casimir/planar.hpp"
#include "rel_approx.hpp"

using namespace casimir;

namespace {

constexpr double pi2 = std::numbers::pi * std::numbers::pi;

SlabPair pair(double eps, double eps_mid, double L) {
  return {L, Permittivity::constant(eps), Permittivity::constant(eps_mid)};
}

QuadSpec tight() {
  QuadSpec s = planar_default_spec();
  s.rel_tol = 1e-11;
  return s;
}

}  // namespace

TEST_SUITE("planar") {

TEST_CASE("closed-form stress examples") {
  CHECK(stress_zz_second_order_closed(2, 1, 1) == Rel(-23 / (640 * pi2)).epsilon(1e-15));
  CHECK(stress_zz_second_order_closed(3, 3, 1) == 0.0);
  CHECK(stress_zz_second_order_closed(3, 2, 2) ==
        Rel(-23 / (640 * pi2 * 16 * std::pow(2.0, 2.5))).epsilon(1e-15));
  CHECK_THROWS_AS(stress_zz_second_order_closed(2, 1, 0), std::domain_error);
}

TEST_CASE("second-order stress by quadrature") {
  const QuadResult a = stress_zz_second_order(pair(2, 1, 1));
  CHECK(a.converged);
  CHECK(a.value == Rel(-23 / (640 * pi2)).epsilon(1e-6));
  CHECK(a.value == Rel(-3.6409e-3).epsilon(1e-4));

  const QuadResult b = stress_zz_second_order(pair(3, 2, 2));
  CHECK(b.value == Rel(stress_zz_second_order_closed(3, 2, 2)).epsilon(1e-6));

  CHECK(stress_zz_second_order(pair(2, 2, 1)).value == 0.0);
}

TEST_CASE("stress scalings") {
  const QuadSpec s = tight();
  const double ref = stress_zz_second_order(pair(2, 1, 1), s).value;
  for (double L : {0.5, 2.0, 4.0}) {
    const double v = stress_zz_second_order(pair(2, 1, L), s).value;
    CHECK(v * std::pow(L, 4) == Rel(ref).epsilon(1e-8));
  }
  for (double de : {0.5, 2.0, 4.0}) {
    const double v = stress_zz_second_order(pair(1 + de, 1, 1), s).value;
    CHECK(v / (de * de) == Rel(ref).epsilon(1e-8));
  }
  for (double em : {1.5, 2.0, 4.0}) {
    const double v = stress_zz_second_order(pair(em + 1, em, 1), s).value;
    CHECK(v * std::pow(em, 2.5) == Rel(ref).epsilon(1e-8));
  }
}

TEST_CASE("first-order stress is zero") {
  CHECK(stress_zz_first_order(pair(2, 1, 1), 0.5) == 0.0);
  CHECK(stress_zz_first_order(pair(1, 1, 1), 0.5) == 0.0);
  const SlabPair drude{1.0, Permittivity::drude_lorentz(2, 1, 0.3), Permittivity::constant(1)};
  CHECK(stress_zz_first_order(drude, 0.25) == 0.0);
  CHECK_THROWS_AS(stress_zz_first_order(pair(2, 1, 1), 1.5), std::domain_error);
}

TEST_CASE("second-order stress decomposition") {
  for (const SlabPair& g : {pair(2, 1, 1), pair(5, 2, 1.5)}) {
    const double total = stress_zz_second_order(g).value;
    const StressParts p = stress_parts_second_order(g, 0.3 * g.L);
    CHECK(std::abs(p.LL) <= 1e-12 * std::abs(total));
    CHECK(std::abs(p.RR) <= 1e-12 * std::abs(total));
    CHECK(std::abs(p.delta_term) <= 1e-12 * std::abs(total));
    CHECK(p.LR == Rel(total / 2).epsilon(1e-8));
    CHECK(p.RL == Rel(total / 2).epsilon(1e-8));
  }
}

TEST_CASE("region tags and face errors") {
  const SlabPair g = pair(2, 1, 1);
  CHECK(region_of(g, -0.1) == Region::Left);
  CHECK(region_of(g, 0.5) == Region::Mid);
  CHECK(region_of(g, 1.1) == Region::Right);
  CHECK_THROWS_AS(region_of(g, 0.0), std::domain_error);
  CHECK_THROWS_AS(energy_density_first_order(g, 1.0), std::domain_error);
  CHECK_THROWS_AS(validate(pair(2, 1, 0)), std::domain_error);
}

TEST_CASE("first-order density matches closed forms in all regions") {
  for (double em : {1.0, 2.0}) {
    const SlabPair g = pair(em + 1, em, 1);
    for (double z : {-2.0, -0.3, 0.1, 0.37, 0.5, 0.9, 1.2, 3.0}) {
      const QuadResult r = energy_density_first_order(g, z);
      CHECK(r.converged);
      CHECK(r.value == Rel(closed_form::density_first_order(em + 1, em, 1, z)).epsilon(1e-6));
    }
  }
  CHECK(energy_density_first_order(pair(2, 2, 1), 0.3).value == 0.0);
}

TEST_CASE("second-order density examples") {
  const SlabPair g = pair(2, 1, 1);
  CHECK(energy_density_second_order(g, 0.5).value ==
        Rel(-2091 / (4480 * pi2)).epsilon(1e-6));
  CHECK(energy_density_second_order(g, -1.0).value ==
        Rel(394.0 / 32 / (560 * pi2)).epsilon(1e-6));
  CHECK(energy_density_second_order(g, 2.0).value ==
        Rel(394.0 / 32 / (560 * pi2)).epsilon(1e-6));
  CHECK(energy_density_second_order(pair(2, 2, 1), 0.5).value == 0.0);
}

TEST_CASE("second-order density with eps_mid != 1") {
  const SlabPair g = pair(3.5, 1.5, 2);
  for (double z : {-1.0, -0.05, 0.2, 1.0, 1.7, 2.4}) {
    CHECK(energy_density_second_order(g, z).value ==
          Rel(closed_form::density_second_order(3.5, 1.5, 2, z)).epsilon(1e-6));
  }
}

TEST_CASE("mirror symmetry and sign") {
  const SlabPair g = pair(4, 2, 1);
  for (double z : {-0.7, 0.15, 0.4}) {
    for (int order : {1, 2}) {
      auto rho = [&](double zz) {
        return order == 1 ? energy_density_first_order(g, zz).value
                          : energy_density_second_order(g, zz).value;
      };
      CHECK(rho(z) == Rel(rho(g.L - z)).epsilon(1e-8));
    }
  }
  CHECK(energy_density_second_order(g, 0.5).value < 0.0);
  CHECK(stress_zz_second_order(g).value < 0.0);
  CHECK(stress_zz_second_order(pair(1.5, 2, 1)).value < 0.0);
}

TEST_CASE("dispersive slab") {
  const SlabPair g{1.0, Permittivity::drude_lorentz(3, 1, 0.5), Permittivity::constant(1)};
  const QuadResult s = stress_zz_second_order(g);
  CHECK(s.converged);
  CHECK(s.value < 0.0);
  const QuadResult r = energy_density_first_order(g, 0.5);
  CHECK(r.converged);
  CHECK(r.value > 0.0);
  // At xi -> 0 the contrast approaches wp^2 / w0^2 = 9.
  CHECK(born_parameter_max(g) == Rel(9.0).epsilon(1e-3));
  CHECK_THROWS_AS(total_energy_second_order_regularized(g, 0.01), std::domain_error);
}

TEST_CASE("density profile") {
  const SlabPair g = pair(2, 1, 1);
  const DensityProfile p =
      density_profile(g, {0.5, -0.5, 1e-4, 1.5, 0.25, 0.5, 1.0}, 1, 1e-3);
  CHECK(p.order == 1);
  CHECK(p.excluded == 2);
  REQUIRE(p.samples.size() == 4);
  for (std::size_t i = 1; i < p.samples.size(); ++i) CHECK(p.samples[i].z > p.samples[i - 1].z);
  CHECK(p.samples[0].region == Region::Left);
  CHECK(p.samples[1].region == Region::Mid);
  CHECK(p.samples[3].region == Region::Right);
  CHECK_THROWS_AS(density_profile(g, {0.5}, 3, 1e-3), std::invalid_argument);
}

TEST_CASE("first-order total energy") {
  const SlabPair g = pair(2, 1, 1);
  const FirstOrderEnergy e0 = total_energy_first_order(g);
  const double scale = std::abs(closed_form::energy_finite_part(2, 1, 1));
  CHECK(std::abs(e0.total) <= 1e-10 * scale);

  const double delta = 0.05;
  const FirstOrderEnergy e = total_energy_first_order(g, delta);
  CHECK(e.left == Rel(e.right).epsilon(1e-9));
  CHECK(e.total == Rel(closed_form::energy_first_order_cutoff(2, 1, 1, delta)).epsilon(1e-6));
  CHECK(total_energy_first_order(pair(2, 2, 1)).total == 0.0);
}

TEST_CASE("regularized second-order energy") {
  const RegularizedEnergy e = total_energy_second_order_regularized(pair(2, 1, 1), 0.02);
  CHECK(e.converged);
  CHECK(e.divergent_coeff == Rel(1 / (168 * pi2)).epsilon(1e-4));
  CHECK(e.finite_part == Rel(-23 / (1920 * pi2)).epsilon(1e-4));
  CHECK(e.ladder.size() == 3);

  const RegularizedEnergy z = total_energy_second_order_regularized(pair(2, 2, 1), 0.02);
  CHECK(z.divergent_coeff == 0.0);
  CHECK(z.finite_part == 0.0);

  CHECK_THROWS_AS(total_energy_second_order_regularized(pair(2, 1, 1), 0.3), std::domain_error);
}

TEST_CASE("finite part scales as L^-3") {
  const double ref = total_energy_second_order_regularized(pair(2, 1, 1), 0.01).finite_part;
  for (double L : {0.5, 2.0, 4.0}) {
    const double v = total_energy_second_order_regularized(pair(2, 1, L), 0.01 * L).finite_part;
    CHECK(v * L * L * L == Rel(ref).epsilon(1e-8));
  }
}

TEST_CASE("force from energy") {
  CHECK(3.0 / 1920 == Rel(1.0 / 640).epsilon(1e-15));
  const double f = force_from_energy(pair(2, 1, 1), 1e-3);
  CHECK(f == Rel(-23 / (640 * pi2)).epsilon(1e-4));
  CHECK(force_from_energy(pair(2, 2, 1), 1e-3) == 0.0);
  CHECK_THROWS_AS(force_from_energy(pair(2, 1, 1), 0.5), std::domain_error);
}

TEST_CASE("Lifshitz oracle") {
  const QuadResult mirror = lifshitz_force_exact(std::numeric_limits<double>::infinity(), 1, 1);
  CHECK(mirror.value == Rel(-pi2 / 240).epsilon(1e-6));
  CHECK(lifshitz_force_exact(2, 2, 1).value == 0.0);

  const double de = 1e-3;
  const double exact = lifshitz_force_exact(1 + de, 1, 1).value;
  CHECK(exact / stress_zz_second_order_closed(1 + de, 1, 1) == Rel(1.0).epsilon(1e-2));

  const double ext = lifshitz_high_eps_extrapolation({1e6, 1e7, 1e8}, 1);
  CHECK(ext == Rel(-pi2 / 240).epsilon(1e-6));
  CHECK_THROWS_AS(lifshitz_high_eps_extrapolation({1e6, 1e8}, 1), std::invalid_argument);
  CHECK_THROWS_AS(lifshitz_force_exact(0.5, 1, 1), std::domain_error);
}

TEST_CASE("equal-point Green's function needs a vacuum gap") {
  CHECK_THROWS_AS(green_first_order_mid(pair(3, 2, 1), 0.5, 1.0), std::domain_error);
  CHECK_THROWS_AS(green_first_order_mid(pair(2, 1, 1), 1.5, 1.0), std::domain_error);
}

}  // TEST_SUITE
