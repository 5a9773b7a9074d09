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
#include <stdexcept>

#include "casimir/materials.hpp"
#include "rel_approx.hpp"

using namespace casimir;

TEST_SUITE("materials") {

TEST_CASE("constant model ignores the frequency") {
  const Permittivity p = Permittivity::constant(2.0);
  CHECK(p(5.0) == 2.0);
  CHECK(eval_permittivity(p, 1e-6) == 2.0);
  CHECK_FALSE(p.is_dispersive());
  CHECK(p.constant_value() == 2.0);
}

TEST_CASE("Drude-Lorentz on the imaginary axis") {
  CHECK(eval_permittivity(Permittivity::drude_lorentz(1, 0, 0), 1.0) == Rel(2.0).epsilon(1e-15));
  CHECK(eval_permittivity(Permittivity::drude_lorentz(1, 1, 1), 1.0) == Rel(4.0 / 3.0).epsilon(1e-15));
  const Permittivity p = Permittivity::drude_lorentz(2, 0.5, 0.1);
  CHECK(p.is_dispersive());
  CHECK_THROWS_AS(p.constant_value(), std::domain_error);
}

TEST_CASE("contrast") {
  CHECK(eval_contrast({Permittivity::constant(2), Permittivity::constant(1)}, 3.0) == 1.0);
  CHECK(eval_contrast({Permittivity::constant(3.7), Permittivity::constant(3.7)}, 0.2) == 0.0);
  CHECK(eval_contrast({Permittivity::drude_lorentz(1, 1, 1), Permittivity::constant(1)}, 1.0) ==
        Rel(1.0 / 3.0).epsilon(1e-15));
  const Permittivity dl = Permittivity::drude_lorentz(1.3, 0.7, 0.2);
  for (double xi : {1e-3, 0.4, 7.0}) CHECK(eval_contrast({dl, dl}, xi) == 0.0);
}

TEST_CASE("non-positive frequencies are rejected") {
  const Permittivity p = Permittivity::constant(2.0);
  CHECK_THROWS_AS(p(0.0), std::domain_error);
  CHECK_THROWS_AS(p(-1.0), std::domain_error);
  CHECK_THROWS_AS(eval_contrast({p, p}, 0.0), std::domain_error);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(Permittivity::constant(0.5), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::constant(NAN), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::drude_lorentz(-1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::table({1.0}, {2.0}), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::table({1.0, 0.5}, {2.0, 1.5}), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::table({1.0, 2.0}, {2.0, 2.5}), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::table({1.0, 2.0}, {2.0, 0.9}), std::invalid_argument);
  CHECK_THROWS_AS(Permittivity::table({0.0, 2.0}, {2.0, 1.5}), std::invalid_argument);
}

TEST_CASE("passivity on the imaginary axis") {
  const std::vector<Permittivity> models = {
      Permittivity::constant(1.0), Permittivity::constant(11.7), Permittivity::drude_lorentz(9.0, 0.0, 0.035),
      Permittivity::drude_lorentz(1.0, 1.0, 1.0),
      Permittivity::table({0.1, 0.5, 1.0, 3.0, 10.0}, {12.0, 9.0, 5.0, 1.5, 1.0})};
  for (const Permittivity& p : models) {
    double prev = INFINITY;
    for (int i = 0; i <= 600; ++i) {
      const double xi = std::pow(10.0, -3.0 + 6.0 * i / 600.0);
      const double e = p(xi);
      CHECK(e >= 1.0);
      CHECK(e <= prev);
      prev = e;
    }
  }
}

TEST_CASE("tabulated model interpolates through its nodes") {
  const std::vector<double> xi = {0.1, 0.5, 1.0, 3.0, 10.0}, eps = {12.0, 9.0, 5.0, 1.5, 1.0};
  const Permittivity p = Permittivity::table(xi, eps);
  for (std::size_t i = 0; i < xi.size(); ++i) CHECK(p(xi[i]) == Rel(eps[i]).epsilon(1e-14));
  CHECK(p(0.01) == 12.0);
  CHECK(p(100.0) == 1.0);

  const Permittivity lin = Permittivity::table({1.0, 3.0}, {3.0, 2.0});
  CHECK(lin(2.0) == Rel(2.5));
}

TEST_CASE("JSON descriptors round-trip") {
  const std::vector<Permittivity> models = {Permittivity::constant(2.5), Permittivity::drude_lorentz(1, 0.2, 0.3),
                                            Permittivity::table({0.5, 1.0, 2.0}, {4.0, 3.0, 1.0})};
  for (const Permittivity& p : models) {
    const Permittivity q = permittivity_from_json(permittivity_to_json(p));
    for (double xi : {0.3, 0.75, 1.4, 5.0}) CHECK(q(xi) == p(xi));
  }
  CHECK(permittivity_from_json(nlohmann::json(3.0))(1.0) == 3.0);
  CHECK(permittivity_from_json(nlohmann::json::parse(R"({"type":"constant","eps":2.0})"))(1.0) == 2.0);
  CHECK_THROWS_AS(permittivity_from_json(nlohmann::json::parse(R"({"type":"plasma"})")), std::invalid_argument);
}

}
