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
#include <stdexcept>

#include "casimir/quadrature.hpp"
#include "rel_approx.hpp"

using namespace casimir;

TEST_SUITE("quadrature") {

TEST_CASE("semi-infinite integrals of known value") {
  QuadSpec spec;
  spec.rel_tol = 1e-12;
  const QuadResult a = integrate_semi_inf([](double x) { return std::exp(-x); }, spec);
  CHECK(a.converged);
  CHECK(a.value == Rel(1.0).epsilon(1e-12));

  const QuadResult b = integrate_semi_inf([](double x) { return x * x * x * std::exp(-2 * x); }, spec);
  CHECK(b.converged);
  CHECK(b.value == Rel(3.0 / 8.0).epsilon(1e-12));
}

TEST_CASE("length rescaling gives L^-4") {
  QuadSpec spec;
  spec.rel_tol = 1e-12;
  for (double L : {0.5, 2.0, 7.0}) {
    spec.scale = 1.0 / L;
    const QuadResult r =
        integrate_semi_inf([L](double x) { return x * x * x * std::exp(-2 * L * x); }, spec);
    CHECK(r.value == Rel(3.0 / (8.0 * L * L * L * L)).epsilon(1e-11));
  }
}

TEST_CASE("finite interval") {
  const QuadResult r = integrate_interval([](double x) { return std::sin(x); }, 0.0, std::numbers::pi, {});
  CHECK(r.converged);
  CHECK(r.value == Rel(2.0).epsilon(1e-13));
}

TEST_CASE("reported error bounds the actual error when converged") {
  QuadSpec spec;
  spec.rel_tol = 1e-8;
  const QuadResult r = integrate_semi_inf([](double x) { return 1.0 / (1.0 + x * x); }, spec);
  REQUIRE(r.converged);
  CHECK(r.err_estimate <= spec.rel_tol * std::abs(r.value));
  CHECK(std::abs(r.value - std::numbers::pi / 2) <= 10 * spec.rel_tol);
}

TEST_CASE("quadrant: polar and iterated agree") {
  // In polar form: int_0^{pi/2} cos(th) dth int_0^inf r^2 exp(-2r) dr = 1/4.
  const Integrand2 f = [](double k, double xi) { return k * std::exp(-2 * std::hypot(k, xi)); };
  QuadSpec spec;
  spec.rel_tol = 1e-11;
  spec.mapping = Mapping::Polar;
  const QuadResult polar = integrate_quadrant(f, 1.0, spec);
  spec.mapping = Mapping::Exp;
  const QuadResult iter = integrate_quadrant(f, 1.0, spec);
  CHECK(polar.converged);
  CHECK(iter.converged);
  CHECK(polar.value == Rel(0.25).epsilon(1e-10));
  CHECK(iter.value == Rel(polar.value).epsilon(1e-9));
}

TEST_CASE("quadrant: polar map with eps_mid != 1") {
  // kappa = sqrt(k^2 + eps xi^2); substituting xi' = sqrt(eps) xi gives 1 / (4 sqrt(eps)).
  const double eps = 2.5;
  const Integrand2 f = [eps](double k, double xi) {
    return k * std::exp(-2 * std::sqrt(k * k + eps * xi * xi));
  };
  QuadSpec spec;
  spec.rel_tol = 1e-10;
  spec.mapping = Mapping::Polar;
  const QuadResult polar = integrate_quadrant(f, eps, spec);
  spec.mapping = Mapping::Exp;
  const QuadResult iter = integrate_quadrant(f, eps, spec);
  const double exact = 0.25 / std::sqrt(eps);
  CHECK(polar.value == Rel(exact).epsilon(1e-9));
  CHECK(std::abs(polar.value - iter.value) <= 3 * (polar.err_estimate + iter.err_estimate) + 1e-14);
  CHECK_THROWS_AS(integrate_quadrant_polar(f, 0.5, spec), std::domain_error);
}

TEST_CASE("zero integrand integrates to exactly zero") {
  QuadSpec spec;
  const QuadResult a = integrate_semi_inf([](double) { return 0.0; }, spec);
  CHECK(a.value == 0.0);
  CHECK(a.converged);
  const QuadResult b = integrate_quadrant([](double, double) { return 0.0; }, 1.0, spec);
  CHECK(b.value == 0.0);
  CHECK(b.converged);
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  QuadSpec spec;
  spec.max_evals = 64;
  spec.rel_tol = 1e-14;
  // Integrable endpoint singularity that a handful of panels cannot resolve.
  const QuadResult r = integrate_interval([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, spec);
  CHECK_FALSE(r.converged);
  CHECK(r.evals <= 2 * spec.max_evals);
}

TEST_CASE("repeated runs are bit identical") {
  const Integrand2 f = [](double k, double xi) {
    return k * k * std::exp(-2 * std::hypot(k, xi)) / (1 + xi);
  };
  QuadSpec spec;
  spec.mapping = Mapping::Polar;
  const QuadResult a = integrate_quadrant(f, 1.0, spec);
  const QuadResult b = integrate_quadrant(f, 1.0, spec);
  CHECK(a.value == b.value);
  CHECK(a.err_estimate == b.err_estimate);
  CHECK(a.evals == b.evals);
}

TEST_CASE("validate rejects bad specs") {
  QuadSpec s;
  CHECK_NOTHROW(validate(s));
  s.rel_tol = 0.0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = {};
  s.abs_tol = -1.0;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = {};
  s.max_evals = 10;
  CHECK_THROWS_AS(validate(s), std::invalid_argument);
  s = {};
  s.scale = 0.0;
  CHECK_THROWS_AS(integrate_semi_inf([](double x) { return x; }, s), std::invalid_argument);
}

TEST_CASE("combine") {
  QuadResult a{1.0, 0.1, 10, true}, b{2.0, 0.2, 20, false};
  const QuadResult c = combine(a, b, 2.0, -1.0);
  CHECK(c.value == 0.0);
  CHECK(c.err_estimate == Rel(0.4));
  CHECK(c.evals == 30);
  CHECK_FALSE(c.converged);
}

}  // TEST_SUITE
