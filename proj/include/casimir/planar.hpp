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

#ifndef CASIMIR_PLANAR_HPP
#define CASIMIR_PLANAR_HPP

#include <cstddef>
#include <vector>

#include "casimir/green.hpp"
#include "casimir/materials.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

/// Two semi-infinite slabs (z < 0 and z > L) around a gap of width L.
struct SlabPair {
  double L = 1.0;
  Permittivity slab;
  Permittivity gap;

  double eps_mid(double xi) const { return gap(xi); }
  double contrast(double xi) const { return slab(xi) - gap(xi); }
  bool dispersive() const { return slab.is_dispersive() || gap.is_dispersive(); }
};

void validate(const SlabPair& g);

/// Defaults used by the planar observables: polar map, rel_tol 1e-7.
/// The map scale is always chosen from the geometry by the callee.
QuadSpec planar_default_spec();

Region region_of(const SlabPair& g, double z);

// ---------------------------------------------------------------- stress

double stress_zz_first_order(const SlabPair& g, double z);

QuadResult stress_zz_second_order(const SlabPair& g, const QuadSpec& spec = planar_default_spec());

double stress_zz_second_order_closed(double eps, double eps_mid, double L);

struct StressParts {
  double LL = 0.0;
  double RR = 0.0;
  double LR = 0.0;
  double RL = 0.0;
  double delta_term = 0.0;
  QuadResult lr_quad;
};

/// Born decomposition of the second-order stress, evaluated at gap point z.
StressParts stress_parts_second_order(const SlabPair& g, double z,
                                      const QuadSpec& spec = planar_default_spec());

// --------------------------------------------------------- energy density

QuadResult energy_density_first_order(const SlabPair& g, double z,
                                      const QuadSpec& spec = planar_default_spec());

QuadResult energy_density_second_order(const SlabPair& g, double z,
                                       const QuadSpec& spec = planar_default_spec());

/// Diagonal first-order scattering Green's function at equal points in the
/// gap, G = -(de / (32 pi xi^2)) int k dk / kappa^3 m1 S(z), split into the
/// electric and two-sided-curl parts. Vacuum gap only.
struct EqualPointGreen {
  DiagKernel3 electric;
  DiagKernel3 magnetic;
  bool converged = true;
};

EqualPointGreen green_first_order_mid(const SlabPair& g, double z, double xi,
                                      const QuadSpec& spec = planar_default_spec());

struct DensitySample {
  double z = 0.0;
  double rho = 0.0;
  Region region = Region::Mid;
  double err = 0.0;
  bool converged = true;
};

struct DensityProfile {
  std::vector<DensitySample> samples;
  int order = 1;
  std::size_t excluded = 0;  // requested points inside the plate margin
};

/// Samples the order-1 or order-2 density on zs, skipping points closer than
/// margin to a plate face. Output is sorted by z.
DensityProfile density_profile(const SlabPair& g, std::vector<double> zs, int order,
                               double margin, const QuadSpec& spec = planar_default_spec());

/// First-order energy with the slabs cut back by delta from each face.
/// `total` uses the combined z-integral, which vanishes identically at
/// delta = 0; the region values require delta > 0.
struct FirstOrderEnergy {
  double delta = 0.0;
  double total = 0.0;
  double left = 0.0;
  double mid = 0.0;
  double right = 0.0;
  bool converged = true;
};

FirstOrderEnergy total_energy_first_order(const SlabPair& g, double delta = 0.0,
                                          const QuadSpec& spec = planar_default_spec());

struct LadderPoint {
  double delta = 0.0;
  double surface = 0.0;    // terms carrying exp(-2 delta kappa); exactly c / delta^3
  double remainder = 0.0;  // everything else; finite as delta -> 0
  double raw_total = 0.0;
};

struct RegularizedEnergy {
  double delta = 0.0;
  double divergent_coeff = 0.0;
  double finite_part = 0.0;
  double raw_total = 0.0;
  double divergent_spread = 0.0;  // max relative spread of delta^3 * surface over the ladder
  double residual = 0.0;          // raw_total - c / delta^3 - finite_part, O(delta)
  std::vector<LadderPoint> ladder;
  bool converged = true;
};

RegularizedEnergy total_energy_second_order_regularized(
    const SlabPair& g, double delta, const QuadSpec& spec = planar_default_spec());

/// -dE/dL from a central difference of the finite part.
double force_from_energy(const SlabPair& g, double dL, double delta = 0.0,
                         const QuadSpec& spec = planar_default_spec());

// ----------------------------------------------------------------- oracle

/// Zero-temperature Lifshitz pressure for slab-gap-slab with constant
/// permittivities. eps may be +infinity (perfect mirrors).
QuadResult lifshitz_force_exact(double eps, double eps_mid, double L,
                                const QuadSpec& spec = planar_default_spec());

/// Perfect-mirror pressure from large-eps values. With s = eps^{-1/2} the
/// approach is F(s) = F_inf + s (a + b ln s) + O(s^2); the last three
/// entries fix F_inf, a and b. Needs three distinct values.
double lifshitz_high_eps_extrapolation(const std::vector<double>& eps_values, double L,
                                       const QuadSpec& spec = planar_default_spec());

/// max |delta eps / eps_mid| over a log grid spanning the relevant xi range.
double born_parameter_max(const SlabPair& g);

// ------------------------------------------------- non-dispersive closed forms

namespace closed_form {

double density_first_order(double eps, double eps_mid, double L, double z);
double density_second_order(double eps, double eps_mid, double L, double z);
double energy_divergent_coeff(double eps, double eps_mid);
double energy_finite_part(double eps, double eps_mid, double L);
/// First-order energy with cutoff delta; vanishes as delta -> 0.
double energy_first_order_cutoff(double eps, double eps_mid, double L, double delta);

}  // namespace closed_form

}  // namespace casimir

#endif
