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

#ifndef CASIMIR_GREEN_HPP
#define CASIMIR_GREEN_HPP

#include <vector>

#include <Eigen/Dense>

namespace casimir {

/// A point of the (k_par, xi) quadrant together with the background
/// permittivity evaluated at that frequency.
struct SpectralPoint {
  double k_par = 0.0;
  double xi = 1.0;
  double eps_mid = 1.0;
};

struct DiagKernel3 {
  double xx = 0.0;
  double yy = 0.0;
  double zz = 0.0;

  double trace() const { return xx + yy + zz; }
  double perp_minus_zz() const { return xx + yy - zz; }
};

struct KernelPair {
  DiagKernel3 electric;
  DiagKernel3 magnetic;
};

/// kappa = sqrt(eps_mid xi^2 + k_par^2).
double kappa(const SpectralPoint& p);

KernelPair m1(const SpectralPoint& p);
KernelPair m1_delta(const SpectralPoint& p);
KernelPair m2_lr(const SpectralPoint& p);
/// Same-slab double scattering; identical to m1.
KernelPair m2_ll(const SpectralPoint& p);
/// Equal-point kernel with sgn(z - s_z)^2 supplied explicitly (0 or 1).
KernelPair g1(const SpectralPoint& p, int sgn_sq);

/// -xi^2 eps (xx + yy - zz)_E + (xx + yy - zz)_B, the zz stress combination.
double stress_combination(const KernelPair& m, const SpectralPoint& p);
/// tr[-xi^2 eps E + B], the energy-density combination.
double trace_combination(const KernelPair& m, const SpectralPoint& p);

enum class Region { Left, Mid, Right };
enum class FieldType { Electric, Magnetic };

const char* region_name(Region r);

/// One term f * S of a second-order energy-density trace. `born_order` is 1
/// for the first-order Green's function that mixes into the slab density.
struct TraceKernelPair {
  double f = 0.0;
  double S = 0.0;
  Region region = Region::Mid;
  FieldType field_type = FieldType::Electric;
  int born_order = 2;
};

/// The (f, S) terms of the second-order density at depth z. Right is Left
/// evaluated at L - z.
std::vector<TraceKernelPair> trace_kernels_second_order(const SpectralPoint& p, Region region,
                                                        double z, double L);

/// Slab kernels written as f(z) = f0 + z f1 (all slab f's are linear in z).
struct LinearInZ {
  double f0 = 0.0;
  double f1 = 0.0;
  double at(double z) const { return f0 + z * f1; }
};

struct LeftKernels {
  LinearInZ electric;        // f^E_left
  LinearInZ magnetic;        // f^B_left
  double electric_first = 0.0;  // f^{E,(1)}_left, z independent
};

LeftKernels left_kernels(const SpectralPoint& p);

struct MidKernels {
  double electric = 0.0;       // f^E_mid
  double magnetic = 0.0;       // f^B_mid
  double electric_cross = 0.0; // coefficient of e^{-2 L kappa} in S^E_mid, times f^E_mid
  double magnetic_cross = 0.0; // same for the magnetic term
};

MidKernels mid_kernels(const SpectralPoint& p);

/// Scalar pieces of the homogeneous Green's function at imaginary frequency,
/// H = g (A I + B u u^T) with g = exp(-k0 R) / (4 pi R), k0 = sqrt(eps) xi.
struct HomogeneousCoefficients {
  double g = 0.0;
  double A = 0.0;
  double B = 0.0;
  double dg = 0.0;  // dg/dR
};

HomogeneousCoefficients homogeneous_coefficients(double R, double xi, double eps);

/// Propagating part of the homogeneous dyadic Green's function for r != r2.
Eigen::Matrix3d h_prop_realspace(const Eigen::Vector3d& r, const Eigen::Vector3d& r2, double xi,
                                 double eps);

/// curl_r H(r, s) = g'(R) [u x], the only surviving piece of the curl.
Eigen::Matrix3d curl_h_prop(const Eigen::Vector3d& r, const Eigen::Vector3d& s, double xi,
                            double eps);

/// The contact term of the full Green's function, carried as a coefficient of
/// delta(r - r2): zz-only, equal to 1/(eps xi^2). Never sampled.
struct DeltaTerm {
  Eigen::Matrix3d coefficient;
};

DeltaTerm h_delta_term(double xi, double eps);

}  // namespace casimir

#endif
