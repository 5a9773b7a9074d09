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

#include "casimir/green.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace casimir {

double kappa(const SpectralPoint& p) {
  return std::sqrt(p.eps_mid * p.xi * p.xi + p.k_par * p.k_par);
}

KernelPair m1(const SpectralPoint& p) {
  const double k2 = p.k_par * p.k_par, k4 = k2 * k2;
  const double e = p.eps_mid, x2 = p.xi * p.xi, x4 = x2 * x2;
  KernelPair m;
  m.electric.xx = 2 * k4 + 3 * e * x2 * k2 + 2 * e * e * x4;
  m.electric.yy = m.electric.xx;
  m.electric.zz = 2 * k2 * (2 * k2 + e * x2);
  m.magnetic.xx = x4 * e * e * (3 * k2 + 2 * x2 * e);
  m.magnetic.yy = m.magnetic.xx;
  m.magnetic.zz = 2 * x4 * k2 * e * e;
  return m;
}

KernelPair m1_delta(const SpectralPoint& p) {
  const double k2 = p.k_par * p.k_par;
  const double e = p.eps_mid, x2 = p.xi * p.xi;
  const double kap2 = e * x2 + k2;
  KernelPair m;
  m.electric = {1.0, 1.0, 2 * k2 / kap2};
  m.magnetic.xx = x2 * x2 * e * e / kap2;
  m.magnetic.yy = m.magnetic.xx;
  m.magnetic.zz = 0.0;
  return m;
}

KernelPair m2_lr(const SpectralPoint& p) {
  const double k2 = p.k_par * p.k_par, k4 = k2 * k2, k6 = k4 * k2;
  const double e = p.eps_mid, x2 = p.xi * p.xi, x4 = x2 * x2, x6 = x4 * x2;
  const double t = 2 * k2 + e * x2;
  KernelPair m;
  m.electric.xx = 4 * k6 + 8 * k4 * e * x2 + 5 * k2 * e * e * x4 + 2 * e * e * e * x6;
  m.electric.yy = m.electric.xx;
  m.electric.zz = -2 * k2 * t * t;
  m.magnetic.xx = -e * e * x4 * (4 * k4 + 5 * k2 * e * x2 + 2 * e * e * x4);
  m.magnetic.yy = m.magnetic.xx;
  m.magnetic.zz = 2 * k2 * e * e * e * x6;
  return m;
}

KernelPair m2_ll(const SpectralPoint& p) { return m1(p); }

KernelPair g1(const SpectralPoint& p, int sgn_sq) {
  if (sgn_sq != 0 && sgn_sq != 1) throw std::domain_error("g1: sgn_sq must be 0 or 1");
  // At sgn^2 = 1 the polynomials below equal m1 identically; use m1's form so
  // the two agree bit for bit.
  if (sgn_sq == 1) return m1(p);
  const double s = sgn_sq;
  const double k2 = p.k_par * p.k_par, k4 = k2 * k2, k6 = k4 * k2;
  const double e = p.eps_mid, x2 = p.xi * p.xi, x4 = x2 * x2;
  const double kap2 = k2 + x2 * e;
  KernelPair g;
  g.electric.xx = e * e * x4 + kap2 * s * (k2 + s * kap2);
  g.electric.yy = g.electric.xx;
  g.electric.zz = 2 * k2 * (k2 + kap2 * s);
  // Leading k^6 enters with a plus sign and B_zz carries eps^2: both are
  // required for g1(p, 1) to reduce to m1(p).
  g.magnetic.xx = k6 - kap2 * kap2 * s * (k2 * s - kap2 * s + k2 - x2 * e);
  g.magnetic.yy = g.magnetic.xx;
  g.magnetic.zz = 2 * x4 * k2 * e * e;
  return g;
}

double stress_combination(const KernelPair& m, const SpectralPoint& p) {
  return -p.xi * p.xi * p.eps_mid * m.electric.perp_minus_zz() + m.magnetic.perp_minus_zz();
}

double trace_combination(const KernelPair& m, const SpectralPoint& p) {
  return -p.xi * p.xi * p.eps_mid * m.electric.trace() + m.magnetic.trace();
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Left: return "left";
    case Region::Mid: return "mid";
    case Region::Right: return "right";
  }
  return "?";
}

MidKernels mid_kernels(const SpectralPoint& p) {
  const double k2 = p.k_par * p.k_par, k4 = k2 * k2, k6 = k4 * k2;
  const double e = p.eps_mid, x2 = p.xi * p.xi, x4 = x2 * x2, x6 = x4 * x2;
  const double bracket = 2 * k4 + 2 * x2 * k2 * e + x4 * e * e;
  MidKernels m;
  m.electric = 2 * k6 + 5 * x2 * k4 * e + 3 * k2 * e * e * x4 + e * e * e * x6;
  m.magnetic = x4 * e * e * (k4 + 3 * x2 * k2 * e + x4 * e * e);
  m.electric_cross = x2 * e * bracket;
  m.magnetic_cross = -x4 * e * e * bracket;
  return m;
}

LeftKernels left_kernels(const SpectralPoint& p) {
  const double k2 = p.k_par * p.k_par, k4 = k2 * k2, k6 = k4 * k2;
  const double e = p.eps_mid, x2 = p.xi * p.xi, x4 = x2 * x2, x6 = x4 * x2;
  const double kap = kappa(p);
  LeftKernels l;
  // f^E_left = -6k^6 + 2 xi^6 e^3 (z kap - 1) + xi^4 k^2 e^2 (4 z kap - 7) + xi^2 k^4 e (4 z kap - 13)
  l.electric.f0 = -6 * k6 - 2 * x6 * e * e * e - 7 * x4 * k2 * e * e - 13 * x2 * k4 * e;
  l.electric.f1 = kap * (2 * x6 * e * e * e + 4 * x4 * k2 * e * e + 4 * x2 * k4 * e);
  // f^B_left = xi^4 e^2 [k^4 + 2 xi^4 z e^2 kap + xi^2 k^2 e (4 z kap - 1)]
  l.magnetic.f0 = x4 * e * e * (k4 - x2 * k2 * e);
  l.magnetic.f1 = x4 * e * e * kap * (2 * x4 * e * e + 4 * x2 * k2 * e);
  l.electric_first = 2 * e * (k2 + x2 * e) * (2 * k4 + 2 * x2 * k2 * e + x4 * e * e);
  return l;
}

std::vector<TraceKernelPair> trace_kernels_second_order(const SpectralPoint& p, Region region,
                                                        double z, double L) {
  if (!(L > 0.0)) throw std::domain_error("trace kernels: L must be positive");
  const double kap = kappa(p);
  switch (region) {
    case Region::Mid: {
      if (!(z > 0.0 && z < L)) throw std::domain_error("trace kernels: mid region needs 0 < z < L");
      const MidKernels m = mid_kernels(p);
      const double walls = std::exp(-2 * z * kap) + std::exp(2 * (z - L) * kap);
      const double cross = std::exp(-2 * L * kap);
      return {
          {m.electric, walls + m.electric_cross / m.electric * cross, Region::Mid,
           FieldType::Electric, 2},
          {m.magnetic, walls + m.magnetic_cross / m.magnetic * cross, Region::Mid,
           FieldType::Magnetic, 2},
      };
    }
    case Region::Left:
    case Region::Right: {
      double zl = z;
      if (region == Region::Left) {
        if (!(z < 0.0)) throw std::domain_error("trace kernels: left region needs z < 0");
      } else {
        if (!(z > L)) throw std::domain_error("trace kernels: right region needs z > L");
        zl = L - z;
      }
      const LeftKernels l = left_kernels(p);
      const double S = std::exp(2 * zl * kap) - std::exp(-2 * (L - zl) * kap);
      return {
          {l.electric.at(zl), S, region, FieldType::Electric, 2},
          {l.magnetic.at(zl), S, region, FieldType::Magnetic, 2},
          {l.electric_first, S, region, FieldType::Electric, 1},
      };
    }
  }
  throw std::domain_error("trace kernels: unknown region");
}

HomogeneousCoefficients homogeneous_coefficients(double R, double xi, double eps) {
  if (!(R > 0.0)) throw std::domain_error("homogeneous Green's function: coincident points");
  if (!(xi > 0.0)) throw std::domain_error("homogeneous Green's function: xi must be positive");
  const double k0 = std::sqrt(eps) * xi;
  const double x = k0 * R;
  const double ix = 1.0 / x;
  HomogeneousCoefficients c;
  c.g = std::exp(-x) / (4 * std::numbers::pi * R);
  c.A = 1.0 + ix + ix * ix;
  c.B = -(1.0 + 3 * ix + 3 * ix * ix);
  c.dg = -(k0 + 1.0 / R) * c.g;
  return c;
}

Eigen::Matrix3d h_prop_realspace(const Eigen::Vector3d& r, const Eigen::Vector3d& r2, double xi,
                                 double eps) {
  const Eigen::Vector3d d = r - r2;
  const double R = d.norm();
  const HomogeneousCoefficients c = homogeneous_coefficients(R, xi, eps);
  const Eigen::Vector3d u = d / R;
  return c.g * (c.A * Eigen::Matrix3d::Identity() + c.B * u * u.transpose());
}

Eigen::Matrix3d curl_h_prop(const Eigen::Vector3d& r, const Eigen::Vector3d& s, double xi,
                            double eps) {
  const Eigen::Vector3d d = r - s;
  const double R = d.norm();
  const HomogeneousCoefficients c = homogeneous_coefficients(R, xi, eps);
  const Eigen::Vector3d u = d / R;
  Eigen::Matrix3d cross;
  cross << 0, -u.z(), u.y(),
           u.z(), 0, -u.x(),
           -u.y(), u.x(), 0;
  return c.dg * cross;
}

DeltaTerm h_delta_term(double xi, double eps) {
  if (!(xi > 0.0)) throw std::domain_error("delta term: xi must be positive");
  DeltaTerm t{Eigen::Matrix3d::Zero()};
  t.coefficient(2, 2) = 1.0 / (eps * xi * xi);
  return t;
}

}  // namespace casimir
