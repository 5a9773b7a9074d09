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

#include "casimir/planar.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/Dense>

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double pi2 = pi * pi;

// Quadrant integral with the map scale taken from a geometric length.
QuadResult quadrant(const SlabPair& g, const Integrand2& f, double length, QuadSpec spec) {
  spec.scale = 1.0 / (2.0 * length);
  double em = 1.0;
  if (g.dispersive()) {
    spec.mapping = Mapping::Exp;
  } else {
    em = g.gap.constant_value();
  }
  return integrate_quadrant(f, em, spec);
}

void require_non_dispersive(const SlabPair& g, const char* what) {
  if (g.dispersive())
    throw std::domain_error(std::string(what) + " requires non-dispersive media");
}

// Distance from z to the nearest plate face, the decay length of the
// slowest exponential in every density integrand.
double face_distance(const SlabPair& g, double z) {
  return std::min(std::abs(z), std::abs(g.L - z));
}

}  // namespace

void validate(const SlabPair& g) {
  if (!(g.L > 0.0) || !std::isfinite(g.L))
    throw std::domain_error("slab pair: gap width L must be positive");
}

QuadSpec planar_default_spec() {
  QuadSpec s;
  s.rel_tol = 1e-7;
  s.mapping = Mapping::Polar;
  return s;
}

Region region_of(const SlabPair& g, double z) {
  if (z == 0.0 || z == g.L || !std::isfinite(z))
    throw std::domain_error("energy density diverges on the plate faces z = 0 and z = L");
  if (z < 0.0) return Region::Left;
  if (z > g.L) return Region::Right;
  return Region::Mid;
}

double stress_zz_first_order(const SlabPair& g, double z) {
  validate(g);
  if (!(z > 0.0 && z < g.L)) throw std::domain_error("stress is evaluated inside the gap 0 < z < L");
  // The first-order stress integrand is proportional to the m1 stress
  // combination, which is a polynomial identity. Check it on a few points
  // of the quadrant instead of integrating rounding noise.
  for (double xi : {0.1 / g.L, 1.0 / g.L, 10.0 / g.L}) {
    for (double k : {0.0, 0.5 / g.L, 5.0 / g.L}) {
      const SpectralPoint p{k, xi, g.eps_mid(xi)};
      const KernelPair m = m1(p);
      const double scale = p.xi * p.xi * p.eps_mid * std::abs(m.electric.trace()) +
                           std::abs(m.magnetic.trace());
      if (std::abs(stress_combination(m, p)) > 1e-12 * scale)
        throw std::logic_error("first-order stress identity violated");
    }
  }
  return 0.0;
}

QuadResult stress_zz_second_order(const SlabPair& g, const QuadSpec& spec) {
  validate(g);
  const double L = g.L;
  auto f = [&g, L](double k, double xi) {
    const double e = g.eps_mid(xi);
    const double de = g.contrast(xi);
    if (de == 0.0) return 0.0;
    const double k2 = k * k, x2 = xi * xi;
    const double kap = kappa({k, xi, e});
    const double r = de / e;
    return -(1.0 / (16 * pi2)) * r * r * k * std::exp(-2 * L * kap) / (kap * kap * kap) *
           (2 * k2 * k2 + 2 * k2 * e * x2 + e * e * x2 * x2);
  };
  return quadrant(g, f, L, spec);
}

double stress_zz_second_order_closed(double eps, double eps_mid, double L) {
  if (!(L > 0.0)) throw std::domain_error("closed form: L must be positive");
  const double de = eps - eps_mid;
  return -23.0 * de * de / (640.0 * pi2 * std::pow(L, 4) * std::pow(eps_mid, 2.5));
}

StressParts stress_parts_second_order(const SlabPair& g, double z, const QuadSpec& spec) {
  validate(g);
  if (!(z > 0.0 && z < g.L)) throw std::domain_error("stress is evaluated inside the gap 0 < z < L");
  const double L = g.L;
  StressParts parts;

  // <sigma_zz> = (1/2pi) int dxi [-xi^2 eps (tr_perp - zz) G_E + (tr_perp - zz) G_B]
  auto lr = [&g, L](double k, double xi) {
    const double e = g.eps_mid(xi);
    const double de = g.contrast(xi);
    if (de == 0.0) return 0.0;
    const SpectralPoint p{k, xi, e};
    const double kap = kappa(p);
    const double pref = de * de / (128 * pi * e * e * e * xi * xi);
    return (1.0 / (2 * pi)) * pref * k * std::exp(-2 * L * kap) / std::pow(kap, 5) *
           stress_combination(m2_lr(p), p);
  };
  parts.lr_quad = quadrant(g, lr, L, spec);
  parts.LR = parts.lr_quad.value;
  parts.RL = parts.LR;

  QuadSpec zero_spec = spec;
  zero_spec.abs_tol = 1e-15 * std::abs(parts.LR);

  auto same_slab = [&g](double dist) {
    return [&g, dist](double k, double xi) {
      const double e = g.eps_mid(xi);
      const double de = g.contrast(xi);
      if (de == 0.0) return 0.0;
      const SpectralPoint p{k, xi, e};
      const double kap = kappa(p);
      const double pref = de * de / (64 * pi * e * e * xi * xi);
      return (1.0 / (2 * pi)) * pref * k * std::exp(-2 * dist * kap) / std::pow(kap, 5) *
             stress_combination(m2_ll(p), p);
    };
  };
  parts.LL = quadrant(g, same_slab(L - z), L - z, zero_spec).value;
  parts.RR = quadrant(g, same_slab(z), z, zero_spec).value;

  auto delta = [&g, z, L](double k, double xi) {
    const double e = g.eps_mid(xi);
    const double de = g.contrast(xi);
    if (de == 0.0) return 0.0;
    const SpectralPoint p{k, xi, e};
    const double kap = kappa(p);
    const double pref = de * de / (32 * pi * xi * xi * e * e * e);
    return (1.0 / (2 * pi)) * pref * k * k * k / kap * stress_combination(m1_delta(p), p) *
           (std::exp(-2 * z * kap) + std::exp(2 * (z - L) * kap));
  };
  parts.delta_term = quadrant(g, delta, face_distance(g, z), zero_spec).value;
  return parts;
}

QuadResult energy_density_first_order(const SlabPair& g, double z, const QuadSpec& spec) {
  validate(g);
  const Region region = region_of(g, z);
  const double L = g.L;
  auto f = [&g, region, z, L](double k, double xi) {
    const double e = g.eps_mid(xi);
    const double de = g.contrast(xi);
    if (de == 0.0) return 0.0;
    const SpectralPoint p{k, xi, e};
    const double kap = kappa(p);
    double S = 0.0;
    switch (region) {
      case Region::Left: S = std::exp(2 * (z - L) * kap) - std::exp(2 * z * kap); break;
      case Region::Mid: S = std::exp(2 * (z - L) * kap) + std::exp(-2 * z * kap); break;
      case Region::Right: S = std::exp(-2 * z * kap) - std::exp(2 * (L - z) * kap); break;
    }
    return -(1.0 / (64 * pi2)) / (xi * xi) * de / (e * e) * k / (kap * kap * kap) *
           trace_combination(m1(p), p) * S;
  };
  return quadrant(g, f, face_distance(g, z), spec);
}

QuadResult energy_density_second_order(const SlabPair& g, double z, const QuadSpec& spec) {
  validate(g);
  const Region region = region_of(g, z);
  const double L = g.L;
  auto f = [&g, region, z, L](double k, double xi) {
    const double e = g.eps_mid(xi);
    const double de = g.contrast(xi);
    if (de == 0.0) return 0.0;
    const SpectralPoint p{k, xi, e};
    const double kap = kappa(p);
    double sum = 0.0;
    for (const TraceKernelPair& t : trace_kernels_second_order(p, region, z, L)) {
      double w = 1.0;
      if (t.field_type == FieldType::Electric) w = (t.born_order == 2) ? -xi * xi * e : -xi * xi;
      sum += w * t.f * t.S;
    }
    return (1.0 / (32 * pi2)) / (xi * xi) * k * de * de / (std::pow(kap, 5) * e * e * e) * sum;
  };
  return quadrant(g, f, face_distance(g, z), spec);
}

EqualPointGreen green_first_order_mid(const SlabPair& g, double z, double xi, const QuadSpec& spec) {
  validate(g);
  if (!(z > 0.0 && z < g.L)) throw std::domain_error("equal-point Green's function: need 0 < z < L");
  if (!(xi > 0.0)) throw std::domain_error("equal-point Green's function: xi must be positive");
  const double e = g.eps_mid(xi);
  if (e != 1.0) throw std::domain_error("equal-point Green's function: vacuum gap only");
  const double de = g.contrast(xi);
  EqualPointGreen out;
  if (de == 0.0) return out;
  const double pref = -de / (32 * pi * xi * xi);
  QuadSpec s = spec;
  s.scale = 1.0 / (2.0 * face_distance(g, z));
  auto component = [&](auto pick) {
    auto f = [&](double k) {
      const SpectralPoint p{k, xi, e};
      const double kap = kappa(p);
      const double S = std::exp(-2 * z * kap) + std::exp(-2 * (g.L - z) * kap);
      return k / (kap * kap * kap) * pick(m1(p)) * S;
    };
    const QuadResult r = integrate_semi_inf(f, s);
    out.converged = out.converged && r.converged;
    return pref * r.value;
  };
  out.electric.xx = component([](const KernelPair& m) { return m.electric.xx; });
  out.electric.yy = out.electric.xx;
  out.electric.zz = component([](const KernelPair& m) { return m.electric.zz; });
  out.magnetic.xx = component([](const KernelPair& m) { return m.magnetic.xx; });
  out.magnetic.yy = out.magnetic.xx;
  out.magnetic.zz = component([](const KernelPair& m) { return m.magnetic.zz; });
  return out;
}

DensityProfile density_profile(const SlabPair& g, std::vector<double> zs, int order,
                               double margin, const QuadSpec& spec) {
  validate(g);
  if (order != 1 && order != 2) throw std::invalid_argument("density profile: order must be 1 or 2");
  if (!(margin > 0.0)) throw std::invalid_argument("density profile: margin must be positive");
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  DensityProfile prof;
  prof.order = order;
  for (double z : zs) {
    if (std::abs(z) < margin || std::abs(z - g.L) < margin) {
      ++prof.excluded;
      continue;
    }
    const QuadResult r = (order == 1) ? energy_density_first_order(g, z, spec)
                                      : energy_density_second_order(g, z, spec);
    prof.samples.push_back({z, r.value, region_of(g, z), r.err_estimate, r.converged});
  }
  return prof;
}

FirstOrderEnergy total_energy_first_order(const SlabPair& g, double delta, const QuadSpec& spec) {
  validate(g);
  if (!(delta >= 0.0) || !(delta < 0.25 * g.L))
    throw std::domain_error("first-order energy: need 0 <= delta < L/4");
  const double L = g.L;
  // Common (k, xi) prefactor of all three regions.
  auto pref = [&g](double k, double xi, double& kap) {
    const double e = g.eps_mid(xi);
    const double de = g.contrast(xi);
    const SpectralPoint p{k, xi, e};
    kap = kappa(p);
    if (de == 0.0) return 0.0;
    return -(1.0 / (64 * pi2)) / (xi * xi) * de / (e * e) * k / (kap * kap * kap) *
           trace_combination(m1(p), p);
  };
  FirstOrderEnergy out;
  out.delta = delta;
  // left + mid + right z-integrals of S collapse to this bracket.
  auto total = [&](double k, double xi) {
    double kap;
    const double P = pref(k, xi, kap);
    return P * (std::exp(-2 * (L + delta) * kap) - std::exp(-2 * (L - delta) * kap)) / kap;
  };
  QuadResult t = quadrant(g, total, L, spec);
  out.total = t.value;
  out.converged = t.converged;
  if (delta > 0.0) {
    auto left = [&](double k, double xi) {
      double kap;
      const double P = pref(k, xi, kap);
      return P * (std::exp(-2 * (L + delta) * kap) - std::exp(-2 * delta * kap)) / (2 * kap);
    };
    auto mid = [&](double k, double xi) {
      double kap;
      const double P = pref(k, xi, kap);
      return P * (std::exp(-2 * delta * kap) - std::exp(-2 * (L - delta) * kap)) / kap;
    };
    const QuadResult l = quadrant(g, left, delta, spec);
    const QuadResult m = quadrant(g, mid, delta, spec);
    out.left = l.value;
    out.right = l.value;  // the right slab integral is the mirror image
    out.mid = m.value;
    out.converged = out.converged && l.converged && m.converged;
  } else {
    out.left = out.mid = out.right = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

namespace {

struct SecondOrderZIntegrals {
  double surface = 0.0;
  double remainder = 0.0;
};

// z-integrated second-order density over (-inf,-d] u [d, L-d] u [L+d, inf)
// at one (k, xi), split into terms with exp(-2 d kappa) and the rest.
SecondOrderZIntegrals second_order_z_integrals(const SlabPair& g, double k, double xi, double d) {
  const double L = g.L;
  const double e = g.eps_mid(xi);
  const double de = g.contrast(xi);
  if (de == 0.0) return {};
  const SpectralPoint p{k, xi, e};
  const double kap = kappa(p);
  const double x2 = xi * xi;
  const double P = (1.0 / (32 * pi2)) / x2 * k * de * de / (std::pow(kap, 5) * e * e * e);

  const MidKernels mk = mid_kernels(p);
  const double walls = -x2 * e * mk.electric + mk.magnetic;
  const double cross = -x2 * e * mk.electric_cross + mk.magnetic_cross;

  const LeftKernels lk = left_kernels(p);
  const double X0 = -x2 * (e * lk.electric.f0 + lk.electric_first) + lk.magnetic.f0;
  const double X1 = -x2 * e * lk.electric.f1 + lk.magnetic.f1;
  // int_{-inf}^{-d} (X0 + z X1) e^{2 z kap} dz
  const double edge = std::exp(-2 * d * kap) * (X0 / (2 * kap) - X1 * (d / (2 * kap) + 1 / (4 * kap * kap)));
  const double eL = std::exp(-2 * L * kap);

  SecondOrderZIntegrals out;
  out.surface = P * (walls * std::exp(-2 * d * kap) / kap + 2 * edge);
  out.remainder = P * (-walls * std::exp(-2 * (L - d) * kap) / kap + cross * (L - 2 * d) * eL -
                       2 * eL * edge);
  return out;
}

}  // namespace

RegularizedEnergy total_energy_second_order_regularized(const SlabPair& g, double delta,
                                                        const QuadSpec& spec) {
  validate(g);
  require_non_dispersive(g, "regularized total energy");
  if (!(delta > 0.0) || !(delta < 0.25 * g.L))
    throw std::domain_error("regularized energy: need 0 < delta < L/4");
  RegularizedEnergy out;
  out.delta = delta;
  for (double d : {delta, 0.5 * delta, 0.25 * delta}) {
    auto surf = [&g, d](double k, double xi) { return second_order_z_integrals(g, k, xi, d).surface; };
    auto rest = [&g, d](double k, double xi) { return second_order_z_integrals(g, k, xi, d).remainder; };
    const QuadResult s = quadrant(g, surf, d, spec);
    const QuadResult r = quadrant(g, rest, g.L, spec);
    out.converged = out.converged && s.converged && r.converged;
    out.ladder.push_back({d, s.value, r.value, s.value + r.value});
  }
  const auto& lad = out.ladder;
  double cmin = std::numeric_limits<double>::infinity(), cmax = -cmin, csum = 0.0;
  for (const LadderPoint& p : lad) {
    const double c = p.surface * p.delta * p.delta * p.delta;
    cmin = std::min(cmin, c);
    cmax = std::max(cmax, c);
    csum += c;
  }
  out.divergent_coeff = csum / lad.size();
  out.divergent_spread = (out.divergent_coeff != 0.0) ? (cmax - cmin) / std::abs(out.divergent_coeff) : 0.0;
  // The remainder has no delta^2 term, so the weights cancel the delta and
  // delta^3 terms of {d, d/2, d/4}.
  out.finite_part = (lad[0].remainder - 10.0 * lad[1].remainder + 16.0 * lad[2].remainder) / 7.0;
  out.raw_total = lad[0].raw_total;
  out.residual = out.raw_total - out.divergent_coeff / std::pow(delta, 3) - out.finite_part;
  return out;
}

double force_from_energy(const SlabPair& g, double dL, double delta, const QuadSpec& spec) {
  validate(g);
  require_non_dispersive(g, "force from energy");
  if (!(dL > 0.0) || !(dL < 0.1 * g.L)) throw std::domain_error("force from energy: need 0 < dL < L/10");
  if (delta == 0.0) delta = 1e-2 * (g.L - dL);
  SlabPair hi = g, lo = g;
  hi.L = g.L + dL;
  lo.L = g.L - dL;
  const double eh = total_energy_second_order_regularized(hi, delta, spec).finite_part;
  const double el = total_energy_second_order_regularized(lo, delta, spec).finite_part;
  return -(eh - el) / (2 * dL);
}

QuadResult lifshitz_force_exact(double eps, double eps_mid, double L, const QuadSpec& spec) {
  if (!(L > 0.0)) throw std::domain_error("lifshitz: L must be positive");
  if (!(eps >= 1.0) || !(eps_mid >= 1.0) || !std::isfinite(eps_mid))
    throw std::domain_error("lifshitz: permittivities must be >= 1");
  const bool mirror = std::isinf(eps);
  auto f = [eps, eps_mid, L, mirror](double k, double xi) {
    const double k2 = k * k, x2 = xi * xi;
    const double km = std::sqrt(k2 + eps_mid * x2);
    const double ex = std::exp(-2 * km * L);
    double rte = -1.0, rtm = 1.0;
    if (!mirror) {
      if (eps == eps_mid) return 0.0;
      const double ks = std::sqrt(k2 + eps * x2);
      // Differences written out to avoid cancellation at small contrast.
      rte = (eps_mid - eps) * x2 / ((km + ks) * (km + ks));
      const double den = eps * km + eps_mid * ks;
      rtm = (eps - eps_mid) * (k2 * (eps + eps_mid) + eps * eps_mid * x2) / (den * den);
    }
    double sum = 0.0;
    for (double r : {rte, rtm}) {
      const double q = r * r * ex;
      const double one_minus = (r * r == 1.0) ? -std::expm1(-2 * km * L) : 1.0 - q;
      sum += q / one_minus;
    }
    return -(1.0 / (2 * pi2)) * k * km * sum;
  };
  QuadSpec s = spec;
  s.scale = 1.0 / (2.0 * L);
  return integrate_quadrant_polar(f, eps_mid, s);
}

double lifshitz_high_eps_extrapolation(const std::vector<double>& eps_values, double L,
                                       const QuadSpec& spec) {
  if (eps_values.size() < 3) throw std::invalid_argument("extrapolation needs three eps values");
  Eigen::Matrix3d A;
  Eigen::Vector3d F;
  for (int i = 0; i < 3; ++i) {
    const double e = eps_values[eps_values.size() - 3 + static_cast<std::size_t>(i)];
    if (!(e > 1.0) || !std::isfinite(e)) throw std::invalid_argument("extrapolation needs finite eps > 1");
    const double s = 1 / std::sqrt(e);
    A.row(i) << 1.0, s, s * std::log(s);
    F[i] = lifshitz_force_exact(e, 1.0, L, spec).value;
  }
  return A.colPivHouseholderQr().solve(F)[0];
}

double born_parameter_max(const SlabPair& g) {
  validate(g);
  double m = 0.0;
  const int n = 801;
  for (int i = 0; i < n; ++i) {
    const double xi = std::pow(10.0, -4.0 + 8.0 * i / (n - 1)) / g.L;
    m = std::max(m, std::abs(g.contrast(xi) / g.eps_mid(xi)));
  }
  return m;
}

namespace closed_form {

double density_first_order(double eps, double eps_mid, double L, double z) {
  if (!(L > 0.0) || z == 0.0 || z == L) throw std::domain_error("closed form: z on a plate");
  const double c = (eps - eps_mid) / (40 * pi2 * std::pow(eps_mid, 1.5));
  const double a = 1 / std::pow(z, 4), b = 1 / std::pow(L - z, 4);
  if (z < 0) return c * (b - a);
  if (z > L) return c * (a - b);
  return c * (a + b);
}

double density_second_order(double eps, double eps_mid, double L, double z) {
  if (!(L > 0.0) || z == 0.0 || z == L) throw std::domain_error("closed form: z on a plate");
  const double de = eps - eps_mid;
  const double c = de * de / (pi2 * std::pow(eps_mid, 2.5));
  if (z > 0 && z < L)
    return -c / 4480 * (43 / std::pow(L, 4) + 64 / std::pow(L - z, 4) + 64 / std::pow(z, 4));
  const double w = (z < 0) ? z : L - z;  // depth coordinate of the left-slab form
  return c / 560 * (13 * w / std::pow(L - w, 5) - 9 * L / std::pow(L - w, 5) + 13 / std::pow(w, 4));
}

double energy_divergent_coeff(double eps, double eps_mid) {
  const double de = eps - eps_mid;
  return de * de / (168 * pi2 * std::pow(eps_mid, 2.5));
}

double energy_finite_part(double eps, double eps_mid, double L) {
  const double de = eps - eps_mid;
  return -23 * de * de / (1920 * pi2 * std::pow(eps_mid, 2.5) * L * L * L);
}

double energy_first_order_cutoff(double eps, double eps_mid, double L, double delta) {
  const double c = (eps - eps_mid) / (60 * pi2 * std::pow(eps_mid, 1.5));
  return c * (1 / std::pow(L + delta, 3) - 1 / std::pow(L - delta, 3));
}

}  // namespace closed_form

}  // namespace casimir
