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

#include "casimir/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <random>

#include "casimir/montecarlo.hpp"
#include "casimir/planar.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;

double rel(double a, double b) {
  if (a == b) return 0.0;
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

class Checker {
 public:
  template <class F>
  void run(const std::string& name, const std::string& statement, double tol, F&& measure) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r{name, statement, false, 0.0, tol, 0.0};
    try {
      r.measured = measure();
      r.passed = std::isfinite(r.measured) && r.measured <= tol;
    } catch (const std::exception& e) {
      r.measured = std::numeric_limits<double>::quiet_NaN();
      r.statement += std::string(" [threw: ") + e.what() + "]";
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
  std::vector<CheckResult> results;
};

std::vector<SpectralPoint> random_points(std::uint64_t seed, std::size_t n) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<SpectralPoint> pts;
  pts.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double k = (i % 50 == 0) ? 0.0 : std::pow(10.0, -3.0 + 6.0 * u(gen));
    const double xi = std::pow(10.0, -3.0 + 6.0 * u(gen));
    const double e = 1.0 + 9.0 * u(gen);
    pts.push_back({k, xi, e});
  }
  return pts;
}

// |combination| relative to the largest single term entering it.
double stress_residual(const KernelPair& m, const SpectralPoint& p) {
  const double w = p.xi * p.xi * p.eps_mid;
  const double scale = std::max({w * std::abs(m.electric.xx), w * std::abs(m.electric.zz),
                                 std::abs(m.magnetic.xx), std::abs(m.magnetic.zz)});
  const double c = stress_combination(m, p);
  return scale > 0.0 ? std::abs(c) / scale : std::abs(c);
}

double diag_diff(const DiagKernel3& a, const DiagKernel3& b) {
  return std::max({std::abs(a.xx - b.xx), std::abs(a.yy - b.yy), std::abs(a.zz - b.zz)});
}

double homogeneity_defect(const std::function<KernelPair(const SpectralPoint&)>& f, int degree,
                          const std::vector<SpectralPoint>& pts) {
  double worst = 0.0;
  for (const SpectralPoint& p : pts) {
    for (double lam : {2.0, 10.0}) {
      const KernelPair a = f(p);
      const KernelPair b = f({lam * p.k_par, lam * p.xi, p.eps_mid});
      const double se = std::pow(lam, degree), sb = std::pow(lam, degree + 2);
      for (auto [x, y, s] : {std::tuple{a.electric.xx, b.electric.xx, se}, {a.electric.zz, b.electric.zz, se},
                             {a.magnetic.xx, b.magnetic.xx, sb}, {a.magnetic.zz, b.magnetic.zz, sb}})
        worst = std::max(worst, rel(x * s, y));
    }
  }
  return worst;
}

}  // namespace

KernelSet default_kernels() {
  return {m1, m1_delta, m2_lr, m2_ll, g1};
}

std::vector<CheckResult> run_verify(const VerifyOptions& opt) {
  Checker c;
  const KernelSet& K = opt.kernels;
  const std::vector<SpectralPoint> pts = random_points(opt.seed, 10000);

  c.run("m1_stress_cancellation",
        "first-order zz stress combination of m1 vanishes (no force at linear order)", 1e-12, [&] {
          double w = 0.0;
          for (const auto& p : pts) w = std::max(w, stress_residual(K.m1(p), p));
          return w;
        });
  c.run("m1_delta_stress_cancellation",
        "the contact-term combination vanishes (single scattering carries no force)", 1e-12, [&] {
          double w = 0.0;
          for (const auto& p : pts) w = std::max(w, stress_residual(K.m1_delta(p), p));
          return w;
        });
  c.run("m1_trace_combination", "tr[-xi^2 eps E + B] of m1 equals -8 k^4 eps xi^2", 1e-12, [&] {
    double w = 0.0;
    for (const auto& p : pts) {
      const KernelPair m = K.m1(p);
      const double a = p.eps_mid * p.xi * p.xi, k4 = std::pow(p.k_par, 4);
      const double scale = std::max(a * std::abs(m.electric.trace()), std::abs(m.magnetic.trace()));
      w = std::max(w, std::abs(trace_combination(m, p) + 8 * k4 * a) / scale);
    }
    return w;
  });
  c.run("m2_lr_stress_bracket",
        "cross-slab combination equals -8 eps xi^2 kappa^2 (2k^4 + 2k^2 eps xi^2 + eps^2 xi^4)", 1e-12, [&] {
          double w = 0.0;
          for (const auto& p : pts) {
            const KernelPair m = K.m2_lr(p);
            const double a = p.eps_mid * p.xi * p.xi, k2 = p.k_par * p.k_par;
            const double target = -8 * a * (k2 + a) * (2 * k2 * k2 + 2 * k2 * a + a * a);
            const double scale = std::max(a * std::abs(m.electric.xx), std::abs(m.magnetic.xx));
            w = std::max(w, std::abs(stress_combination(m, p) - target) / scale);
          }
          return w;
        });
  c.run("m2_ll_equals_m1", "same-slab double scattering kernels coincide with m1", 0.0, [&] {
    double w = 0.0;
    for (const auto& p : pts) {
      const KernelPair a = K.m2_ll(p), b = K.m1(p);
      w = std::max({w, diag_diff(a.electric, b.electric), diag_diff(a.magnetic, b.magnetic)});
    }
    return w;
  });
  c.run("g1_reduces_to_m1", "equal-point kernel g1 at z != s_z equals m1", 0.0, [&] {
    double w = 0.0;
    for (const auto& p : pts) {
      const KernelPair a = K.g1(p, 1), b = K.m1(p);
      w = std::max({w, diag_diff(a.electric, b.electric), diag_diff(a.magnetic, b.magnetic)});
    }
    return w;
  });
  c.run("in_plane_isotropy", "xx = yy for every kernel family", 0.0, [&] {
    double w = 0.0;
    for (const auto& p : pts) {
      for (const KernelPair& m : {K.m1(p), K.m1_delta(p), K.m2_lr(p), K.g1(p, 0)})
        w = std::max({w, std::abs(m.electric.xx - m.electric.yy), std::abs(m.magnetic.xx - m.magnetic.yy)});
    }
    return w;
  });
  c.run("kernel_homogeneity",
        "electric kernels homogeneous of degree 4 (m1), 6 (m2_lr), 0 (m1_delta); magnetic two higher",
        1e-13, [&] {
          const std::vector<SpectralPoint> few(pts.begin(), pts.begin() + 500);
          return std::max({homogeneity_defect(K.m1, 4, few), homogeneity_defect(K.m2_lr, 6, few),
                           homogeneity_defect(K.m1_delta, 0, few)});
        });

  if (opt.quick) return c.results;

  const double c2 = -23.0 / (640 * pi * pi);
  const SlabPair canon{1.0, Permittivity::constant(2.0), Permittivity::constant(1.0)};

  c.run("first_order_stress_zero", "first-order force vanishes for any slab pair", 0.0, [&] {
    const SlabPair disp{1.0, Permittivity::drude_lorentz(1.0, 1.0, 1.0), Permittivity::constant(1.0)};
    return std::abs(stress_zz_first_order(canon, 0.5)) + std::abs(stress_zz_first_order(disp, 0.25));
  });
  c.run("second_order_force_closed_form", "second-order stress equals -23/(640 pi^2) for eps=2, L=1", 1e-6,
        [&] { return rel(stress_zz_second_order(canon).value, c2); });
  c.run("same_slab_terms_zero", "LL = RR = 0 and the contact part is 0 (relative to the total)", 1e-12, [&] {
    const StressParts s = stress_parts_second_order(canon, 0.5);
    return std::max({std::abs(s.LL), std::abs(s.RR), std::abs(s.delta_term)}) / std::abs(c2);
  });
  c.run("cross_slab_halves", "LR = RL = total / 2", 1e-8, [&] {
    const StressParts s = stress_parts_second_order(canon, 0.5);
    return std::max(rel(s.LR, c2 / 2), rel(s.RL, c2 / 2));
  });
  c.run("first_order_density_mid", "vacuum-gap density equals (eps-1)/(40 pi^2)[1/z^4 + 1/(L-z)^4]", 1e-6,
        [&] {
          double w = 0.0;
          for (double z : {0.1, 0.3, 0.5, 0.8})
            w = std::max(w, rel(energy_density_first_order(canon, z).value,
                                closed_form::density_first_order(2.0, 1.0, 1.0, z)));
          return w;
        });
  c.run("first_order_total_zero", "no Casimir energy at first order", 1e-10, [&] {
    const FirstOrderEnergy e = total_energy_first_order(canon);
    return std::abs(e.total) / std::abs(closed_form::energy_finite_part(2.0, 1.0, 1.0));
  });
  c.run("second_order_density_closed_forms", "mid, left and right second-order densities match closed forms",
        1e-4, [&] {
          double w = 0.0;
          for (double z : {-1.0, -0.2, 0.25, 0.5, 0.9, 1.3})
            w = std::max(w, rel(energy_density_second_order(canon, z).value,
                                closed_form::density_second_order(2.0, 1.0, 1.0, z)));
          return w;
        });
  c.run("regularized_energy", "delta-ladder gives 1/(168 pi^2) and -23/(1920 pi^2)", 1e-4, [&] {
    const RegularizedEnergy e = total_energy_second_order_regularized(canon, 0.01);
    return std::max(rel(e.divergent_coeff, 1.0 / (168 * pi * pi)), rel(e.finite_part, -23.0 / (1920 * pi * pi)));
  });
  c.run("force_from_energy", "-dE/dL of the finite energy equals the direct stress", 1e-4,
        [&] { return rel(force_from_energy(canon, 1e-3), c2); });
  c.run("lifshitz_perfect_mirror", "Lifshitz force for perfect mirrors equals -pi^2/240", 1e-6,
        [&] { return rel(lifshitz_force_exact(INFINITY, 1.0, 1.0).value, -pi * pi / 240); });
  c.run("lifshitz_born_small_contrast", "Lifshitz force agrees with the Born result at contrast 1e-3", 1e-2,
        [&] {
          return rel(lifshitz_force_exact(1.001, 1.0, 1.0).value, stress_zz_second_order_closed(1.001, 1.0, 1.0));
        });
  c.run("lifshitz_born_third_order",
        "Born truncation error scales as contrast^3 (local exponent between 0.1 and 0.05 within 0.2 of 3)", 0.2,
        [&] {
          QuadSpec s = planar_default_spec();
          s.rel_tol = 1e-10;
          auto diff = [&](double de) {
            return std::abs(lifshitz_force_exact(1.0 + de, 1.0, 1.0, s).value -
                            stress_zz_second_order_closed(1.0 + de, 1.0, 1.0));
          };
          return std::abs(std::log2(diff(0.1) / diff(0.05)) - 3.0);
        });
  c.run("green_reciprocity", "H(r, r') = H(r', r)^T", 1e-15, [&] {
    const Eigen::Vector3d a(0.1, -0.4, 0.3), b(0.7, 0.2, -0.5);
    const Eigen::Matrix3d h1 = h_prop_realspace(a, b, 1.3, 2.0), h2 = h_prop_realspace(b, a, 1.3, 2.0);
    return (h1 - h2.transpose()).cwiseAbs().maxCoeff() / h1.cwiseAbs().maxCoeff();
  });
  c.run("mc_slab_limit", "Monte Carlo density between infinite slabs equals the planar result", 1.0, [&] {
    McSpec s;
    s.n_samples = 20000;
    s.seed = opt.seed;
    const McResult m = energy_density_first_order_general({0, 0, 0.3}, VolumePair::slab_pair(1.0), 2.0, s);
    const double ref = infinite_plate_density(2.0, 1.0, 0.3);
    // deviation in units of the allowed band max(3 sigma, 1%)
    return std::abs(m.value - ref) / std::max(3 * m.std_error, 0.01 * ref);
  });
  return c.results;
}

}  // namespace casimir
