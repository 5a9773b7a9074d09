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

#include "casimir/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

#include <boost/math/special_functions/legendre.hpp>

#include "casimir/green.hpp"
#include "casimir/planar.hpp"

namespace casimir {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

void validate_body(const Body& b) {
  for (int i = 0; i < 3; ++i)
    if (!(b.lo[i] < b.hi[i])) throw std::invalid_argument("body: need lo < hi on every axis");
}

double cauchy_angle(double bound, double x0, double h) {
  if (std::isinf(bound)) return std::copysign(pi / 2, bound);
  return std::atan((bound - x0) / h);
}

// Welford accumulator over a fixed number of components.
struct Moments {
  Eigen::VectorXd mean;
  Eigen::VectorXd m2;
  std::size_t n = 0;

  explicit Moments(Eigen::Index dim) : mean(Eigen::VectorXd::Zero(dim)), m2(Eigen::VectorXd::Zero(dim)) {}

  void push(const Eigen::VectorXd& y) {
    ++n;
    const Eigen::VectorXd d = y - mean;
    mean += d / static_cast<double>(n);
    m2 += d.cwiseProduct(y - mean);
  }

  // Chan et al. pairwise update.
  void merge(const Moments& o) {
    if (o.n == 0) return;
    const double na = static_cast<double>(n), nb = static_cast<double>(o.n), nt = na + nb;
    const Eigen::VectorXd d = o.mean - mean;
    mean += d * (nb / nt);
    m2 += o.m2 + d.cwiseProduct(d) * (na * nb / nt);
    n += o.n;
  }

  Eigen::VectorXd std_error() const {
    if (n < 2) return Eigen::VectorXd::Zero(mean.size());
    const double nn = static_cast<double>(n);
    return (m2 / (nn - 1.0) / nn).cwiseSqrt();
  }
};

// Runs `fill(stream, y)` n times in batches; batch b draws from stream
// (seed, b) and batches are merged in index order, so the result does not
// depend on the thread count.
template <class Fill>
Moments run_batches(std::size_t n, std::uint64_t seed, std::size_t batch, unsigned threads,
                    Eigen::Index dim, const Fill& fill) {
  const std::size_t nb = (n + batch - 1) / batch;
  std::vector<Moments> parts(nb, Moments(dim));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    Eigen::VectorXd y(dim);
    for (std::size_t b = next++; b < nb; b = next++) {
      SampleStream stream(seed, b);
      const std::size_t count = std::min(batch, n - b * batch);
      for (std::size_t i = 0; i < count; ++i) {
        fill(stream, y);
        parts[b].push(y);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, nb));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  Moments total(dim);
  for (const Moments& m : parts) total.merge(m);
  return total;
}

std::array<double, 5> draw5(SampleStream& s) {
  return {s.uniform(), s.uniform(), s.uniform(), s.uniform(), s.uniform()};
}

// Gauss-Legendre on t in (0, 1) mapped to xi = scale t / (1 - t).
struct XiNode {
  double xi;
  double weight;
};

std::vector<XiNode> xi_nodes(std::size_t n, double scale) {
  const unsigned N = static_cast<unsigned>(n);
  std::vector<double> zeros = boost::math::legendre_p_zeros<double>(N);  // non-negative half
  std::vector<XiNode> out;
  auto add = [&](double x) {
    const double p = boost::math::legendre_p_prime(static_cast<int>(N), x);
    const double w = 2.0 / ((1.0 - x * x) * p * p);
    const double t = 0.5 * (1.0 + x);
    out.push_back({scale * t / (1.0 - t), 0.5 * w * scale / ((1.0 - t) * (1.0 - t))});
  };
  for (double x : zeros) {
    add(x);
    if (x != 0.0) add(-x);
  }
  std::sort(out.begin(), out.end(), [](const XiNode& a, const XiNode& b) { return a.xi < b.xi; });
  return out;
}

// Distance along z from r to the nearest body face it looks at.
double nearest_face_distance(const VolumePair& v, const Eigen::Vector3d& r) {
  double h = inf;
  for (const Body& b : v.bodies()) {
    if (r.z() >= b.hi.z()) h = std::min(h, r.z() - b.hi.z());
    else if (r.z() <= b.lo.z()) h = std::min(h, b.lo.z() - r.z());
  }
  return h;
}

void check_observation_point(const Eigen::Vector3d& r, const VolumePair& v) {
  if (!r.allFinite()) throw std::domain_error("observation point must be finite");
  if (v.contains(r)) throw std::domain_error("observation point lies inside a body");
}

}  // namespace

bool Body::contains(const Eigen::Vector3d& p) const {
  return (p.array() >= lo.array()).all() && (p.array() <= hi.array()).all();
}

std::string descriptor_name(const VolumeDescriptor& d) {
  if (std::holds_alternative<BoxPairShape>(d)) return "box_pair";
  if (std::holds_alternative<SlabPairShape>(d)) return "slab_pair";
  return "custom";
}

BodySampler::BodySampler(const Body& body, const Eigen::Vector3d& r, double xi, const SamplerWeights& w)
    : body_(body), r_(r), w_(w) {
  validate_body(body);
  if (!(xi > 0.0) || !std::isfinite(xi)) throw std::domain_error("sampler: xi must be positive");
  if (!(w.depth_exponential >= 0.0 && w.depth_exponential <= 1.0) ||
      !(w.transverse_cauchy >= 0.0 && w.transverse_cauchy <= 1.0))
    throw std::invalid_argument("sampler: mixture weights must lie in [0, 1]");
  if (body.contains(r)) throw std::domain_error("sampler: observation point inside the body");
  if (r.z() > body.hi.z()) {
    face_ = body.hi.z();
    dir_ = -1.0;
    h0_ = r.z() - face_;
  } else if (r.z() < body.lo.z()) {
    face_ = body.lo.z();
    dir_ = 1.0;
    h0_ = face_ - r.z();
  } else {
    throw std::domain_error("sampler: observation point must lie strictly above or below each body");
  }
  depth_max_ = body.hi.z() - body.lo.z();
  rate_ = 2.0 * xi;
  exp_mass_ = std::isinf(depth_max_) ? 1.0 : -std::expm1(-rate_ * depth_max_);
  pow_mass_ = std::isinf(depth_max_) ? 1.0 : 1.0 - std::pow(h0_ / (h0_ + depth_max_), 3);
  ax_ = {body.lo.x(), body.hi.x(), std::isfinite(body.lo.x()) && std::isfinite(body.hi.x())};
  ay_ = {body.lo.y(), body.hi.y(), std::isfinite(body.lo.y()) && std::isfinite(body.hi.y())};
  uniform_ok_ = ax_.finite && ay_.finite;
}

double BodySampler::depth_pdf(double t) const {
  const double we = w_.depth_exponential;
  const double h = h0_ + t;
  return we * rate_ * std::exp(-rate_ * t) / exp_mass_ +
         (1.0 - we) * 3.0 * h0_ * h0_ * h0_ / (h * h * h * h) / pow_mass_;
}

double BodySampler::transverse_pdf(double x, double y, double h) const {
  auto cauchy = [h](const Axis& a, double x0, double v) {
    const double span = cauchy_angle(a.hi, x0, h) - cauchy_angle(a.lo, x0, h);
    const double q = (v - x0) / h;
    return 1.0 / (h * span * (1.0 + q * q));
  };
  const double c = cauchy(ax_, r_.x(), x) * cauchy(ay_, r_.y(), y);
  if (!uniform_ok_) return c;
  const double wc = w_.transverse_cauchy;
  return wc * c + (1.0 - wc) / ((ax_.hi - ax_.lo) * (ay_.hi - ay_.lo));
}

WeightedPoint BodySampler::operator()(const std::array<double, 5>& u) const {
  double t;
  if (u[0] < w_.depth_exponential) {
    t = -std::log1p(-u[1] * exp_mass_) / rate_;
  } else {
    t = h0_ * (std::pow(1.0 - u[1] * pow_mass_, -1.0 / 3.0) - 1.0);
  }
  t = std::clamp(t, 0.0, depth_max_);
  const double h = h0_ + t;

  auto cauchy = [h](const Axis& a, double x0, double v) {
    const double lo = cauchy_angle(a.lo, x0, h), hi = cauchy_angle(a.hi, x0, h);
    return std::clamp(x0 + h * std::tan(lo + v * (hi - lo)), a.lo, a.hi);
  };
  double x, y;
  if (!uniform_ok_ || u[2] < w_.transverse_cauchy) {
    x = cauchy(ax_, r_.x(), u[3]);
    y = cauchy(ay_, r_.y(), u[4]);
  } else {
    x = ax_.lo + u[3] * (ax_.hi - ax_.lo);
    y = ay_.lo + u[4] * (ay_.hi - ay_.lo);
  }
  const Eigen::Vector3d s(x, y, face_ + dir_ * t);
  return {s, depth_pdf(t) * transverse_pdf(x, y, h)};
}

double BodySampler::pdf(const Eigen::Vector3d& s) const {
  if (!body_.contains(s)) return 0.0;
  const double t = dir_ * (s.z() - face_);
  return depth_pdf(t) * transverse_pdf(s.x(), s.y(), h0_ + t);
}

VolumePair VolumePair::box_pair(double L, double d) {
  if (!(L > 0.0) || !(d > 0.0) || !std::isfinite(L) || !std::isfinite(d))
    throw std::invalid_argument("box pair: L and d must be positive");
  const Body lower{{-d / 2, -d / 2, -inf}, {d / 2, d / 2, 0.0}};
  const Body upper{{-d / 2, -d / 2, L}, {d / 2, d / 2, inf}};
  return VolumePair({lower, upper}, BoxPairShape{L, d});
}

VolumePair VolumePair::box_pair_from_lambda(double lambda, double d) {
  return box_pair(lambda * d, d);
}

VolumePair VolumePair::slab_pair(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw std::invalid_argument("slab pair: L must be positive");
  const Body lower{{-inf, -inf, -inf}, {inf, inf, 0.0}};
  const Body upper{{-inf, -inf, L}, {inf, inf, inf}};
  return VolumePair({lower, upper}, SlabPairShape{L});
}

VolumePair VolumePair::from_bodies(const Body& a, const Body& b) {
  validate_body(a);
  validate_body(b);
  return VolumePair({a, b}, CustomShape{});
}

bool VolumePair::contains(const Eigen::Vector3d& p) const {
  return bodies_[0].contains(p) || bodies_[1].contains(p);
}

BodySampler VolumePair::sampler(std::size_t body, const Eigen::Vector3d& r, double xi,
                                const SamplerWeights& w) const {
  return BodySampler(bodies_.at(body), r, xi, w);
}

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  gen_.seed(seq);
}

double SampleStream::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

void validate(const McSpec& spec) {
  if (spec.n_samples == 0) throw std::domain_error("Monte Carlo: zero samples requested");
  if (spec.batch_size == 0) throw std::invalid_argument("Monte Carlo: batch size must be positive");
  if (spec.xi_nodes < 2 || spec.xi_nodes > 512) throw std::invalid_argument("Monte Carlo: xi_nodes in [2, 512]");
  if (!(spec.xi_scale >= 0.0) || !std::isfinite(spec.xi_scale))
    throw std::invalid_argument("Monte Carlo: xi_scale must be >= 0");
}

GreenEstimate g1_general(const Eigen::Vector3d& r, const VolumePair& v, double xi, double eps,
                         std::size_t n, std::uint64_t seed, const SamplerWeights& w) {
  check_observation_point(r, v);
  if (n == 0) throw std::domain_error("Monte Carlo: zero samples requested");
  if (!(eps >= 1.0) || !std::isfinite(eps)) throw std::domain_error("Monte Carlo: eps must be finite and >= 1");
  const std::array<BodySampler, 2> samplers{v.sampler(0, r, xi, w), v.sampler(1, r, xi, w)};
  GreenEstimate out;
  out.n_samples = n;
  const double de = eps - 1.0;
  if (de == 0.0) return out;
  const double pref = -xi * xi * de;

  auto fill = [&](SampleStream& stream, Eigen::VectorXd& y) {
    Eigen::Matrix3d e = Eigen::Matrix3d::Zero(), b = Eigen::Matrix3d::Zero();
    for (const BodySampler& smp : samplers) {
      const WeightedPoint p = smp(draw5(stream));
      const Eigen::Matrix3d H = h_prop_realspace(r, p.s, xi, 1.0);
      const Eigen::Matrix3d C = curl_h_prop(r, p.s, xi, 1.0);
      e += H * H / p.pdf;
      b += C * C.transpose() / p.pdf;
    }
    y.head<9>() = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(e.data()) * pref;
    y.tail<9>() = Eigen::Map<const Eigen::Matrix<double, 9, 1>>(b.data()) * pref;
  };
  const Moments m = run_batches(n, seed, 4096, 1, 18, fill);
  const Eigen::VectorXd se = m.std_error();
  out.electric = Eigen::Map<const Eigen::Matrix3d>(m.mean.data());
  out.magnetic = Eigen::Map<const Eigen::Matrix3d>(m.mean.data() + 9);
  out.electric_err = Eigen::Map<const Eigen::Matrix3d>(se.data());
  out.magnetic_err = Eigen::Map<const Eigen::Matrix3d>(se.data() + 9);
  return out;
}

McResult energy_density_first_order_general(const Eigen::Vector3d& r, const VolumePair& v,
                                            double eps, const McSpec& spec) {
  validate(spec);
  check_observation_point(r, v);
  if (!(eps >= 1.0) || !std::isfinite(eps)) throw std::domain_error("Monte Carlo: eps must be finite and >= 1");
  const double h = nearest_face_distance(v, r);
  const double scale = spec.xi_scale > 0.0 ? spec.xi_scale : 1.0 / (2.0 * h);
  const std::vector<XiNode> nodes = xi_nodes(spec.xi_nodes, scale);

  std::array<std::vector<BodySampler>, 2> samplers;
  for (std::size_t b = 0; b < 2; ++b)
    for (const XiNode& nd : nodes) samplers[b].push_back(v.sampler(b, r, nd.xi, spec.weights));

  McResult out;
  out.n_samples = spec.n_samples;
  out.seed = spec.seed;
  const double de = eps - 1.0;
  if (de == 0.0) return out;

  // (de / 2 pi) tr[xi^4 H^2 - xi^2 (curl H)(curl H)^T] written with x = xi R:
  // (de / 2 pi) e^{-2x} (8x^2 + 12x + 6) / (16 pi^2 R^6).
  const double pref = de / (2 * pi) / (16 * pi * pi);
  auto fill = [&](SampleStream& stream, Eigen::VectorXd& y) {
    double acc = 0.0;
    for (std::size_t b = 0; b < 2; ++b) {
      const std::array<double, 5> u = draw5(stream);
      for (std::size_t j = 0; j < nodes.size(); ++j) {
        const WeightedPoint p = samplers[b][j](u);
        const double R = (p.s - r).norm();
        const double x = nodes[j].xi * R;
        const double R2 = R * R;
        acc += nodes[j].weight * std::exp(-2 * x) * (8 * x * x + 12 * x + 6) / (R2 * R2 * R2) / p.pdf;
      }
    }
    y[0] = pref * acc;
  };
  const Moments m = run_batches(spec.n_samples, spec.seed, spec.batch_size, spec.threads, 1, fill);
  out.value = m.mean[0];
  out.std_error = m.std_error()[0];
  return out;
}

double infinite_plate_density(double eps, double L, double z) {
  if (!(z > 0.0 && z < L)) throw std::domain_error("infinite-plate density: need 0 < z < L");
  return closed_form::density_first_order(eps, 1.0, L, z);
}

std::vector<DensityRow> density_map(const VolumePair& v, double eps,
                                    const std::vector<Eigen::Vector3d>& grid, double lambda,
                                    const McSpec& spec) {
  validate(spec);
  if (!(lambda > 0.0) || !std::isfinite(lambda)) throw std::invalid_argument("density map: lambda must be positive");
  double L, d;
  if (const auto* box = std::get_if<BoxPairShape>(&v.descriptor())) {
    L = box->L;
    d = box->d;
    if (std::abs(L / d - lambda) > 1e-12 * lambda)
      throw std::invalid_argument("density map: lambda does not match the box pair L/d");
  } else if (const auto* slab = std::get_if<SlabPairShape>(&v.descriptor())) {
    L = slab->L;
    d = L / lambda;
  } else {
    throw std::invalid_argument("density map: needs a box pair or slab pair");
  }

  std::vector<DensityRow> rows;
  double h_min = inf;
  for (const Eigen::Vector3d& g : grid) {
    DensityRow row;
    row.X = g.x();
    row.Y = g.y();
    row.Z = g.z();
    const Eigen::Vector3d r = g * d;
    if (!r.allFinite()) {
      row.flagged = true;
      row.note = "non-finite point";
    } else if (v.contains(r)) {
      row.flagged = true;
      row.note = "inside a body";
    } else if (!(r.z() > 0.0 && r.z() < L)) {
      row.flagged = true;
      row.note = "outside the gap plane range";
    } else {
      h_min = std::min(h_min, std::min(r.z(), L - r.z()));
    }
    rows.push_back(row);
  }
  McSpec s = spec;
  if (s.xi_scale == 0.0 && std::isfinite(h_min)) s.xi_scale = 1.0 / (2.0 * h_min);
  for (DensityRow& row : rows) {
    if (row.flagged) {
      row.rho = row.ratio = row.std_error = std::numeric_limits<double>::quiet_NaN();
      continue;
    }
    const Eigen::Vector3d r = Eigen::Vector3d(row.X, row.Y, row.Z) * d;
    const McResult m = energy_density_first_order_general(r, v, eps, s);
    const double ref = infinite_plate_density(eps, L, r.z());
    row.rho = m.value;
    row.n_samples = m.n_samples;
    if (ref == 0.0) {
      row.ratio = row.std_error = std::numeric_limits<double>::quiet_NaN();
      row.flagged = true;
      row.note = "zero reference density";
    } else {
      row.ratio = m.value / ref;
      row.std_error = m.std_error / ref;
    }
  }
  return rows;
}

}  // namespace casimir
