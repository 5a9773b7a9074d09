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

// Monte Carlo evaluation of the first-order energy density outside two
// dielectric bodies in vacuum, using the real-space homogeneous Green's
// function and importance sampling over the body volumes.

#ifndef CASIMIR_MONTECARLO_HPP
#define CASIMIR_MONTECARLO_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace casimir {

/// Axis-aligned box; any bound may be infinite.
struct Body {
  Eigen::Vector3d lo;
  Eigen::Vector3d hi;

  bool contains(const Eigen::Vector3d& p) const;
};

struct BoxPairShape {
  double L = 1.0;
  double d = 1.0;
};
struct SlabPairShape {
  double L = 1.0;
};
struct CustomShape {};

using VolumeDescriptor = std::variant<BoxPairShape, SlabPairShape, CustomShape>;

std::string descriptor_name(const VolumeDescriptor& d);

/// Mixture weights of the importance sampler.
struct SamplerWeights {
  double depth_exponential = 0.5;  // rest is the power law 3 h0^3 / (h0 + t)^4
  double transverse_cauchy = 0.7;  // rest is uniform over the cross-section
};

struct WeightedPoint {
  Eigen::Vector3d s;
  double pdf = 0.0;
};

/// Importance sampler over one body for a fixed observation point and
/// frequency. Depth t is measured from the face that looks at the
/// observation point, h0 is the distance to that face, and the transverse
/// coordinates follow a Cauchy law of width h0 + t centred under the point.
class BodySampler {
 public:
  BodySampler(const Body& body, const Eigen::Vector3d& r, double xi, const SamplerWeights& w = {});

  WeightedPoint operator()(const std::array<double, 5>& u) const;
  double pdf(const Eigen::Vector3d& s) const;

 private:
  struct Axis {
    double lo, hi;
    bool finite;
  };
  double depth_pdf(double t) const;
  double transverse_pdf(double x, double y, double h) const;

  Body body_;
  Eigen::Vector3d r_;
  SamplerWeights w_;
  double face_ = 0.0;
  double dir_ = 1.0;  // +1 when depth grows with z
  double h0_ = 0.0;
  double depth_max_ = 0.0;
  double rate_ = 0.0;
  double exp_mass_ = 1.0;  // 1 - exp(-rate * depth_max)
  double pow_mass_ = 1.0;  // 1 - (h0 / (h0 + depth_max))^3
  Axis ax_{}, ay_{};
  bool uniform_ok_ = false;
};

class VolumePair {
 public:
  /// Two semi-infinite square columns |x|, |y| <= d/2 with z <= 0 and z >= L.
  static VolumePair box_pair(double L, double d);
  static VolumePair box_pair_from_lambda(double lambda, double d = 1.0);
  static VolumePair slab_pair(double L);
  static VolumePair from_bodies(const Body& a, const Body& b);

  bool contains(const Eigen::Vector3d& p) const;
  const std::array<Body, 2>& bodies() const { return bodies_; }
  const VolumeDescriptor& descriptor() const { return descriptor_; }
  BodySampler sampler(std::size_t body, const Eigen::Vector3d& r, double xi,
                      const SamplerWeights& w = {}) const;

 private:
  VolumePair(std::array<Body, 2> b, VolumeDescriptor d) : bodies_(b), descriptor_(d) {}
  std::array<Body, 2> bodies_;
  VolumeDescriptor descriptor_;
};

/// Uniform doubles in [0, 1) from mt19937_64 seeded by (seed, stream).
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t stream);
  double uniform();

 private:
  std::mt19937_64 gen_;
};

struct McSpec {
  std::size_t n_samples = 100000;  // per body
  std::uint64_t seed = 1;
  std::size_t batch_size = 4096;
  std::size_t xi_nodes = 48;
  double xi_scale = 0.0;  // 0: 1 / (2 h) with h the distance to the nearest body
  unsigned threads = 0;   // 0: hardware concurrency
  SamplerWeights weights;
};

void validate(const McSpec& spec);

struct McResult {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
};

struct GreenEstimate {
  Eigen::Matrix3d electric = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d magnetic = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d electric_err = Eigen::Matrix3d::Zero();
  Eigen::Matrix3d magnetic_err = Eigen::Matrix3d::Zero();
  std::size_t n_samples = 0;
};

/// First-order equal-point scattering Green's function at r, vacuum
/// background: electric part -xi^2 de int_V H H d^3s and the two-sided curl
/// part -xi^2 de int_V (curl H)(curl H)^T d^3s.
GreenEstimate g1_general(const Eigen::Vector3d& r, const VolumePair& v, double xi, double eps,
                         std::size_t n, std::uint64_t seed, const SamplerWeights& w = {});

/// First-order energy density at r outside the bodies (non-dispersive eps,
/// vacuum background), Gauss-Legendre in xi around the volume estimate.
McResult energy_density_first_order_general(const Eigen::Vector3d& r, const VolumePair& v,
                                            double eps, const McSpec& spec = {});

/// Infinite-plate first-order density in a vacuum gap, 0 < z < L.
double infinite_plate_density(double eps, double L, double z);

struct DensityRow {
  double X = 0.0, Y = 0.0, Z = 0.0;
  double rho = 0.0;
  double ratio = 0.0;
  double std_error = 0.0;  // of the ratio
  std::size_t n_samples = 0;
  bool flagged = false;  // inside a body, or no infinite-plate reference
  std::string note;
};

/// Density on a grid of dimensionless points (X, Y, Z) = (x, y, z) / d in
/// units of the infinite-plate density. All points share the seed and the
/// xi nodes, so ratios between rows are correlated.
std::vector<DensityRow> density_map(const VolumePair& v, double eps,
                                    const std::vector<Eigen::Vector3d>& grid, double lambda,
                                    const McSpec& spec = {});

}  // namespace casimir

#endif
