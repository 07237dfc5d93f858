#pragma once

#include <optional>
#include <span>
#include <vector>

namespace cutoff {

// One knot (d, F(d)) of a piecewise-linear distance CDF.
struct CdfKnot {
  double distance;
  double cumulative;

  friend bool operator==(const CdfKnot&, const CdfKnot&) = default;
};

// The common law of node-sink distance on [0, R].
//
// Two representations are supported. A uniform-disk law, where nodes are
// uniform over the disk area and F(d) = (d/R)^2, and a piecewise-linear CDF
// given by knots. Both are atomless, so every interval measure is an exact
// difference of CDF values and endpoint conventions never matter. Instances
// are immutable after construction.
class RadialDistribution {
 public:
  enum class Kind { kUniformDisk, kPiecewiseLinearCdf };

  static RadialDistribution uniform_disk(double radius);

  // Knots must start at (0, 0), end at (R, 1), have strictly increasing
  // distances and non-decreasing cumulative values.
  static RadialDistribution piecewise_linear(double radius,
                                             std::vector<CdfKnot> knots);

  // Resamples a density callback onto `knot_count` equally spaced knots,
  // integrating each cell with Simpson's rule and normalizing the total.
  template <typename Density>
  static RadialDistribution from_density(double radius, Density&& density,
                                         std::size_t knot_count = 10001);

  Kind kind() const { return kind_; }
  double radius() const { return radius_; }

  // F(d). Throws DomainError unless 0 <= d <= R.
  double cdf(double d) const;

  // mu((a, b]) = F(b) - F(a). Throws DomainError unless 0 <= a <= b <= R.
  double interval_measure(double a, double b) const;

  // Smallest d with F(d) = p. Throws DomainError unless 0 <= p <= 1.
  double quantile(double p) const;

  // sup f. Always present for the two supported kinds: 2/R for the uniform
  // disk, the steepest knot slope for piecewise-linear CDFs.
  std::optional<double> density_sup() const { return density_sup_; }

  // True when F is strictly increasing on [0, R], i.e. Lebesgue measure is
  // absolutely continuous with respect to this law.
  bool strictly_positive_density() const { return strictly_increasing_; }

  // Knots of a piecewise-linear CDF; empty for the uniform disk.
  std::span<const CdfKnot> knots() const { return knots_; }

  friend bool operator==(const RadialDistribution&,
                         const RadialDistribution&) = default;

 private:
  RadialDistribution() = default;

  void check_distance(double d) const;

  Kind kind_ = Kind::kUniformDisk;
  double radius_ = 1.0;
  std::vector<CdfKnot> knots_;
  std::optional<double> density_sup_;
  bool strictly_increasing_ = true;
};

template <typename Density>
RadialDistribution RadialDistribution::from_density(double radius,
                                                    Density&& density,
                                                    std::size_t knot_count) {
  if (knot_count < 2) knot_count = 2;
  std::vector<CdfKnot> knots;
  knots.reserve(knot_count);
  const double step = radius / static_cast<double>(knot_count - 1);
  double acc = 0.0;
  knots.push_back({0.0, 0.0});
  for (std::size_t k = 1; k < knot_count; ++k) {
    const double a = step * static_cast<double>(k - 1);
    const double b = (k + 1 == knot_count) ? radius : step * static_cast<double>(k);
    acc += (b - a) / 6.0 * (density(a) + 4.0 * density(0.5 * (a + b)) + density(b));
    knots.push_back({b, acc});
  }
  for (auto& knot : knots) knot.cumulative /= acc;
  knots.back().cumulative = 1.0;
  return piecewise_linear(radius, std::move(knots));
}

}  // namespace cutoff
