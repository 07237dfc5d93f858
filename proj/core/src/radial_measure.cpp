#include "cutoff/radial_measure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cutoff/errors.hpp"

namespace cutoff {

RadialDistribution RadialDistribution::uniform_disk(double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("radius must be positive and finite");
  }
  RadialDistribution dist;
  dist.kind_ = Kind::kUniformDisk;
  dist.radius_ = radius;
  dist.density_sup_ = 2.0 / radius;
  dist.strictly_increasing_ = true;
  return dist;
}

RadialDistribution RadialDistribution::piecewise_linear(
    double radius, std::vector<CdfKnot> knots) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw DomainError("radius must be positive and finite");
  }
  if (knots.size() < 2) {
    throw DomainError("piecewise-linear CDF needs at least two knots");
  }
  if (knots.front().distance != 0.0 || knots.front().cumulative != 0.0) {
    throw DomainError("first CDF knot must be (0, 0)");
  }
  if (knots.back().distance != radius || knots.back().cumulative != 1.0) {
    throw DomainError("last CDF knot must be (R, 1)");
  }

  double max_slope = 0.0;
  bool strictly_increasing = true;
  for (std::size_t k = 1; k < knots.size(); ++k) {
    const auto& lo = knots[k - 1];
    const auto& hi = knots[k];
    if (!(hi.distance > lo.distance)) {
      throw DomainError("CDF knot distances must be strictly increasing (knot " +
                        std::to_string(k) + ")");
    }
    if (!(hi.cumulative >= lo.cumulative) || hi.cumulative > 1.0) {
      throw DomainError("CDF knot values must be non-decreasing in [0, 1] (knot " +
                        std::to_string(k) + ")");
    }
    if (hi.cumulative == lo.cumulative) strictly_increasing = false;
    max_slope = std::max(max_slope, (hi.cumulative - lo.cumulative) /
                                        (hi.distance - lo.distance));
  }

  RadialDistribution dist;
  dist.kind_ = Kind::kPiecewiseLinearCdf;
  dist.radius_ = radius;
  dist.knots_ = std::move(knots);
  dist.density_sup_ = max_slope;
  dist.strictly_increasing_ = strictly_increasing;
  return dist;
}

void RadialDistribution::check_distance(double d) const {
  if (!(d >= 0.0 && d <= radius_)) {
    throw DomainError("distance " + std::to_string(d) + " outside [0, " +
                      std::to_string(radius_) + "]");
  }
}

double RadialDistribution::cdf(double d) const {
  check_distance(d);
  if (kind_ == Kind::kUniformDisk) {
    const double x = d / radius_;
    return x * x;
  }
  if (d == radius_) return 1.0;
  // First knot strictly beyond d; d >= 0 = knots_[0].distance so it is never begin().
  const auto hi = std::upper_bound(
      knots_.begin(), knots_.end(), d,
      [](double v, const CdfKnot& k) { return v < k.distance; });
  const auto lo = hi - 1;
  const double frac = (d - lo->distance) / (hi->distance - lo->distance);
  return lo->cumulative + frac * (hi->cumulative - lo->cumulative);
}

double RadialDistribution::interval_measure(double a, double b) const {
  check_distance(a);
  check_distance(b);
  if (a > b) {
    throw DomainError("interval (a, b] requires a <= b");
  }
  if (a == b) return 0.0;
  if (kind_ == Kind::kUniformDisk) {
    return (b - a) * (b + a) / (radius_ * radius_);
  }
  return cdf(b) - cdf(a);
}

double RadialDistribution::quantile(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("probability " + std::to_string(p) + " outside [0, 1]");
  }
  if (p == 0.0) return 0.0;
  if (p == 1.0 && kind_ == Kind::kUniformDisk) return radius_;
  if (kind_ == Kind::kUniformDisk) {
    return radius_ * std::sqrt(p);
  }
  const auto hi = std::lower_bound(
      knots_.begin(), knots_.end(), p,
      [](const CdfKnot& k, double v) { return k.cumulative < v; });
  if (hi->cumulative == p) return hi->distance;
  const auto lo = hi - 1;
  const double frac = (p - lo->cumulative) / (hi->cumulative - lo->cumulative);
  return std::min(hi->distance,
                  lo->distance + frac * (hi->distance - lo->distance));
}

}  // namespace cutoff
