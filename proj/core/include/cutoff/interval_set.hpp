#pragma once

#include <initializer_list>
#include <span>
#include <vector>

namespace cutoff {

class RadialDistribution;

// Half-open interval (lo, hi]. An interval with lo == 0 also owns the point 0,
// which is a null set for every supported distance law.
struct Interval {
  double lo;
  double hi;

  bool contains(double d) const { return (lo < d || (lo == 0.0 && d == 0.0)) && d <= hi; }
  double length() const { return hi - lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Finite union of half-open intervals in canonical form: sorted, non-empty,
// pairwise disjoint and non-adjacent (hi_k < lo_{k+1}).
class IntervalSet {
 public:
  IntervalSet() = default;

  // Canonicalizes an arbitrary list: empty pieces are dropped, overlapping or
  // touching pieces merged. Throws DomainError on lo > hi or non-finite ends.
  explicit IntervalSet(std::vector<Interval> pieces);
  IntervalSet(std::initializer_list<Interval> pieces)
      : IntervalSet(std::vector<Interval>(pieces)) {}

  std::span<const Interval> intervals() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  std::size_t size() const { return pieces_.size(); }

  bool contains(double d) const;

  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  // Set difference this \ other.
  IntervalSet subtract(const IntervalSet& other) const;
  IntervalSet symmetric_difference(const IntervalSet& other) const;
  // Complement relative to (lo, hi].
  IntervalSet complement(double lo, double hi) const;

  double measure(const RadialDistribution& dist) const;
  double lebesgue_length() const;

  // Sorted interval endpoints, duplicates removed.
  std::vector<double> endpoints() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  std::vector<Interval> pieces_;
};

}  // namespace cutoff
