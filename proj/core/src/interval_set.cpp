#include "cutoff/interval_set.hpp"

#include <algorithm>
#include <cmath>

#include "cutoff/errors.hpp"
#include "cutoff/radial_measure.hpp"

namespace cutoff {

IntervalSet::IntervalSet(std::vector<Interval> pieces) {
  for (const auto& p : pieces) {
    if (!std::isfinite(p.lo) || !std::isfinite(p.hi)) {
      throw DomainError("interval endpoints must be finite");
    }
    if (p.lo > p.hi) {
      throw DomainError("interval (a, b] requires a <= b");
    }
  }
  std::erase_if(pieces, [](const Interval& p) { return p.lo == p.hi; });
  std::sort(pieces.begin(), pieces.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  for (const auto& p : pieces) {
    if (!pieces_.empty() && p.lo <= pieces_.back().hi) {
      pieces_.back().hi = std::max(pieces_.back().hi, p.hi);
    } else {
      pieces_.push_back(p);
    }
  }
}

bool IntervalSet::contains(double d) const {
  // First piece whose right end is >= d is the only candidate.
  const auto it = std::lower_bound(
      pieces_.begin(), pieces_.end(), d,
      [](const Interval& p, double v) { return p.hi < v; });
  return it != pieces_.end() && it->contains(d);
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  std::vector<Interval> all(pieces_);
  all.insert(all.end(), other.pieces_.begin(), other.pieces_.end());
  return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  std::vector<Interval> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < pieces_.size() && j < other.pieces_.size()) {
    const auto& a = pieces_[i];
    const auto& b = other.pieces_[j];
    const double lo = std::max(a.lo, b.lo);
    const double hi = std::min(a.hi, b.hi);
    if (lo < hi) out.push_back({lo, hi});
    if (a.hi < b.hi) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::complement(double lo, double hi) const {
  std::vector<Interval> out;
  double cursor = lo;
  for (const auto& p : pieces_) {
    if (p.hi <= cursor) continue;
    if (p.lo >= hi) break;
    if (p.lo > cursor) out.push_back({cursor, p.lo});
    cursor = std::max(cursor, p.hi);
  }
  if (cursor < hi) out.push_back({cursor, hi});
  return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::subtract(const IntervalSet& other) const {
  if (pieces_.empty()) return {};
  const double lo = pieces_.front().lo;
  const double hi = pieces_.back().hi;
  return intersect(other.complement(lo, hi));
}

IntervalSet IntervalSet::symmetric_difference(const IntervalSet& other) const {
  return subtract(other).unite(other.subtract(*this));
}

double IntervalSet::measure(const RadialDistribution& dist) const {
  double total = 0.0;
  for (const auto& p : pieces_) total += dist.interval_measure(p.lo, p.hi);
  return total;
}

double IntervalSet::lebesgue_length() const {
  double total = 0.0;
  for (const auto& p : pieces_) total += p.length();
  return total;
}

std::vector<double> IntervalSet::endpoints() const {
  std::vector<double> out;
  out.reserve(2 * pieces_.size());
  for (const auto& p : pieces_) {
    out.push_back(p.lo);
    out.push_back(p.hi);
  }
  // Canonical pieces are non-adjacent, so the sequence is already strictly increasing.
  return out;
}

}  // namespace cutoff
