#pragma once

#include <cstddef>
#include <vector>

namespace mosoo {

// One objective vector, minimization in every coordinate. Entries must be finite.
using ObjectiveVector = std::vector<double>;

// Mutually non-dominated, duplicate-free vectors in first-occurrence order.
// nd_filter is the canonical way to build one.
using ApproximationSet = std::vector<ObjectiveVector>;

// a dominates b: a <= b in every coordinate, strictly < in at least one.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);
// a < b in every coordinate.
bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);
// a <= b in every coordinate (a == b qualifies).
bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Keeps the vectors not dominated by any other input, removes exact duplicates
// (first occurrence wins), preserves input order among survivors.
ApproximationSet nd_filter(const std::vector<ObjectiveVector>& vs);

// Union over coordinates j of every vector attaining the minimum in coordinate j,
// all ties included, deduplicated, in first-occurrence order.
std::vector<ObjectiveVector> nd_min(const std::vector<ObjectiveVector>& vs);

// Coordinate-wise minimum / maximum over a non-empty list.
ObjectiveVector empirical_ideal(const std::vector<ObjectiveVector>& vs);
ObjectiveVector nadir(const std::vector<ObjectiveVector>& vs);

// Incremental non-dominated archive. insert() keeps the member list equal to
// nd_filter over everything inserted so far, in the same order.
class ParetoArchive {
 public:
  // Returns true if v joined the archive (not weakly dominated by a member).
  bool insert(const ObjectiveVector& v);
  const ApproximationSet& members() const { return members_; }
  ApproximationSet take_members() { return std::move(members_); }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }

 private:
  ApproximationSet members_;
};

namespace detail {
// Indices of the non-dominated, first-occurrence survivors of vs, ascending.
// Shared by nd_filter and the optimizer's per-depth layer update.
std::vector<std::size_t> nd_surviving_indices(const std::vector<const ObjectiveVector*>& vs);
}  // namespace detail

}  // namespace mosoo
