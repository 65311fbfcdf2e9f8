#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "mosoo/pareto.hpp"
#include "mosoo/problems.hpp"

namespace mosoo {

// Reference set for unary indicator values, with its provenance recorded so
// result files can say where the target came from.
struct ReferenceFront {
  ApproximationSet members;
  enum class Provenance { analytic, sampled } provenance = Provenance::analytic;
  std::size_t sample_count = 0;  // sampled only
  std::uint64_t seed = 0;        // sampled only
};

// Smallest shift e such that every b in B is weakly dominated by some a in A
// moved down by e: max over b of min over a of max_j (a_j - b_j). Exact pair
// scan, no spatial pruning.
double additive_epsilon(const ApproximationSet& a, const ApproximationSet& b);

// additive_epsilon against front.members.
double unary_epsilon(const ApproximationSet& a, const ReferenceFront& front);

// Area dominated by the members that strictly dominate ref, inside the box
// capped at ref. Two objectives only. discarded, when given, receives the
// number of members that did not strictly dominate ref.
double hypervolume_2d(const ApproximationSet& a, const ObjectiveVector& ref,
                      std::size_t* discarded = nullptr);

// Non-dominated filter over `count` uniform box samples. Sampling has its own
// generator and never touches optimizer budgets.
ReferenceFront sample_reference_front(const Problem& problem, std::size_t count,
                                      std::uint64_t seed);

ReferenceFront analytic_front(ApproximationSet members);

// Extreme vectors of a problem front: images of the per-objective minimizers
// when the metadata has them.
ApproximationSet front_extrema(const Problem& problem);
// Fallback for fronts without metadata: per-coordinate argmin members.
ApproximationSet front_extrema(const ReferenceFront& front);

// How far the extrema alone sit from covering the whole front; zero exactly
// when the front collapses to at most m points. Clamped at zero because a
// sampled front can sit a hair above the true one.
double conflict_dimension(const ApproximationSet& extrema, const ReferenceFront& front);

// Per-member running minima of the shift needed to cover each front member,
// updated point by point. value() equals additive_epsilon(all points added so
// far, front) while costing O(|front|) per added point.
class EpsilonCurve {
 public:
  explicit EpsilonCurve(const ReferenceFront& front);
  void add_point(const ObjectiveVector& y);
  double value() const;  // throws usage_error before the first add_point

 private:
  std::size_t m_ = 0;
  std::vector<double> front_flat_;  // row-major front members
  std::vector<double> mins_;        // per front member
  bool any_ = false;
};

}  // namespace mosoo
