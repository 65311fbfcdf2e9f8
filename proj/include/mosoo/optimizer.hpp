#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <vector>

#include "mosoo/partition.hpp"
#include "mosoo/pareto.hpp"
#include "mosoo/problems.hpp"

namespace mosoo {

// Depth cap h_max(t) as a function of the iteration counter t (1-based).
struct HMaxPolicy {
  enum class Kind { power, constant, unbounded };
  Kind kind = Kind::power;
  double p = 0.5;  // power kind: floor(t^p), p in (0,1)
  int h = 0;       // constant kind

  int operator()(std::size_t t) const;

  static HMaxPolicy power(double p);
  static HMaxPolicy constant(int h);
  static HMaxPolicy unbounded();
};

// One depth step: the body of the per-depth loop. For the multi-objective run
// t advances with every record; for the single-objective run t advances only
// on expansion and the record stores the counter value after the step.
struct IterationRecord {
  std::size_t t = 0;
  std::size_t sweep = 0;  // 1-based sweep index
  int depth = 0;
  std::size_t p_size = 0;              // leaves present at this depth
  std::vector<NodeId> expanded;        // nodes expanded during this step, in order
  std::size_t evals_after = 0;         // cumulative evaluations once the step ended
};

struct RunTrace {
  std::vector<IterationRecord> iterations;
  std::vector<EvalRecord> evals;
  int k = 0;
  std::size_t budget = 0;
};

// For each record, the number of records sharing its sweep. Used as the
// depths-visited multiplier when evaluating finite-time bounds on a real run.
std::vector<std::size_t> sweep_length_per_iteration(const RunTrace& trace);

struct MosooResult {
  ApproximationSet set;  // non-dominated vectors over every evaluation
  RunTrace trace;
  std::shared_ptr<const Tree> tree;
};

struct SooResult {
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> best_point;
  RunTrace trace;
  std::shared_ptr<const Tree> tree;
};

// Multi-objective optimistic run: per sweep, walk depths 0..min(hmax(t),
// tree depth), keep the running non-dominated layer across depths, and expand
// every current-depth leaf that survives it. Stops when the remaining budget
// cannot fund one more expansion, or when the tree is saturated below a cap
// that can no longer grow.
MosooResult mosoo_run(const Problem& problem, int k, std::size_t budget,
                      const HMaxPolicy& hmax, SplitPolicy split, std::uint64_t seed);

// Single-objective ancestor: per sweep, expand at each depth the lowest-valued
// leaf if it beats every shallower expansion of the sweep. Requires m == 1.
SooResult soo_run(const Problem& problem, int k, std::size_t budget, const HMaxPolicy& hmax,
                  SplitPolicy split, std::uint64_t seed);

// Coordinate-wise loss of a set against a reference ideal point.
ObjectiveVector loss_vector(const ApproximationSet& set, const ObjectiveVector& ideal);

// Deepest expanded node whose cell contains x, or -1 when even the root is
// unexpanded. Considers only expansions recorded in the first upto_iterations
// records (pass the default to use the whole run).
int deepest_optimal_depth(const Tree& tree, const RunTrace& trace, const std::vector<double>& x,
                          std::size_t upto_iterations = std::numeric_limits<std::size_t>::max());
// Same, over every expanded node of the tree.
int deepest_optimal_depth(const Tree& tree, const std::vector<double>& x);

}  // namespace mosoo
