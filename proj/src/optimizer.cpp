#include "mosoo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "mosoo/errors.hpp"

namespace mosoo {

namespace {

// Safety valve for the power policy: sweeps that expand nothing only bump t,
// and the cap eventually unlocks the next depth. Give up if it takes absurdly
// long (degenerate p close to 0).
constexpr std::size_t kIdleSweepLimit = 1000000;

int depth_limit(const HMaxPolicy& hmax, std::size_t t, int tree_depth) {
  return std::min(hmax(t), tree_depth);
}

}  // namespace

int HMaxPolicy::operator()(std::size_t t) const {
  switch (kind) {
    case Kind::power:
      // tiny nudge so exact powers do not floor one short under fp error
      return int(std::floor(std::pow(double(t), p) + 1e-12));
    case Kind::constant:
      return h;
    case Kind::unbounded:
      return std::numeric_limits<int>::max();
  }
  return 0;
}

HMaxPolicy HMaxPolicy::power(double p) {
  if (!(p > 0.0) || !(p < 1.0)) throw usage_error("HMaxPolicy: need p in (0,1)");
  HMaxPolicy out;
  out.kind = Kind::power;
  out.p = p;
  return out;
}

HMaxPolicy HMaxPolicy::constant(int h) {
  if (h < 0) throw usage_error("HMaxPolicy: need h >= 0");
  HMaxPolicy out;
  out.kind = Kind::constant;
  out.h = h;
  return out;
}

HMaxPolicy HMaxPolicy::unbounded() {
  HMaxPolicy out;
  out.kind = Kind::unbounded;
  return out;
}

std::vector<std::size_t> sweep_length_per_iteration(const RunTrace& trace) {
  std::unordered_map<std::size_t, std::size_t> counts;
  for (const auto& rec : trace.iterations) ++counts[rec.sweep];
  std::vector<std::size_t> out;
  out.reserve(trace.iterations.size());
  for (const auto& rec : trace.iterations) out.push_back(counts[rec.sweep]);
  return out;
}

MosooResult mosoo_run(const Problem& problem, int k, std::size_t budget,
                      const HMaxPolicy& hmax, SplitPolicy split, std::uint64_t seed) {
  if (budget == 0) throw usage_error("mosoo_run: need budget >= 1");

  BudgetedEvaluator eval(problem, budget);
  auto tree = std::make_shared<Tree>(problem.box(), k, split, seed);
  tree->evaluate_root(eval);

  ParetoArchive archive;
  archive.insert(tree->node(Tree::root_id()).value);

  RunTrace trace;
  trace.k = k;
  trace.budget = budget;

  const std::size_t cost = tree->fresh_evals_per_expansion();
  std::size_t t = 1;
  std::size_t sweep = 0;
  std::size_t idle_sweeps = 0;
  bool stopped = false;

  while (!stopped && eval.remaining() >= cost) {
    ++sweep;
    // the non-dominated layer carried across depths of this sweep
    std::vector<NodeId> layer;
    std::size_t sweep_expansions = 0;

    for (int h = 0; h <= depth_limit(hmax, t, tree->max_depth()); ++h) {
      const std::vector<NodeId> p = tree->leaves_at(h);

      // layer <- nd(p, then layer); ties resolve toward p so a leaf carrying
      // its parent's point displaces the expanded parent
      std::vector<NodeId> combined = p;
      combined.insert(combined.end(), layer.begin(), layer.end());
      std::vector<const ObjectiveVector*> values;
      values.reserve(combined.size());
      for (NodeId id : combined) values.push_back(&tree->node(id).value);
      std::vector<std::size_t> keep = detail::nd_surviving_indices(values);
      std::vector<NodeId> next_layer;
      next_layer.reserve(keep.size());
      for (std::size_t idx : keep) next_layer.push_back(combined[idx]);
      layer = std::move(next_layer);

      std::unordered_set<NodeId> in_layer(layer.begin(), layer.end());
      IterationRecord rec;
      rec.t = t;
      rec.sweep = sweep;
      rec.depth = h;
      rec.p_size = p.size();

      for (NodeId id : p) {
        if (!in_layer.count(id)) continue;
        // a cell at floating-point resolution stays a leaf; its value still
        // gates deeper depths through the carried layer
        if (!tree->splittable(id)) continue;
        if (eval.remaining() < cost) {
          stopped = true;
          break;
        }
        auto children = tree->expand(id, eval);
        for (NodeId c : *children) archive.insert(tree->node(c).value);
        rec.expanded.push_back(id);
      }

      sweep_expansions += rec.expanded.size();
      rec.evals_after = eval.used();
      trace.iterations.push_back(std::move(rec));
      ++t;
      if (stopped) break;
    }

    if (!stopped && sweep_expansions == 0) {
      // every leaf sits deeper than the cap; only a growing cap can recover
      if (hmax.kind != HMaxPolicy::Kind::power) break;
      // with the whole tree already visible an idle sweep repeats verbatim
      if (hmax(t) >= tree->max_depth()) break;
      if (++idle_sweeps >= kIdleSweepLimit) break;
    } else {
      idle_sweeps = 0;
    }
  }

  trace.evals = eval.take_log();
  MosooResult result;
  result.set = archive.take_members();
  result.trace = std::move(trace);
  result.tree = std::move(tree);
  return result;
}

SooResult soo_run(const Problem& problem, int k, std::size_t budget, const HMaxPolicy& hmax,
                  SplitPolicy split, std::uint64_t seed) {
  if (budget == 0) throw usage_error("soo_run: need budget >= 1");
  if (problem.m() != 1) throw usage_error("soo_run: problem must have exactly one objective");

  BudgetedEvaluator eval(problem, budget);
  auto tree = std::make_shared<Tree>(problem.box(), k, split, seed);
  tree->evaluate_root(eval);

  RunTrace trace;
  trace.k = k;
  trace.budget = budget;

  const std::size_t cost = tree->fresh_evals_per_expansion();
  std::size_t t = 1;
  std::size_t sweep = 0;
  bool stopped = false;

  while (!stopped && eval.remaining() >= cost) {
    ++sweep;
    double threshold = std::numeric_limits<double>::infinity();
    std::size_t sweep_expansions = 0;

    for (int h = 0; h <= depth_limit(hmax, t, tree->max_depth()); ++h) {
      const std::vector<NodeId> p = tree->leaves_at(h);
      IterationRecord rec;
      rec.sweep = sweep;
      rec.depth = h;
      rec.p_size = p.size();

      if (!p.empty()) {
        // leaf lists are ascending by id, so the scan breaks value ties toward
        // the node created first
        NodeId best = p[0];
        for (NodeId id : p)
          if (tree->node(id).value[0] < tree->node(best).value[0]) best = id;
        double value = tree->node(best).value[0];
        if (value <= threshold) {
          if (!tree->splittable(best)) {
            // cannot refine further, but the value still gates deeper depths
            threshold = value;
          } else if (eval.remaining() < cost) {
            stopped = true;
          } else {
            ++t;
            threshold = value;
            tree->expand(best, eval);
            rec.expanded.push_back(best);
            ++sweep_expansions;
          }
        }
      }

      rec.t = t;
      rec.evals_after = eval.used();
      trace.iterations.push_back(std::move(rec));
      if (stopped) break;
    }

    // t only advances on expansion, so a sweep that expands nothing would
    // repeat verbatim no matter the cap
    if (!stopped && sweep_expansions == 0) break;
  }

  trace.evals = eval.take_log();
  SooResult result;
  for (const auto& rec : trace.evals) {
    if (rec.y[0] < result.best_value) {
      result.best_value = rec.y[0];
      result.best_point = rec.x;
    }
  }
  result.trace = std::move(trace);
  result.tree = std::move(tree);
  return result;
}

ObjectiveVector loss_vector(const ApproximationSet& set, const ObjectiveVector& ideal) {
  ObjectiveVector best = empirical_ideal(set);
  if (best.size() != ideal.size()) throw usage_error("loss_vector: dimension mismatch");
  for (std::size_t j = 0; j < best.size(); ++j) best[j] -= ideal[j];
  return best;
}

int deepest_optimal_depth(const Tree& tree, const RunTrace& trace, const std::vector<double>& x,
                          std::size_t upto_iterations) {
  if (!tree.node(Tree::root_id()).cell.contains(x))
    throw usage_error("deepest_optimal_depth: point outside the root box");
  int best = -1;
  std::size_t limit = std::min(upto_iterations, trace.iterations.size());
  for (std::size_t i = 0; i < limit; ++i)
    for (NodeId id : trace.iterations[i].expanded)
      if (tree.node(id).cell.contains(x)) best = std::max(best, tree.node(id).depth);
  return best;
}

int deepest_optimal_depth(const Tree& tree, const std::vector<double>& x) {
  if (!tree.node(Tree::root_id()).cell.contains(x))
    throw usage_error("deepest_optimal_depth: point outside the root box");
  int best = -1;
  for (NodeId id = 0; id < tree.node_count(); ++id) {
    const Node& nd = tree.node(id);
    if (nd.expanded && nd.cell.contains(x)) best = std::max(best, nd.depth);
  }
  return best;
}

}  // namespace mosoo
