#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mosoo/pareto.hpp"

namespace mosoo {

class BudgetedEvaluator;

// Axis-aligned box, closed on both sides.
struct Box {
  std::vector<double> lower;
  std::vector<double> upper;

  int dim() const { return int(lower.size()); }
  bool contains(const std::vector<double>& x) const;
  std::vector<double> center() const;
  // throws usage_error unless lower < upper coordinate-wise and dims match
  void validate() const;
};

enum class SplitPolicy { sequential, random_dim };

// Which coordinate a depth-h node splits along. The sequential policy cycles
// through coordinates; the random policy draws from the supplied generator.
int split_dimension(int depth, int n, SplitPolicy policy, std::mt19937_64& rng);

// K equal-width sub-boxes along one coordinate. Adjacent children share their
// boundary value exactly, so the children tile the parent. Throws numeric_error
// once the cell is so narrow that some child would get zero width.
std::vector<Box> split_cell(const Box& cell, int dim, int k);

// Whether split_cell(cell, dim, k) would yield k children of positive width.
// Fails once the boundaries collide in floating point, which happens when the
// width shrinks to a few ulp of the coordinate values.
bool splittable_along(const Box& cell, int dim, int k);

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xffffffffu;

struct Node {
  int depth = 0;
  NodeId parent = kNoNode;
  int slot = 0;  // position among siblings along the split, 0 for the root
  Box cell;
  std::vector<double> rep;  // representative point, the cell center
  ObjectiveVector value;    // objective vector at rep, set on evaluation
  bool expanded = false;
};

// K-ary partition tree over a box. Nodes live in an arena indexed by NodeId in
// creation order; per-depth leaf lists stay sorted by id. Single-writer.
class Tree {
 public:
  Tree(Box root_box, int k, SplitPolicy policy, std::uint64_t seed);

  // Evaluates the root representative (one evaluation). Call exactly once
  // before any expansion.
  void evaluate_root(BudgetedEvaluator& eval);

  // Splits a leaf into K children and evaluates the fresh representatives in
  // cell order. With odd K the middle child inherits the parent's point and
  // value, costing K-1 evaluations; even K costs K. Returns the child ids, or
  // nullopt when the remaining budget cannot cover the cost (the node stays a
  // leaf and nothing is evaluated). Expanding a non-leaf or an unevaluated
  // node throws usage_error.
  std::optional<std::vector<NodeId>> expand(NodeId id, BudgetedEvaluator& eval);

  // Whether expand() could subdivide this node: the sequential policy needs
  // positive child widths along its fixed coordinate, the random policy along
  // at least one. A node at floating-point resolution stays a leaf forever.
  bool splittable(NodeId id) const;

  const Node& node(NodeId id) const { return nodes_.at(id); }
  static NodeId root_id() { return 0; }
  // Deepest level that currently has nodes.
  int max_depth() const { return int(leaves_.size()) - 1; }
  // Leaf ids at one depth, ascending by id. Depths beyond the tree are empty.
  const std::vector<NodeId>& leaves_at(int depth) const;

  int k() const { return k_; }
  std::size_t fresh_evals_per_expansion() const { return k_ % 2 == 1 ? k_ - 1 : k_; }
  std::size_t expansions() const { return expansions_; }
  std::size_t node_count() const { return nodes_.size(); }

 private:
  int k_;
  SplitPolicy policy_;
  std::mt19937_64 rng_;
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> leaves_;  // per depth
  std::size_t expansions_ = 0;
  bool root_evaluated_ = false;
};

}  // namespace mosoo
