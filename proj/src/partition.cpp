#include "mosoo/partition.hpp"

#include <algorithm>
#include <cmath>

#include "mosoo/errors.hpp"
#include "mosoo/problems.hpp"

namespace mosoo {

bool Box::contains(const std::vector<double>& x) const {
  if (int(x.size()) != dim()) throw usage_error("point dimension does not match box");
  for (int d = 0; d < dim(); ++d)
    if (x[d] < lower[d] || x[d] > upper[d]) return false;
  return true;
}

std::vector<double> Box::center() const {
  std::vector<double> c(lower.size());
  for (std::size_t d = 0; d < lower.size(); ++d) c[d] = 0.5 * (lower[d] + upper[d]);
  return c;
}

void Box::validate() const {
  if (lower.size() != upper.size() || lower.empty())
    throw usage_error("box bounds must be non-empty and of equal dimension");
  for (std::size_t d = 0; d < lower.size(); ++d) {
    if (!std::isfinite(lower[d]) || !std::isfinite(upper[d]))
      throw numeric_error("box bounds must be finite");
    if (!(lower[d] < upper[d])) throw usage_error("box must have positive width in every coordinate");
  }
}

int split_dimension(int depth, int n, SplitPolicy policy, std::mt19937_64& rng) {
  if (n < 1 || depth < 0) throw usage_error("split_dimension: need n >= 1 and depth >= 0");
  if (policy == SplitPolicy::sequential) return depth % n;
  return int(rng() % std::uint64_t(n));
}

std::vector<Box> split_cell(const Box& cell, int dim, int k) {
  if (k < 2) throw usage_error("split_cell: need k >= 2");
  if (dim < 0 || dim >= cell.dim()) throw usage_error("split_cell: dimension out of range");
  double lo = cell.lower[dim], hi = cell.upper[dim];
  if (!(lo < hi)) throw usage_error("split_cell: cell has zero width along the split coordinate");
  if (!splittable_along(cell, dim, k))
    throw numeric_error("split_cell: cell is at floating-point resolution along the split coordinate");
  double w = hi - lo;
  std::vector<Box> out(k, cell);
  for (int i = 0; i < k; ++i) {
    out[i].lower[dim] = (i == 0) ? lo : lo + w * double(i) / double(k);
    out[i].upper[dim] = (i == k - 1) ? hi : lo + w * double(i + 1) / double(k);
  }
  return out;
}

bool splittable_along(const Box& cell, int dim, int k) {
  if (k < 2) throw usage_error("splittable_along: need k >= 2");
  if (dim < 0 || dim >= cell.dim()) throw usage_error("splittable_along: dimension out of range");
  double lo = cell.lower[dim], hi = cell.upper[dim];
  if (!(lo < hi)) return false;
  double w = hi - lo;
  double prev = lo;
  for (int i = 1; i < k; ++i) {
    double b = lo + w * double(i) / double(k);
    if (!(b > prev)) return false;
    prev = b;
  }
  return hi > prev;
}

Tree::Tree(Box root_box, int k, SplitPolicy policy, std::uint64_t seed)
    : k_(k), policy_(policy), rng_(seed) {
  root_box.validate();
  if (k < 2) throw usage_error("Tree: need k >= 2");
  Node root;
  root.depth = 0;
  root.parent = kNoNode;
  root.slot = 0;
  root.rep = root_box.center();
  root.cell = std::move(root_box);
  nodes_.push_back(std::move(root));
  leaves_.push_back({0});
}

void Tree::evaluate_root(BudgetedEvaluator& eval) {
  if (root_evaluated_) throw usage_error("Tree: root already evaluated");
  nodes_[0].value = eval(nodes_[0].rep);
  root_evaluated_ = true;
}

const std::vector<NodeId>& Tree::leaves_at(int depth) const {
  static const std::vector<NodeId> empty;
  if (depth < 0 || depth >= int(leaves_.size())) return empty;
  return leaves_[depth];
}

bool Tree::splittable(NodeId id) const {
  const Node& nd = node(id);
  const int n = nd.cell.dim();
  if (policy_ == SplitPolicy::sequential) return splittable_along(nd.cell, nd.depth % n, k_);
  for (int d = 0; d < n; ++d)
    if (splittable_along(nd.cell, d, k_)) return true;
  return false;
}

std::optional<std::vector<NodeId>> Tree::expand(NodeId id, BudgetedEvaluator& eval) {
  if (id >= nodes_.size()) throw usage_error("Tree::expand: no such node");
  if (!root_evaluated_) throw usage_error("Tree::expand: root not evaluated yet");
  if (nodes_[id].expanded) throw usage_error("Tree::expand: node already expanded");
  if (eval.remaining() < fresh_evals_per_expansion()) return std::nullopt;

  const int depth = nodes_[id].depth;
  const int n = nodes_[id].cell.dim();
  int dim;
  if (policy_ == SplitPolicy::sequential) {
    dim = depth % n;
  } else {
    // draw among the coordinates that can still split; when all can, this
    // consumes the generator exactly like an unfiltered draw
    std::vector<int> dims;
    for (int d = 0; d < n; ++d)
      if (splittable_along(nodes_[id].cell, d, k_)) dims.push_back(d);
    if (dims.empty())
      throw numeric_error("Tree::expand: cell is at floating-point resolution");
    dim = dims[std::size_t(rng_() % dims.size())];
  }
  std::vector<Box> cells = split_cell(nodes_[id].cell, dim, k_);
  const int middle = (k_ % 2 == 1) ? k_ / 2 : -1;

  std::vector<NodeId> children;
  children.reserve(k_);
  for (int i = 0; i < k_; ++i) {
    Node child;
    child.depth = depth + 1;
    child.parent = id;
    child.slot = i;
    child.cell = std::move(cells[i]);
    if (i == middle) {
      // same point as the parent, no fresh evaluation
      child.rep = nodes_[id].rep;
      child.value = nodes_[id].value;
    } else {
      child.rep = child.cell.center();
      child.value = eval(child.rep);
    }
    children.push_back(NodeId(nodes_.size()));
    nodes_.push_back(std::move(child));
  }

  nodes_[id].expanded = true;
  auto& level = leaves_[depth];
  level.erase(std::find(level.begin(), level.end(), id));
  if (int(leaves_.size()) <= depth + 1) leaves_.resize(depth + 2);
  for (NodeId c : children) leaves_[depth + 1].push_back(c);
  ++expansions_;
  return children;
}

}  // namespace mosoo
