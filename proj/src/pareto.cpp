#include "mosoo/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mosoo/errors.hpp"

namespace mosoo {

namespace {

void check_dims(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw usage_error("objective vectors have mismatched dimensions");
  if (a.empty()) throw usage_error("objective vectors must be non-empty");
}

void check_finite(const ObjectiveVector& v) {
  for (double x : v)
    if (!std::isfinite(x)) throw numeric_error("non-finite objective value in set operation");
}

}  // namespace

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_dims(a, b);
  bool strict = false;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] > b[j]) return false;
    if (a[j] < b[j]) strict = true;
  }
  return strict;
}

bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_dims(a, b);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] >= b[j]) return false;
  return true;
}

bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  check_dims(a, b);
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] > b[j]) return false;
  return true;
}

namespace detail {

namespace {

// Sort-and-sweep for two objectives. A point survives iff no earlier point in
// (y1, y2, index) order has y2 <= its own: that earlier point would weakly
// dominate it (equal vectors resolve to the lowest index, i.e. first occurrence).
std::vector<std::size_t> nd_indices_2d(const std::vector<const ObjectiveVector*>& vs) {
  std::vector<std::size_t> order(vs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const ObjectiveVector& va = *vs[a];
    const ObjectiveVector& vb = *vs[b];
    if (va[0] != vb[0]) return va[0] < vb[0];
    if (va[1] != vb[1]) return va[1] < vb[1];
    return a < b;
  });
  std::vector<std::size_t> out;
  double best_y2 = std::numeric_limits<double>::infinity();
  for (std::size_t idx : order) {
    double y2 = (*vs[idx])[1];
    if (y2 < best_y2) {
      out.push_back(idx);
      best_y2 = y2;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> nd_indices_generic(const std::vector<const ObjectiveVector*>& vs) {
  // Incremental scan; survivors stay in first-occurrence order throughout.
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const ObjectiveVector& v = *vs[i];
    bool rejected = false;
    for (std::size_t s : live) {
      if (weakly_dominates(*vs[s], v)) {
        rejected = true;
        break;
      }
    }
    if (rejected) continue;
    std::erase_if(live, [&](std::size_t s) { return dominates(v, *vs[s]); });
    live.push_back(i);
  }
  std::sort(live.begin(), live.end());
  return live;
}

}  // namespace

std::vector<std::size_t> nd_surviving_indices(const std::vector<const ObjectiveVector*>& vs) {
  if (vs.empty()) return {};
  const std::size_t m = vs[0]->size();
  if (m == 0) throw usage_error("objective vectors must be non-empty");
  for (const ObjectiveVector* v : vs) {
    if (v->size() != m) throw usage_error("objective vectors have mismatched dimensions");
    check_finite(*v);
  }
  if (m == 2 && vs.size() > 32) return nd_indices_2d(vs);
  return nd_indices_generic(vs);
}

}  // namespace detail

ApproximationSet nd_filter(const std::vector<ObjectiveVector>& vs) {
  std::vector<const ObjectiveVector*> ptrs;
  ptrs.reserve(vs.size());
  for (const auto& v : vs) ptrs.push_back(&v);
  ApproximationSet out;
  for (std::size_t i : detail::nd_surviving_indices(ptrs)) out.push_back(vs[i]);
  return out;
}

std::vector<ObjectiveVector> nd_min(const std::vector<ObjectiveVector>& vs) {
  if (vs.empty()) return {};
  ObjectiveVector mins = empirical_ideal(vs);
  std::vector<ObjectiveVector> out;
  for (const auto& v : vs) {
    bool attains = false;
    for (std::size_t j = 0; j < mins.size(); ++j)
      if (v[j] == mins[j]) {
        attains = true;
        break;
      }
    if (!attains) continue;
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

ObjectiveVector empirical_ideal(const std::vector<ObjectiveVector>& vs) {
  if (vs.empty()) throw usage_error("empirical_ideal over an empty set");
  ObjectiveVector out = vs[0];
  check_finite(out);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    check_dims(vs[i], out);
    check_finite(vs[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::min(out[j], vs[i][j]);
  }
  return out;
}

ObjectiveVector nadir(const std::vector<ObjectiveVector>& vs) {
  if (vs.empty()) throw usage_error("nadir over an empty set");
  ObjectiveVector out = vs[0];
  check_finite(out);
  for (std::size_t i = 1; i < vs.size(); ++i) {
    check_dims(vs[i], out);
    check_finite(vs[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], vs[i][j]);
  }
  return out;
}

bool ParetoArchive::insert(const ObjectiveVector& v) {
  check_finite(v);
  if (!members_.empty()) check_dims(v, members_[0]);
  for (const auto& mem : members_)
    if (weakly_dominates(mem, v)) return false;
  std::erase_if(members_, [&](const ObjectiveVector& mem) { return dominates(v, mem); });
  members_.push_back(v);
  return true;
}

}  // namespace mosoo
