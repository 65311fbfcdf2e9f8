#include "mosoo/indicators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "mosoo/errors.hpp"

namespace mosoo {

namespace {

void check_set(const ApproximationSet& s, const char* what) {
  if (s.empty()) throw usage_error(std::string(what) + ": empty set");
}

}  // namespace

double additive_epsilon(const ApproximationSet& a, const ApproximationSet& b) {
  check_set(a, "additive_epsilon");
  check_set(b, "additive_epsilon");
  const std::size_t m = a[0].size();
  if (b[0].size() != m) throw usage_error("additive_epsilon: dimension mismatch");
  double eps = -std::numeric_limits<double>::infinity();
  for (const auto& vb : b) {
    double inner = std::numeric_limits<double>::infinity();
    for (const auto& va : a) {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m; ++j) worst = std::max(worst, va[j] - vb[j]);
      inner = std::min(inner, worst);
    }
    eps = std::max(eps, inner);
  }
  return eps;
}

double unary_epsilon(const ApproximationSet& a, const ReferenceFront& front) {
  return additive_epsilon(a, front.members);
}

double hypervolume_2d(const ApproximationSet& a, const ObjectiveVector& ref,
                      std::size_t* discarded) {
  if (ref.size() != 2) throw usage_error("hypervolume_2d: reference point must be 2-d");
  check_set(a, "hypervolume_2d");
  if (a[0].size() != 2) throw usage_error("hypervolume_2d: set must be 2-d");

  std::vector<ObjectiveVector> pts;
  for (const auto& v : a)
    if (v[0] < ref[0] && v[1] < ref[1]) pts.push_back(v);
  if (discarded) *discarded = a.size() - pts.size();
  if (pts.empty()) return 0.0;

  std::sort(pts.begin(), pts.end());
  double area = 0.0;
  double y2 = ref[1];
  for (const auto& p : pts) {
    if (p[1] < y2) {
      area += (ref[0] - p[0]) * (y2 - p[1]);
      y2 = p[1];
    }
  }
  return area;
}

ReferenceFront sample_reference_front(const Problem& problem, std::size_t count,
                                      std::uint64_t seed) {
  if (count == 0) throw usage_error("sample_reference_front: need count >= 1");
  std::mt19937_64 rng(seed);
  auto unit = [&]() { return double(rng() >> 11) * 0x1.0p-53; };
  const Box& box = problem.box();
  std::vector<ObjectiveVector> values;
  values.reserve(count);
  std::vector<double> x(box.dim());
  for (std::size_t i = 0; i < count; ++i) {
    for (int d = 0; d < box.dim(); ++d)
      x[d] = box.lower[d] + unit() * (box.upper[d] - box.lower[d]);
    values.push_back(problem.evaluate(x));
  }
  ReferenceFront front;
  front.members = nd_filter(values);
  front.provenance = ReferenceFront::Provenance::sampled;
  front.sample_count = count;
  front.seed = seed;
  return front;
}

ReferenceFront analytic_front(ApproximationSet members) {
  check_set(members, "analytic_front");
  ReferenceFront front;
  front.members = std::move(members);
  front.provenance = ReferenceFront::Provenance::analytic;
  return front;
}

ApproximationSet front_extrema(const Problem& problem) {
  const auto& optima = problem.metadata().optima;
  if (int(optima.size()) != problem.m())
    throw usage_error(problem.name() + ": metadata lacks per-objective minimizers");
  std::vector<ObjectiveVector> images;
  for (const auto& x : optima) images.push_back(problem.evaluate(x));
  return nd_filter(images);
}

ApproximationSet front_extrema(const ReferenceFront& front) {
  check_set(front.members, "front_extrema");
  return nd_filter(nd_min(front.members));
}

double conflict_dimension(const ApproximationSet& extrema, const ReferenceFront& front) {
  return std::max(0.0, additive_epsilon(extrema, front.members));
}

EpsilonCurve::EpsilonCurve(const ReferenceFront& front) {
  check_set(front.members, "EpsilonCurve");
  m_ = front.members[0].size();
  front_flat_.reserve(front.members.size() * m_);
  for (const auto& b : front.members)
    front_flat_.insert(front_flat_.end(), b.begin(), b.end());
  mins_.assign(front.members.size(), std::numeric_limits<double>::infinity());
}

void EpsilonCurve::add_point(const ObjectiveVector& y) {
  if (y.size() != m_) throw usage_error("EpsilonCurve: dimension mismatch");
  const std::size_t nb = mins_.size();
  if (m_ == 2) {
    const double y0 = y[0], y1 = y[1];
    for (std::size_t i = 0; i < nb; ++i) {
      double shift = std::max(y0 - front_flat_[2 * i], y1 - front_flat_[2 * i + 1]);
      mins_[i] = std::min(mins_[i], shift);
    }
  } else {
    for (std::size_t i = 0; i < nb; ++i) {
      double worst = -std::numeric_limits<double>::infinity();
      for (std::size_t j = 0; j < m_; ++j)
        worst = std::max(worst, y[j] - front_flat_[i * m_ + j]);
      mins_[i] = std::min(mins_[i], worst);
    }
  }
  any_ = true;
}

double EpsilonCurve::value() const {
  if (!any_) throw usage_error("EpsilonCurve: no points added yet");
  return *std::max_element(mins_.begin(), mins_.end());
}

}  // namespace mosoo
