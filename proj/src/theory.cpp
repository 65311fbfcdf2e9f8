#include "mosoo/theory.hpp"

#include <cmath>
#include <limits>

#include "mosoo/errors.hpp"

namespace mosoo {

DeltaSequence DeltaSequence::geometric(double c, double gamma) {
  if (!(c > 0.0)) throw usage_error("DeltaSequence: need c > 0");
  if (!(gamma > 0.0) || !(gamma < 1.0)) throw usage_error("DeltaSequence: need gamma in (0,1)");
  DeltaSequence s;
  s.kind_ = Kind::geometric;
  s.c_ = c;
  s.gamma_ = gamma;
  return s;
}

DeltaSequence DeltaSequence::holder_step(double alpha, int k, int n, int exponent_factor) {
  if (!(alpha >= 1.0)) throw usage_error("DeltaSequence: need alpha >= 1");
  if (k < 2) throw usage_error("DeltaSequence: need k >= 2");
  if (n < 1) throw usage_error("DeltaSequence: need n >= 1");
  if (exponent_factor < 1) throw usage_error("DeltaSequence: need exponent_factor >= 1");
  DeltaSequence s;
  s.kind_ = Kind::holder;
  s.alpha_ = alpha;
  s.k_ = k;
  s.n_ = n;
  s.factor_ = exponent_factor;
  return s;
}

double DeltaSequence::operator()(int h) const {
  if (h < 0) throw usage_error("DeltaSequence: need h >= 0");
  if (kind_ == Kind::geometric) return c_ * std::pow(gamma_, double(h));
  double rounds = double(h / n_);
  return std::pow(2.0, -alpha_) * std::pow(double(k_), -double(factor_) * alpha_ * rounds);
}

double delta_from_holder(double alpha, int k, int n, int h) {
  return DeltaSequence::holder_step(alpha, k, n, 3)(h);
}

double near_optimality_dimension(double alpha, double beta, int n) {
  if (n < 1) throw usage_error("near_optimality_dimension: need n >= 1");
  if (!(beta >= 1.0)) throw usage_error("near_optimality_dimension: need beta >= 1");
  if (beta > alpha)
    throw usage_error("near_optimality_dimension: beta must not exceed alpha");
  return double(n) * (1.0 / beta - 1.0 / alpha);
}

std::size_t BoundModel::multiplier(std::size_t t) const {
  if (t == 0) throw usage_error("BoundModel: iterations are 1-based");
  if (!recorded_multipliers.empty()) {
    // clamp to the last recorded sweep when asked past the end of the run
    std::size_t idx = std::min(t - 1, recorded_multipliers.size() - 1);
    return std::max<std::size_t>(1, recorded_multipliers[idx]);
  }
  if (nominal.kind == HMaxPolicy::Kind::unbounded)
    throw usage_error("BoundModel: unbounded nominal cap has no multiplier; record one");
  return std::max<std::size_t>(1, std::size_t(nominal(t)));
}

int h_of_t(std::size_t t, const BoundModel& model) {
  if (t == 0) throw usage_error("h_of_t: iterations are 1-based");
  if (model.objectives.empty()) throw usage_error("h_of_t: model has no objectives");
  const double mult = double(model.multiplier(t));
  const double target = double(t);
  double sum = 0.0, comp = 0.0;  // Kahan
  for (int h = 0;; ++h) {
    double term = 0.0;
    for (const auto& obj : model.objectives) {
      double d = obj.delta(h);
      term = std::max(term, obj.c * std::pow(d, -obj.d));
    }
    double adj = term - comp;
    double next = sum + adj;
    comp = (next - sum) - adj;
    sum = next;
    if (mult * sum >= target) return h;
    if (h > 100000000) throw numeric_error("h_of_t: sum failed to reach t");
  }
}

namespace {

int capped_depth(std::size_t t, const BoundModel& model, int hmax_value) {
  int ht = h_of_t(t, model);
  // saturating +1 so an unbounded cap stays out of the way
  int cap = hmax_value >= std::numeric_limits<int>::max() - 1
                ? std::numeric_limits<int>::max()
                : hmax_value + 1;
  return std::min(ht, cap);
}

}  // namespace

ObjectiveVector loss_bound(std::size_t t, const BoundModel& model, int hmax_value) {
  if (hmax_value < 0) throw usage_error("loss_bound: need hmax_value >= 0");
  int hhat = capped_depth(t, model, hmax_value);
  ObjectiveVector out;
  out.reserve(model.objectives.size());
  for (const auto& obj : model.objectives) out.push_back(obj.delta(hhat));
  return out;
}

double indicator_bound(std::size_t t, const BoundModel& model, int hmax_value) {
  if (hmax_value < 0) throw usage_error("indicator_bound: need hmax_value >= 0");
  int hhat = capped_depth(t, model, hmax_value);
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& k : model.objectives) {
    double coeff = 1.0 + 2.0 * k.c * std::pow(k.delta(hhat), -k.d);
    for (const auto& l : model.objectives) worst = std::max(worst, coeff * l.delta(hhat));
  }
  return model.psi + worst;
}

}  // namespace mosoo
