#pragma once

#include <cstddef>
#include <vector>

#include "mosoo/optimizer.hpp"
#include "mosoo/pareto.hpp"

namespace mosoo {

// Non-increasing decay sequence delta(h) -> 0 used by the finite-time bounds.
class DeltaSequence {
 public:
  // c * gamma^h with c > 0 and gamma in (0,1)
  static DeltaSequence geometric(double c, double gamma);
  // 2^-alpha * K^(-exponent_factor * alpha * floor(h/n)). Factor 1 is the
  // sup-norm cell diameter of the depth-h cells raised to alpha; factor 3 is
  // the steeper three-levels-per-round variant.
  static DeltaSequence holder_step(double alpha, int k, int n, int exponent_factor);

  double operator()(int h) const;

 private:
  enum class Kind { geometric, holder } kind_ = Kind::geometric;
  double c_ = 1.0;
  double gamma_ = 0.5;
  double alpha_ = 1.0;
  int k_ = 3;
  int n_ = 1;
  int factor_ = 1;
};

// The steeper sequence above with exponent factor 3, as a plain function.
double delta_from_holder(double alpha, int k, int n, int h);

// n * (1/beta - 1/alpha) for 1 <= beta <= alpha; beta > alpha is rejected.
double near_optimality_dimension(double alpha, double beta, int n);

// Everything the finite-time bounds need about one run setup. The multiplier
// for iteration t is the recorded depths-visited count when supplied, else the
// nominal cap value (power or constant policies only).
struct BoundModel {
  struct PerObjective {
    DeltaSequence delta;
    double c = 2.0;  // packing constant
    double d = 0.0;  // near-optimality dimension
  };
  std::vector<PerObjective> objectives;
  double psi = 0.0;  // conflict gap between the extrema and the full front
  std::vector<std::size_t> recorded_multipliers;  // per iteration, 1-based t
  HMaxPolicy nominal = HMaxPolicy::power(0.5);

  std::size_t multiplier(std::size_t t) const;
};

// Smallest h >= 0 with multiplier(t) * sum_{l=0..h} max_j c_j*delta_j(l)^(-d_j)
// >= t. Compensated summation keeps long sums honest.
int h_of_t(std::size_t t, const BoundModel& model);

// Loss envelope per objective at iteration t: delta_j(min(h(t), hmax+1)).
ObjectiveVector loss_bound(std::size_t t, const BoundModel& model, int hmax_value);

// Indicator envelope at iteration t:
// psi + max_{k,l} (1 + 2*c_k*delta_k(hhat)^(-d_k)) * delta_l(hhat).
double indicator_bound(std::size_t t, const BoundModel& model, int hmax_value);

}  // namespace mosoo
