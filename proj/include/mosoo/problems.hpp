#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mosoo/partition.hpp"
#include "mosoo/pareto.hpp"

namespace mosoo {

// Analytic ground truth carried by benchmark problems, where known.
struct ProblemMetadata {
  // per-objective minimizers x*_j, one per objective when present
  std::vector<std::vector<double>> optima;
  std::optional<ObjectiveVector> ideal;  // y* = (min f_1, ..., min f_m)
  std::string front_note;                // free-text description of the Pareto front
};

// Box-constrained vector-valued minimization problem. Evaluation is const and
// thread-safe as long as the wrapped callable is.
class Problem {
 public:
  Problem(std::string name, Box box, int m,
          std::function<ObjectiveVector(const std::vector<double>&)> fn,
          ProblemMetadata meta = {});

  // Checks the point is inside the box and the result is finite with the
  // declared number of objectives; throws usage_error / numeric_error.
  ObjectiveVector evaluate(const std::vector<double>& x) const;

  const std::string& name() const { return name_; }
  const Box& box() const { return box_; }
  int n() const { return box_.dim(); }
  int m() const { return m_; }
  const ProblemMetadata& metadata() const { return meta_; }

 private:
  std::string name_;
  Box box_;
  int m_;
  std::function<ObjectiveVector(const std::vector<double>&)> fn_;
  ProblemMetadata meta_;
};

// Two shifted paraboloids on [-1,1]^2 with ideal (0,0); the standard demo
// instance used throughout the tests and docs.
Problem worked_example();

// f_j(x) = max_d |x_d - a_j_d| ^ alpha_j on [0,1]^n, alpha_j >= 1.
Problem holder_family(int n, double alpha1, double alpha2, const std::vector<double>& a1,
                      const std::vector<double>& a2);
// broadcast scalars to every coordinate
Problem holder_family(int n, double alpha1, double alpha2, double a1, double a2);

// "schaffer": f = (x^2, (x-2)^2) on [-5,5]. "fonseca2": the two-variable
// Fonseca-Fleming instance on [-4,4]^2. "quadratic1d": scalar (x-0.25)^2 on
// [0,1], the single-objective demo.
Problem classic_problem(const std::string& name);

struct HolderParams {
  int n = 1;
  double alpha1 = 2.0;
  double alpha2 = 2.0;
  double a1 = 0.25;
  double a2 = 0.75;
};

// Stable listing for the CLI registry.
std::vector<std::string> registry_ids();
// Instantiates a registry problem; hp applies to "holder" only.
Problem make_registry_problem(const std::string& id, const HolderParams& hp = {});

struct EvalRecord {
  std::vector<double> x;
  ObjectiveVector y;
  std::size_t index;  // 0-based position in the evaluation sequence
};

// Counts evaluations against a hard cap and keeps the full log. Call cap+1
// throws budget_exhausted without evaluating.
class BudgetedEvaluator {
 public:
  BudgetedEvaluator(const Problem& problem, std::size_t cap);

  ObjectiveVector operator()(const std::vector<double>& x);

  std::size_t used() const { return log_.size(); }
  std::size_t cap() const { return cap_; }
  std::size_t remaining() const { return cap_ - log_.size(); }
  const std::vector<EvalRecord>& log() const { return log_; }
  std::vector<EvalRecord> take_log() { return std::move(log_); }

 private:
  const Problem& problem_;
  std::size_t cap_;
  std::vector<EvalRecord> log_;
};

}  // namespace mosoo
