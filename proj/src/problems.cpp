#include "mosoo/problems.hpp"

#include <cmath>
#include <sstream>

#include "mosoo/errors.hpp"

namespace mosoo {

namespace {

std::string point_to_string(const std::vector<double>& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

Problem::Problem(std::string name, Box box, int m,
                 std::function<ObjectiveVector(const std::vector<double>&)> fn,
                 ProblemMetadata meta)
    : name_(std::move(name)), box_(std::move(box)), m_(m), fn_(std::move(fn)),
      meta_(std::move(meta)) {
  box_.validate();
  if (m_ < 1) throw usage_error("Problem: need at least one objective");
  if (!fn_) throw usage_error("Problem: missing evaluator");
}

ObjectiveVector Problem::evaluate(const std::vector<double>& x) const {
  if (!box_.contains(x))
    throw usage_error(name_ + ": point " + point_to_string(x) + " outside the box");
  ObjectiveVector y = fn_(x);
  if (int(y.size()) != m_)
    throw numeric_error(name_ + ": evaluator returned wrong number of objectives");
  for (double v : y)
    if (!std::isfinite(v))
      throw numeric_error(name_ + ": non-finite objective at " + point_to_string(x));
  return y;
}

Problem worked_example() {
  ProblemMetadata meta;
  meta.optima = {{0.25, 0.66}, {-0.25, 0.66}};
  meta.ideal = ObjectiveVector{0.0, 0.0};
  meta.front_note = "pareto set is the segment between (0.25,0.66) and (-0.25,0.66)";
  return Problem(
      "worked_example", Box{{-1.0, -1.0}, {1.0, 1.0}}, 2,
      [](const std::vector<double>& x) -> ObjectiveVector {
        double f1 = (x[0] - 0.25) * (x[0] - 0.25) + (x[1] - 0.66) * (x[1] - 0.66);
        double f2 = (x[0] + 0.25) * (x[0] + 0.25) + (x[1] - 0.66) * (x[1] - 0.66);
        return {f1, f2};
      },
      std::move(meta));
}

Problem holder_family(int n, double alpha1, double alpha2, const std::vector<double>& a1,
                      const std::vector<double>& a2) {
  if (n < 1) throw usage_error("holder_family: need n >= 1");
  if (alpha1 < 1.0 || alpha2 < 1.0) throw usage_error("holder_family: need alpha >= 1");
  if (int(a1.size()) != n || int(a2.size()) != n)
    throw usage_error("holder_family: optimum dimension does not match n");
  for (double v : a1)
    if (v < 0.0 || v > 1.0) throw usage_error("holder_family: optimum outside [0,1]^n");
  for (double v : a2)
    if (v < 0.0 || v > 1.0) throw usage_error("holder_family: optimum outside [0,1]^n");

  ProblemMetadata meta;
  meta.optima = {a1, a2};
  meta.ideal = ObjectiveVector{0.0, 0.0};
  meta.front_note = "pareto set is the sup-norm segment between the two optima";

  Box box{std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
  auto fn = [a1, a2, alpha1, alpha2](const std::vector<double>& x) -> ObjectiveVector {
    double d1 = 0.0, d2 = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      d1 = std::max(d1, std::abs(x[i] - a1[i]));
      d2 = std::max(d2, std::abs(x[i] - a2[i]));
    }
    return {std::pow(d1, alpha1), std::pow(d2, alpha2)};
  };

  std::ostringstream name;
  name << "holder_n" << n << "_a" << alpha1 << "_" << alpha2;
  return Problem(name.str(), std::move(box), 2, std::move(fn), std::move(meta));
}

Problem holder_family(int n, double alpha1, double alpha2, double a1, double a2) {
  return holder_family(n, alpha1, alpha2, std::vector<double>(n, a1),
                       std::vector<double>(n, a2));
}

Problem classic_problem(const std::string& name) {
  if (name == "schaffer") {
    ProblemMetadata meta;
    meta.optima = {{0.0}, {2.0}};
    meta.ideal = ObjectiveVector{0.0, 0.0};
    meta.front_note = "pareto set is [0,2]";
    return Problem(
        "schaffer", Box{{-5.0}, {5.0}}, 2,
        [](const std::vector<double>& x) -> ObjectiveVector {
          return {x[0] * x[0], (x[0] - 2.0) * (x[0] - 2.0)};
        },
        std::move(meta));
  }
  if (name == "fonseca2") {
    const double c = 1.0 / std::sqrt(2.0);
    ProblemMetadata meta;
    meta.optima = {{c, c}, {-c, -c}};
    meta.ideal = ObjectiveVector{0.0, 0.0};
    meta.front_note = "pareto set is the diagonal segment between the two optima";
    return Problem(
        "fonseca2", Box{{-4.0, -4.0}, {4.0, 4.0}}, 2,
        [c](const std::vector<double>& x) -> ObjectiveVector {
          double s1 = 0.0, s2 = 0.0;
          for (double xi : x) {
            s1 += (xi - c) * (xi - c);
            s2 += (xi + c) * (xi + c);
          }
          return {1.0 - std::exp(-s1), 1.0 - std::exp(-s2)};
        },
        std::move(meta));
  }
  if (name == "quadratic1d") {
    ProblemMetadata meta;
    meta.optima = {{0.25}};
    meta.ideal = ObjectiveVector{0.0};
    meta.front_note = "minimum 0 at x = 0.25";
    return Problem(
        "quadratic1d", Box{{0.0}, {1.0}}, 1,
        [](const std::vector<double>& x) -> ObjectiveVector {
          return {(x[0] - 0.25) * (x[0] - 0.25)};
        },
        std::move(meta));
  }
  throw usage_error("unknown classic problem: " + name);
}

std::vector<std::string> registry_ids() {
  return {"worked_example", "holder", "schaffer", "fonseca2", "quadratic1d"};
}

Problem make_registry_problem(const std::string& id, const HolderParams& hp) {
  if (id == "worked_example") return worked_example();
  if (id == "holder") return holder_family(hp.n, hp.alpha1, hp.alpha2, hp.a1, hp.a2);
  if (id == "schaffer" || id == "fonseca2" || id == "quadratic1d") return classic_problem(id);
  throw usage_error("unknown problem id: " + id);
}

BudgetedEvaluator::BudgetedEvaluator(const Problem& problem, std::size_t cap)
    : problem_(problem), cap_(cap) {}

ObjectiveVector BudgetedEvaluator::operator()(const std::vector<double>& x) {
  if (log_.size() >= cap_) throw budget_exhausted(problem_.name() + ": evaluation budget spent");
  ObjectiveVector y = problem_.evaluate(x);
  log_.push_back(EvalRecord{x, y, log_.size()});
  return y;
}

}  // namespace mosoo
