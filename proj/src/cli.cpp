#include "mosoo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "mosoo/errors.hpp"
#include "mosoo/optimizer.hpp"
#include "mosoo/theory.hpp"

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace mosoo::cli {

namespace {

HMaxPolicy hmax_from_config(const RunConfig& cfg) {
  if (cfg.hmax_kind == "power") return HMaxPolicy::power(cfg.hmax_p);
  if (cfg.hmax_kind == "constant") return HMaxPolicy::constant(cfg.hmax_h);
  if (cfg.hmax_kind == "unbounded") return HMaxPolicy::unbounded();
  throw usage_error("unknown hmax kind: " + cfg.hmax_kind);
}

SplitPolicy split_from_config(const std::string& split) {
  if (split == "sequential") return SplitPolicy::sequential;
  if (split == "random") return SplitPolicy::random_dim;
  throw usage_error("unknown split policy: " + split);
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open " + path.string() + " for writing");
  return out;
}

void finish_out(std::ofstream& out, const fs::path& path) {
  out.flush();
  if (!out) throw io_error("write failed on " + path.string());
}

void write_evaluations_csv(const fs::path& path, const RunTrace& trace, int n, int m) {
  auto out = open_out(path);
  out << "eval_index";
  for (int d = 1; d <= n; ++d) out << ",x" << d;
  for (int j = 1; j <= m; ++j) out << ",y" << j;
  out << "\n";
  for (const auto& rec : trace.evals) {
    out << rec.index;
    for (double v : rec.x) out << "," << format_double(v);
    for (double v : rec.y) out << "," << format_double(v);
    out << "\n";
  }
  finish_out(out, path);
}

void write_trace_csv(const fs::path& path, const RunTrace& trace) {
  auto out = open_out(path);
  out << "t,sweep,depth,p_size,expanded_count,expanded_ids,cum_evals\n";
  for (const auto& rec : trace.iterations) {
    out << rec.t << "," << rec.sweep << "," << rec.depth << "," << rec.p_size << ","
        << rec.expanded.size() << ",";
    for (std::size_t i = 0; i < rec.expanded.size(); ++i)
      out << (i ? ";" : "") << rec.expanded[i];
    out << "," << rec.evals_after << "\n";
  }
  finish_out(out, path);
}

struct CurveRow {
  std::size_t t = 0;
  std::size_t cum_evals = 0;
  double epsilon = 0.0;
  double hypervolume = -1.0;  // negative means not applicable
  ObjectiveVector loss;       // empty when the problem has no ideal metadata
};

std::vector<CurveRow> indicator_curve(const RunTrace& trace, const ReferenceFront& front,
                                      const Problem& problem) {
  EpsilonCurve eps(front);
  ParetoArchive archive;
  const bool with_hv = problem.m() == 2;
  ObjectiveVector hv_ref;
  if (with_hv) hv_ref = hypervolume_reference(front);
  const auto& ideal = problem.metadata().ideal;
  ObjectiveVector running_min;

  std::vector<CurveRow> rows;
  rows.reserve(trace.iterations.size());
  std::size_t cursor = 0;
  for (const auto& rec : trace.iterations) {
    while (cursor < rec.evals_after) {
      const ObjectiveVector& y = trace.evals[cursor].y;
      eps.add_point(y);
      archive.insert(y);
      if (running_min.empty())
        running_min = y;
      else
        for (std::size_t j = 0; j < y.size(); ++j)
          running_min[j] = std::min(running_min[j], y[j]);
      ++cursor;
    }
    CurveRow row;
    row.t = rec.t;
    row.cum_evals = rec.evals_after;
    row.epsilon = eps.value();
    if (with_hv) row.hypervolume = hypervolume_2d(archive.members(), hv_ref);
    if (ideal) {
      row.loss = running_min;
      for (std::size_t j = 0; j < row.loss.size(); ++j) row.loss[j] -= (*ideal)[j];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_indicators_csv(const fs::path& path, const std::vector<CurveRow>& rows, int m,
                          bool with_hv, bool with_loss) {
  auto out = open_out(path);
  out << "t,cum_evals,epsilon";
  if (with_hv) out << ",hypervolume";
  if (with_loss)
    for (int j = 1; j <= m; ++j) out << ",loss_" << j;
  out << "\n";
  for (const auto& row : rows) {
    out << row.t << "," << row.cum_evals << "," << format_double(row.epsilon);
    if (with_hv) out << "," << format_double(row.hypervolume);
    if (with_loss)
      for (double v : row.loss) out << "," << format_double(v);
    out << "\n";
  }
  finish_out(out, path);
}

void write_bounds_csv(const fs::path& path, const RunConfig& cfg, const Problem& problem,
                      const RunTrace& trace, const ReferenceFront& front) {
  int factor;
  if (cfg.delta_form == "diameter")
    factor = 1;
  else if (cfg.delta_form == "steep")
    factor = 3;
  else
    throw usage_error("unknown delta form: " + cfg.delta_form);

  BoundModel model;
  model.objectives = {
      {DeltaSequence::holder_step(cfg.holder.alpha1, cfg.k, cfg.holder.n, factor), 2.0, 0.0},
      {DeltaSequence::holder_step(cfg.holder.alpha2, cfg.k, cfg.holder.n, factor), 2.0, 0.0},
  };
  model.psi = conflict_dimension(front_extrema(problem), front);
  model.recorded_multipliers = sweep_length_per_iteration(trace);
  HMaxPolicy hmax = hmax_from_config(cfg);
  model.nominal = hmax;

  auto out = open_out(path);
  out << "t,loss_bound_1,loss_bound_2,indicator_bound\n";
  for (const auto& rec : trace.iterations) {
    ObjectiveVector lb = loss_bound(rec.t, model, hmax(rec.t));
    double ib = indicator_bound(rec.t, model, hmax(rec.t));
    out << rec.t << "," << format_double(lb[0]) << "," << format_double(lb[1]) << ","
        << format_double(ib) << "\n";
  }
  finish_out(out, path);
}

ordered_json manifest_json(const RunConfig& cfg, const std::vector<std::string>& outputs) {
  ordered_json problem;
  problem["id"] = cfg.problem_id;
  if (cfg.problem_id == "holder") {
    problem["n"] = cfg.holder.n;
    problem["alpha1"] = cfg.holder.alpha1;
    problem["alpha2"] = cfg.holder.alpha2;
    problem["a1"] = cfg.holder.a1;
    problem["a2"] = cfg.holder.a2;
  }
  ordered_json hmax;
  hmax["kind"] = cfg.hmax_kind;
  if (cfg.hmax_kind == "power") hmax["p"] = cfg.hmax_p;
  if (cfg.hmax_kind == "constant") hmax["h"] = cfg.hmax_h;

  ordered_json doc;
  doc["problem"] = problem;
  doc["algorithm"] = cfg.algo;
  doc["k"] = cfg.k;
  doc["budget"] = cfg.budget;
  doc["hmax"] = hmax;
  doc["split"] = cfg.split;
  doc["seed"] = cfg.seed;
  doc["front_samples"] = cfg.front_samples;
  doc["front_seed"] = front_seed(cfg.seed);
  doc["bounds"] = cfg.bounds;
  doc["delta_form"] = cfg.delta_form;
  doc["outputs"] = outputs;
  return doc;
}

}  // namespace

std::uint64_t front_seed(std::uint64_t run_seed) {
  // fixed offset keeps the sampling stream away from the split-policy stream
  return run_seed ^ 0x9e3779b97f4a7c15ull;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ObjectiveVector hypervolume_reference(const ReferenceFront& front) {
  ObjectiveVector nad = nadir(front.members);
  ObjectiveVector ideal = empirical_ideal(front.members);
  for (std::size_t j = 0; j < nad.size(); ++j)
    nad[j] += 0.01 * (nad[j] - ideal[j]) + 1e-9;
  return nad;
}

void write_set_csv(const std::string& path, const ApproximationSet& set) {
  auto out = open_out(path);
  const std::size_t m = set.empty() ? 0 : set[0].size();
  for (std::size_t j = 1; j <= m; ++j) out << (j > 1 ? "," : "") << "y" << j;
  out << "\n";
  for (const auto& v : set) {
    for (std::size_t j = 0; j < v.size(); ++j) out << (j ? "," : "") << format_double(v[j]);
    out << "\n";
  }
  finish_out(out, path);
}

ApproximationSet read_set_csv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line)) throw io_error(path + ": missing header");
  std::size_t m = line.empty() ? 0 : std::count(line.begin(), line.end(), ',') + 1;
  if (m == 0 || line.substr(0, 1) != "y") throw io_error(path + ": expected y1..ym header");
  ApproximationSet set;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ObjectiveVector v;
    const char* s = line.c_str();
    char* end = nullptr;
    for (std::size_t j = 0; j < m; ++j) {
      double x = std::strtod(s, &end);
      if (end == s)
        throw io_error(path + ": bad number at line " + std::to_string(lineno));
      if (!std::isfinite(x))
        throw numeric_error(path + ": non-finite value at line " + std::to_string(lineno));
      v.push_back(x);
      s = end;
      if (j + 1 < m) {
        if (*s != ',') throw io_error(path + ": expected comma at line " + std::to_string(lineno));
        ++s;
      }
    }
    if (*s != '\0' && *s != '\r')
      throw io_error(path + ": trailing junk at line " + std::to_string(lineno));
    set.push_back(std::move(v));
  }
  return set;
}

RunConfig config_from_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path);
  ordered_json doc;
  try {
    in >> doc;
    RunConfig cfg;
    cfg.problem_id = doc.at("problem").at("id").get<std::string>();
    if (cfg.problem_id == "holder") {
      cfg.holder.n = doc.at("problem").at("n").get<int>();
      cfg.holder.alpha1 = doc.at("problem").at("alpha1").get<double>();
      cfg.holder.alpha2 = doc.at("problem").at("alpha2").get<double>();
      cfg.holder.a1 = doc.at("problem").at("a1").get<double>();
      cfg.holder.a2 = doc.at("problem").at("a2").get<double>();
    }
    cfg.algo = doc.at("algorithm").get<std::string>();
    cfg.k = doc.at("k").get<int>();
    cfg.budget = doc.at("budget").get<std::size_t>();
    cfg.hmax_kind = doc.at("hmax").at("kind").get<std::string>();
    if (cfg.hmax_kind == "power") cfg.hmax_p = doc.at("hmax").at("p").get<double>();
    if (cfg.hmax_kind == "constant") cfg.hmax_h = doc.at("hmax").at("h").get<int>();
    cfg.split = doc.at("split").get<std::string>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    cfg.front_samples = doc.at("front_samples").get<std::size_t>();
    cfg.bounds = doc.at("bounds").get<bool>();
    cfg.delta_form = doc.at("delta_form").get<std::string>();
    return cfg;
  } catch (const nlohmann::json::exception& e) {
    throw io_error(path + ": malformed manifest: " + e.what());
  }
}

int run_command(const RunConfig& cfg) {
  try {
    if (cfg.algo != "mosoo" && cfg.algo != "soo")
      throw usage_error("unknown algorithm: " + cfg.algo);
    if (cfg.delta_form != "diameter" && cfg.delta_form != "steep")
      throw usage_error("unknown delta form: " + cfg.delta_form);
    if (cfg.bounds && cfg.problem_id != "holder")
      throw usage_error("--bounds needs the holder problem (known smoothness)");
    Problem problem = make_registry_problem(cfg.problem_id, cfg.holder);
    HMaxPolicy hmax = hmax_from_config(cfg);
    SplitPolicy split = split_from_config(cfg.split);

    RunTrace trace;
    ApproximationSet set;
    if (cfg.algo == "mosoo") {
      MosooResult res = mosoo_run(problem, cfg.k, cfg.budget, hmax, split, cfg.seed);
      trace = std::move(res.trace);
      set = std::move(res.set);
    } else {
      SooResult res = soo_run(problem, cfg.k, cfg.budget, hmax, split, cfg.seed);
      trace = std::move(res.trace);
      set = {ObjectiveVector{res.best_value}};
    }

    ReferenceFront front =
        sample_reference_front(problem, cfg.front_samples, front_seed(cfg.seed));
    std::vector<CurveRow> rows = indicator_curve(trace, front, problem);

    fs::path dir(cfg.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw io_error("cannot create directory " + dir.string());

    std::vector<std::string> outputs = {"manifest.json", "evaluations.csv", "trace.csv",
                                        "approximation_set.csv", "indicators.csv"};
    if (cfg.bounds) outputs.push_back("bounds.csv");

    {
      auto out = open_out(dir / "manifest.json");
      out << manifest_json(cfg, outputs).dump(2) << "\n";
      finish_out(out, dir / "manifest.json");
    }
    write_evaluations_csv(dir / "evaluations.csv", trace, problem.n(), problem.m());
    write_trace_csv(dir / "trace.csv", trace);
    write_set_csv((dir / "approximation_set.csv").string(), set);
    write_indicators_csv(dir / "indicators.csv", rows, problem.m(), problem.m() == 2,
                         problem.metadata().ideal.has_value());
    if (cfg.bounds) write_bounds_csv(dir / "bounds.csv", cfg, problem, trace, front);

    std::cout << "run complete: " << trace.evals.size() << "/" << cfg.budget
              << " evaluations, " << trace.iterations.size() << " iterations, set size "
              << set.size() << "\n";
    if (!rows.empty())
      std::cout << "final epsilon vs sampled front: " << format_double(rows.back().epsilon)
                << "\n";
    std::cout << "artifacts in " << dir.string() << "\n";
    return 0;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}

int indicators_command(const std::string& set_path, const std::string& front_path,
                       const std::string& problem_id, const HolderParams& hp,
                       std::size_t front_samples, std::uint64_t seed) {
  try {
    ApproximationSet set = read_set_csv(set_path);
    if (set.empty()) throw usage_error(set_path + ": empty set");

    ReferenceFront front;
    if (!front_path.empty()) {
      front = analytic_front(read_set_csv(front_path));
    } else if (!problem_id.empty()) {
      Problem problem = make_registry_problem(problem_id, hp);
      front = sample_reference_front(problem, front_samples, seed);
    } else {
      throw usage_error("indicators: need either --front or --problem");
    }
    if (set[0].size() != front.members[0].size())
      throw usage_error("indicators: set and front dimensions differ");

    std::cout << "epsilon: " << format_double(unary_epsilon(set, front)) << "\n";
    if (set[0].size() == 2) {
      ObjectiveVector ref = hypervolume_reference(front);
      std::size_t dropped = 0;
      double hv = hypervolume_2d(set, ref, &dropped);
      std::cout << "hypervolume: " << format_double(hv) << " (reference "
                << format_double(ref[0]) << "," << format_double(ref[1]) << ")\n";
      if (dropped)
        std::cerr << "warning: " << dropped << " member(s) outside the reference box\n";
    }
    return 0;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const numeric_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}

int list_problems_command() {
  for (const std::string& id : registry_ids()) {
    Problem p = make_registry_problem(id);
    std::cout << id << "  n=" << p.n() << " m=" << p.m();
    if (id == "holder")
      std::cout << "  parametric: --holder-n --holder-alpha1 --holder-alpha2 --holder-a1 "
                   "--holder-a2 (defaults n=1 alpha=2 a=0.25/0.75)";
    if (p.metadata().ideal) std::cout << "  ideal known";
    if (!p.metadata().optima.empty()) std::cout << ", optima known";
    std::cout << "\n";
  }
  return 0;
}

}  // namespace mosoo::cli
