#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mosoo/indicators.hpp"
#include "mosoo/pareto.hpp"
#include "mosoo/problems.hpp"

namespace mosoo::cli {

// Everything one optimizer run needs; the manifest serializes exactly this
// (minus out_dir, so a manifest can be replayed into a fresh directory).
struct RunConfig {
  std::string problem_id = "worked_example";
  HolderParams holder;
  std::string algo = "mosoo";           // mosoo | soo
  int k = 3;
  std::size_t budget = 1000;
  std::string hmax_kind = "power";      // power | constant | unbounded
  double hmax_p = 0.5;
  int hmax_h = 0;
  std::string split = "sequential";     // sequential | random
  std::uint64_t seed = 0;
  std::size_t front_samples = 100000;
  bool bounds = false;
  std::string delta_form = "diameter";  // diameter | steep
  std::string out_dir = "out";
};

// Executes a run and writes manifest.json, evaluations.csv, trace.csv,
// approximation_set.csv, indicators.csv and, with cfg.bounds, bounds.csv into
// cfg.out_dir. Returns the process exit code (0 ok, 2 config, 3 io,
// 4 numeric).
int run_command(const RunConfig& cfg);

// Unary indicators of a stored set against either a stored front file or a
// front sampled from a registry problem. Empty front_path means sample.
int indicators_command(const std::string& set_path, const std::string& front_path,
                       const std::string& problem_id, const HolderParams& hp,
                       std::size_t front_samples, std::uint64_t seed);

int list_problems_command();

RunConfig config_from_manifest(const std::string& path);

// Deterministic sampling seed derived from the run seed, recorded in the
// manifest so fronts can be rebuilt offline.
std::uint64_t front_seed(std::uint64_t run_seed);

// 17 significant digits, enough to round-trip any double through text.
std::string format_double(double v);

void write_set_csv(const std::string& path, const ApproximationSet& set);
// Reads y1..ym columns. Malformed files raise io_error, non-finite values
// numeric_error. No filtering: re-emitting the rows is byte-identical.
ApproximationSet read_set_csv(const std::string& path);

// Reference point used for the hypervolume column: the front nadir pushed out
// by one percent of the front span per coordinate.
ObjectiveVector hypervolume_reference(const ReferenceFront& front);

}  // namespace mosoo::cli
