#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mosoo/cli.hpp"
#include "mosoo/errors.hpp"

using mosoo::cli::RunConfig;

int main(int argc, char** argv) {
  CLI::App app{"hierarchical optimistic optimization over box domains"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string manifest_path;
  auto* run = app.add_subcommand("run", "execute one run and write its artifacts");
  run->add_option("--problem", cfg.problem_id, "registry problem id")->capture_default_str();
  run->add_option("--holder-n", cfg.holder.n, "holder: dimension")->capture_default_str();
  run->add_option("--holder-alpha1", cfg.holder.alpha1, "holder: first exponent")
      ->capture_default_str();
  run->add_option("--holder-alpha2", cfg.holder.alpha2, "holder: second exponent")
      ->capture_default_str();
  run->add_option("--holder-a1", cfg.holder.a1, "holder: first optimum, broadcast")
      ->capture_default_str();
  run->add_option("--holder-a2", cfg.holder.a2, "holder: second optimum, broadcast")
      ->capture_default_str();
  run->add_option("--algo", cfg.algo, "mosoo or soo")
      ->check(CLI::IsMember({"mosoo", "soo"}))
      ->capture_default_str();
  run->add_option("--k", cfg.k, "children per expansion")->capture_default_str();
  run->add_option("--budget", cfg.budget, "evaluation budget")->capture_default_str();
  auto* opt_p = run->add_option("--hmax-p", cfg.hmax_p, "depth cap floor(t^p)")
                    ->capture_default_str();
  auto* opt_const = run->add_option("--hmax-const", cfg.hmax_h, "constant depth cap");
  auto* opt_unb = run->add_flag("--hmax-unbounded", "no depth cap");
  opt_const->excludes(opt_p)->excludes(opt_unb);
  opt_unb->excludes(opt_p);
  run->add_option("--split", cfg.split, "sequential or random")
      ->check(CLI::IsMember({"sequential", "random"}))
      ->capture_default_str();
  run->add_option("--seed", cfg.seed, "run seed")->capture_default_str();
  run->add_option("--out", cfg.out_dir, "output directory")->required();
  run->add_option("--front-samples", cfg.front_samples, "reference front sample count")
      ->capture_default_str();
  run->add_flag("--bounds", cfg.bounds, "also write the bound curves (holder only)");
  run->add_option("--delta-form", cfg.delta_form, "bound decay form: diameter or steep")
      ->check(CLI::IsMember({"diameter", "steep"}))
      ->capture_default_str();
  auto* opt_manifest =
      run->add_option("--from-manifest", manifest_path, "replay a recorded run config");

  std::string set_path, front_path, ind_problem;
  mosoo::HolderParams ind_holder;
  std::size_t ind_samples = 100000;
  std::uint64_t ind_seed = 0;
  auto* ind = app.add_subcommand("indicators", "score a stored approximation set");
  ind->add_option("--set", set_path, "approximation set csv")->required();
  ind->add_option("--front", front_path, "reference front csv");
  ind->add_option("--problem", ind_problem, "registry problem to sample a front from");
  ind->add_option("--holder-n", ind_holder.n)->capture_default_str();
  ind->add_option("--holder-alpha1", ind_holder.alpha1)->capture_default_str();
  ind->add_option("--holder-alpha2", ind_holder.alpha2)->capture_default_str();
  ind->add_option("--holder-a1", ind_holder.a1)->capture_default_str();
  ind->add_option("--holder-a2", ind_holder.a2)->capture_default_str();
  ind->add_option("--front-samples", ind_samples, "front sample count")->capture_default_str();
  ind->add_option("--seed", ind_seed, "front sampling seed")->capture_default_str();

  app.add_subcommand("list-problems", "show the problem registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    if (*opt_manifest) {
      try {
        std::string out_dir = cfg.out_dir;
        cfg = mosoo::cli::config_from_manifest(manifest_path);
        cfg.out_dir = out_dir;
      } catch (const mosoo::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
      }
    } else {
      if (*opt_const) cfg.hmax_kind = "constant";
      if (*opt_unb) cfg.hmax_kind = "unbounded";
    }
    return mosoo::cli::run_command(cfg);
  }
  if (ind->parsed())
    return mosoo::cli::indicators_command(set_path, front_path, ind_problem, ind_holder,
                                          ind_samples, ind_seed);
  return mosoo::cli::list_problems_command();
}
