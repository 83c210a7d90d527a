// moments: command-line driver for GI-extension counts, affine-family scans,
// discriminant sieves and the analytic checks.
#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "clm/error.hpp"
#include "commands.hpp"
#include "output.hpp"

namespace {

// Normalizes integer flags so that 1e6 and 1000000 both parse.
const CLI::Validator kInteger(
    [](std::string& s) {
      const auto v = moments::parse_integer(s);
      if (!v) return std::string("not an integer: ") + s;
      s = std::to_string(*v);
      return std::string{};
    },
    "INT");

void add_integer(CLI::App* app, const std::string& name, std::int64_t& target, const std::string& help,
                 bool required = false) {
  auto* opt = app->add_option(name, target, help)->transform(kInteger)->capture_default_str();
  if (required) opt->required();
}

void add_integer_list(CLI::App* app, const std::string& name, std::vector<std::int64_t>& target,
                      const std::string& help) {
  app->add_option(name, target, help)->delimiter(',')->transform(kInteger);
}

// Turns `--config FILE` (flat key=value lines, parsed by CLI11's INI reader)
// into leading --key value arguments. With take-last options the real
// command-line flags, which come later, win.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::vector<std::string> out;
  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      config_path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      config_path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (config_path.empty()) return rest;
  std::ifstream in(config_path);
  if (!in) throw clm::InvalidInput("cannot read config file " + config_path);
  const auto items = CLI::ConfigINI().from_config(in);
  if (rest.empty()) throw clm::InvalidInput("a subcommand is required");
  out.push_back(rest.front());
  for (const auto& item : items) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (item.inputs.size() == 1 && (item.inputs[0] == "true" || item.inputs[0] == "false")) {
      if (item.inputs[0] == "true") out.push_back("--" + item.name);
      continue;
    }
    out.push_back("--" + item.name);
    std::string joined;
    for (const auto& v : item.inputs) joined += (joined.empty() ? "" : ",") + v;
    out.push_back(joined);
  }
  out.insert(out.end(), rest.begin() + 1, rest.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Lenstra moment tools: GI-extensions, affine groups, Q8/D4 discriminant sieves, L-values"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::string output;
  std::string config_unused;
  app.add_option("--config", config_unused, "flat key=value file; command-line flags win");

  moments::GroupArgs group_args;
  auto* group = app.add_subcommand("group", "GI-extension report for one group");
  group->add_option("--preset", group_args.preset, "e.g. q8, a5, c12, d8xc2, s4")->required();
  add_integer(group, "--max-order", group_args.max_order, "cap on |G| for the searches");
  add_integer(group, "--max-enumerated", group_args.max_enumerated, "cap on listed automorphisms");

  moments::AffineScanArgs affine_args;
  auto* affine = app.add_subcommand("affine-scan", "theorem prediction vs brute force over G(q,d)");
  add_integer(affine, "--max-qd", affine_args.max_qd, "largest group order q*d (at most 300)");

  moments::SieveArgs sieve_args;
  auto* sieve = app.add_subcommand("sieve", "moment series over fundamental discriminants");
  sieve->add_option("--group", sieve_args.group, "q8 or d4")->capture_default_str();
  sieve->add_option("--sign", sieve_args.sign, "neg or pos")->capture_default_str();
  add_integer(sieve, "--x-max", sieve_args.x_max, "largest |D|");
  add_integer(sieve, "--x-limit", sieve_args.x_limit, "resource bound on --x-max");
  add_integer_list(sieve, "--checkpoints", sieve_args.checkpoints, "comma-separated X values for output rows");
  sieve->add_option("--workers", sieve_args.workers, "threads (default: hardware concurrency)");
  add_integer(sieve, "--block-size", sieve_args.block_size, "discriminants per step");
  sieve->add_option("--checkpoint-file", sieve_args.checkpoint_file, "progress file (default: <output>.ckpt)");
  sieve->add_flag("--resume", sieve_args.resume, "continue from the checkpoint file if present");
  add_integer(sieve, "--max-blocks", sieve_args.max_blocks, "stop after this many steps (0: no limit)");

  moments::RestrictedArgs restricted_args;
  auto* restricted = app.add_subcommand("restricted", "exact restricted Q8 sum for (d1, d2)");
  add_integer(restricted, "--d1", restricted_args.d1, "first part", true);
  add_integer(restricted, "--d2", restricted_args.d2, "second part", true);
  restricted->add_option("--sign", restricted_args.sign, "neg or pos")->required();
  add_integer(restricted, "--x", restricted_args.x, "bound on |d1 d2 m|", true);

  moments::ResidueArgs residue_args;
  auto* residue = app.add_subcommand("residue", "Q8 residue against the restricted sum");
  add_integer(residue, "--d1", residue_args.d1, "first part", true);
  add_integer(residue, "--d2", residue_args.d2, "second part", true);
  residue->add_option("--sign", residue_args.sign, "neg or pos")->required();
  add_integer(residue, "--x", residue_args.x, "sieve bound X");
  add_integer(residue, "--prime-cutoff", residue_args.prime_cutoff, "Euler product cutoff");

  moments::DensityArgs density_args;
  auto* density = app.add_subcommand("density", "count of D = a d against the density constants");
  add_integer(density, "--d", density_args.d, "fundamental discriminant", true);
  add_integer(density, "--xmax", density_args.x_max, "bound on |D|");

  moments::LfuncArgs lfunc_args;
  auto* lfunc = app.add_subcommand("lfunc", "L(1, chi_D)");
  add_integer(lfunc, "--disc", lfunc_args.disc, "fundamental discriminant", true);
  lfunc->add_option("--prec", lfunc_args.prec, "target error bound")->capture_default_str();
  lfunc->add_option("--method", lfunc_args.method, "character-sum or smoothed")->capture_default_str();

  moments::GhArgs gh_args;
  auto* gh = app.add_subcommand("gh", "partial sums of L(1, chi_d)/d over positive d < N");
  add_integer(gh, "--n", gh_args.n, "N (at most 10^6)");
  add_integer_list(gh, "--checkpoints", gh_args.checkpoints, "extra N values (default: powers of 10)");

  for (auto* sub : app.get_subcommands({})) sub->add_option("--output", output, "CSV path, - for stdout");

  try {
    auto args = expand_config(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? moments::kExitOk : moments::kExitResource;
  } catch (const clm::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return moments::kExitResource;
  }

  try {
    moments::CommandResult result;
    const auto* sub = app.get_subcommands().front();
    const auto path = moments::resolve_output(output, sub->get_name());
    if (sub == group) result = moments::cmd_group(group_args);
    else if (sub == affine) result = moments::cmd_affine_scan(affine_args);
    else if (sub == sieve) result = moments::cmd_sieve(sieve_args, path.string());
    else if (sub == restricted) result = moments::cmd_restricted(restricted_args);
    else if (sub == residue) result = moments::cmd_residue(residue_args);
    else if (sub == density) result = moments::cmd_density(density_args);
    else if (sub == lfunc) result = moments::cmd_lfunc(lfunc_args);
    else result = moments::cmd_gh(gh_args);
    if (!result.csv.empty()) moments::write_atomically(path, result.csv);
    return result.status;
  } catch (const clm::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return moments::kExitValidation;
  } catch (const clm::ConvergenceFailure& e) {
    std::cerr << "error: " << e.what() << " (best value " << e.best_value() << " +- " << e.best_bound() << ")\n";
    return moments::kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return moments::kExitResource;
  }
}
