#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <thread>

#include "checkpoint.hpp"
#include "clm/affine/affine_group.hpp"
#include "clm/analytic/lvalues.hpp"
#include "clm/arith/primes.hpp"
#include "clm/analytic/residues.hpp"
#include "clm/disc/counts.hpp"
#include "clm/disc/moments.hpp"
#include "clm/error.hpp"
#include "clm/group/gi.hpp"
#include "clm/group/standard_groups.hpp"
#include "output.hpp"

namespace moments {

namespace {

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::size_t to_size(std::int64_t v, const char* what) {
  if (v < 1) throw clm::InvalidInput(std::string(what) + " must be positive");
  return static_cast<std::size_t>(v);
}

volatile std::sig_atomic_t g_interrupted = 0;
extern "C" void on_interrupt(int) { g_interrupted = 1; }

}  // namespace

CommandResult cmd_group(const GroupArgs& a) {
  clm::group::SearchLimits limits;
  limits.max_group_order = to_size(a.max_order, "--max-order");
  limits.max_enumerated = to_size(a.max_enumerated, "--max-enumerated");
  const auto g = clm::group::group_from_name(a.preset, std::max<std::size_t>(limits.max_group_order, 2000));
  if (g.order() > limits.max_group_order)
    throw clm::CapExceeded("group order " + std::to_string(g.order()) + " exceeds --max-order");
  const auto r = clm::group::gi_extension_count(g, limits);
  std::cerr << g.label() << ": order " << g.order() << ", |Aut| = " << r.aut_order << ", |Out| = " << r.out_order
            << "\n  GI-extensions: " << r.gi_extension_count << (r.has_gi ? "" : " (none)")
            << "\n  generated by involutions: " << yes_no(r.generated_by_involutions) << '\n';
  std::ostringstream csv;
  csv << "group,order,has_gi,gi_extension_count,generated_by_involutions,aut_order,out_order\n"
      << a.preset << ',' << g.order() << ',' << yes_no(r.has_gi) << ',' << r.gi_extension_count << ','
      << yes_no(r.generated_by_involutions) << ',' << r.aut_order << ',' << r.out_order << '\n';
  return {csv.str(), kExitOk};
}

CommandResult cmd_affine_scan(const AffineScanArgs& a) {
  if (a.max_qd < 2 || a.max_qd > kMaxAffineQd)
    throw clm::CapExceeded("--max-qd must lie in [2, " + std::to_string(kMaxAffineQd) + "]");
  const auto max_qd = static_cast<std::uint64_t>(a.max_qd);
  clm::group::SearchLimits limits;
  limits.max_group_order = std::max<std::size_t>(limits.max_group_order, max_qd);
  std::ostringstream csv;
  csv << "q,d,theorem_prediction,brute_force_count,agree\n";
  int rows = 0;
  int disagreements = 0;
  for (std::uint64_t p = 2; p <= max_qd; ++p) {
    if (!clm::arith::is_prime(p)) continue;
    std::uint64_t q = p;
    for (unsigned n = 1; q <= max_qd; ++n, q *= p) {
      for (std::uint64_t d = 1; d < q && q * d <= max_qd; ++d) {
        if ((q - 1) % d != 0) continue;
        const auto spec = clm::affine::make_affine_spec(p, n, d);
        const auto g = clm::affine::build_affine_group(spec, std::max<std::size_t>(max_qd, 2000));
        const auto count = clm::group::gi_extension_count(g.realization.group, limits).gi_extension_count;
        const int predicted = clm::affine::gi_count_by_theorem(p, n, d);
        const bool agree = static_cast<int>(count) == predicted;
        ++rows;
        if (!agree) {
          ++disagreements;
          std::cerr << "disagreement at q = " << q << " (p = " << p << ", n = " << n << "), d = " << d
                    << ": theorem " << predicted << ", brute force " << count << " (refined count "
                    << clm::affine::gi_count_refined(p, n, d) << ")\n";
        }
        csv << q << ',' << d << ',' << predicted << ',' << count << ',' << yes_no(agree) << '\n';
      }
    }
  }
  std::cerr << rows << " (q, d) pairs, " << disagreements << " disagreements\n";
  return {csv.str(), disagreements == 0 ? kExitOk : kExitValidation};
}

CommandResult cmd_sieve(const SieveArgs& a, const std::string& output_path) {
  clm::disc::SieveConfig config;
  config.group = clm::disc::parse_counted_group(a.group);
  config.sign = clm::disc::parse_sign(a.sign);
  config.x_max = a.x_max;
  config.x_limit = a.x_limit;
  config.checkpoints = a.checkpoints;
  // same normalization as MomentSieve, so the checkpoint hash matches
  if (config.checkpoints.empty() || config.checkpoints.back() != config.x_max) config.checkpoints.push_back(config.x_max);
  config.workers = a.workers != 0 ? a.workers : std::max(1u, std::thread::hardware_concurrency());
  config.block_size = a.block_size;
  if (a.max_blocks < 0) throw clm::InvalidInput("--max-blocks must be non-negative");

  std::filesystem::path ckpt = a.checkpoint_file;
  if (ckpt.empty() && !output_path.empty()) ckpt = output_path + ".ckpt";

  clm::disc::SieveState start;
  if (a.resume) {
    if (ckpt.empty()) throw clm::InvalidInput("--resume needs --checkpoint-file or a file --output");
    if (auto s = load_checkpoint(ckpt, config)) {
      start = std::move(*s);
      std::cerr << "resuming at |D| = " << start.next << '\n';
    }
  }
  clm::disc::MomentSieve sieve(config, std::move(start));
  g_interrupted = 0;
  auto previous = std::signal(SIGINT, on_interrupt);
  std::int64_t blocks = 0;
  bool stopped = false;
  while (!sieve.finished()) {
    sieve.step();
    ++blocks;
    if (!ckpt.empty()) save_checkpoint(ckpt, sieve.config(), sieve.state());
    if (g_interrupted || (a.max_blocks > 0 && blocks >= a.max_blocks && !sieve.finished())) {
      stopped = true;
      break;
    }
  }
  std::signal(SIGINT, previous);
  if (stopped) {
    std::cerr << "stopped at |D| = " << sieve.state().next
              << (ckpt.empty() ? " (no checkpoint file)" : "; checkpoint in " + ckpt.string()) << '\n';
    return {{}, kExitResource};
  }
  const auto series = sieve.series();
  std::ostringstream csv;
  csv << "X,sum_counts,num_fields,moment\n";
  for (const auto& r : series.rows)
    csv << r.x << ',' << r.sum_counts << ',' << r.num_fields << ',' << format_double(r.moment()) << '\n';
  if (!ckpt.empty()) std::filesystem::remove(ckpt);
  return {csv.str(), kExitOk};
}

CommandResult cmd_restricted(const RestrictedArgs& a) {
  const auto sign = clm::disc::parse_sign(a.sign);
  const auto r = clm::disc::restricted_sum(a.d1, a.d2, sign, a.x);
  std::ostringstream csv;
  csv << "d1,d2,sign,X,numerator,denominator,value\n"
      << a.d1 << ',' << a.d2 << ',' << clm::disc::to_string(sign) << ',' << a.x << ',' << r.num << ',' << r.den << ','
      << format_double(r.to_double()) << '\n';
  return {csv.str(), kExitOk};
}

CommandResult cmd_residue(const ResidueArgs& a) {
  const auto sign = clm::disc::parse_sign(a.sign);
  if (a.prime_cutoff < 100) throw clm::InvalidInput("--prime-cutoff must be at least 100");
  const auto cutoff = static_cast<std::uint64_t>(a.prime_cutoff);
  const auto pred = clm::analytic::residue_q8(a.d1, a.d2, sign, cutoff);
  const auto t = clm::analytic::tauberian_check(a.d1, a.d2, sign, a.x, cutoff);
  std::cerr << "residue " << format_double(pred.value) << " (+- " << format_double(pred.truncation_estimate)
            << "), L(1) = " << format_double(pred.l_value) << ", Euler factor " << format_double(pred.euler_factor)
            << "\nclosed form with bracket " << format_double(pred.bracket) << ": "
            << format_double(pred.printed_value) << "\n";
  std::ostringstream csv;
  csv << "d1,d2,sign,X,empirical,predicted,ratio\n"
      << a.d1 << ',' << a.d2 << ',' << clm::disc::to_string(sign) << ',' << a.x << ',' << format_double(t.empirical)
      << ',' << format_double(t.predicted) << ',' << format_double(t.ratio) << '\n';
  return {csv.str(), kExitOk};
}

CommandResult cmd_density(const DensityArgs& a) {
  const auto count = clm::disc::count_compositum_twists(a.d, a.x_max);
  const double empirical = static_cast<double>(count) / static_cast<double>(a.x_max);
  const double claimed = clm::disc::twist_density_claimed(a.d);
  const double exact = clm::disc::twist_density_exact(a.d);
  std::cerr << "count " << count << ", empirical/claimed " << format_double(empirical / claimed)
            << ", empirical/exact " << format_double(empirical / exact) << '\n';
  std::ostringstream csv;
  csv << "d,X,count,empirical,claimed,ratio_claimed,exact,ratio_exact\n"
      << a.d << ',' << a.x_max << ',' << count << ',' << format_double(empirical) << ',' << format_double(claimed) << ','
      << format_double(empirical / claimed) << ',' << format_double(exact) << ',' << format_double(empirical / exact)
      << '\n';
  return {csv.str(), kExitOk};
}

CommandResult cmd_lfunc(const LfuncArgs& a) {
  clm::analytic::LValue v;
  if (a.method == "character-sum") {
    v = clm::analytic::l_value_at_1(a.disc, a.prec);
  } else if (a.method == "smoothed") {
    v = clm::analytic::l_value_smoothed(a.disc);
  } else {
    throw clm::InvalidInput("--method must be character-sum or smoothed");
  }
  std::ostringstream csv;
  csv << "D,value,error_bound,method\n"
      << a.disc << ',' << format_double(v.value) << ',' << format_double(v.error_bound) << ','
      << clm::analytic::to_string(v.method) << '\n';
  return {csv.str(), kExitOk};
}

CommandResult cmd_gh(const GhArgs& a) {
  std::vector<std::int64_t> cps = a.checkpoints;
  if (cps.empty())
    for (std::int64_t c = 10; c < a.n; c *= 10) cps.push_back(c);
  cps.erase(std::remove_if(cps.begin(), cps.end(), [&](std::int64_t c) { return c >= a.n; }), cps.end());
  cps.push_back(a.n);
  if (!std::is_sorted(cps.begin(), cps.end()) || std::adjacent_find(cps.begin(), cps.end()) != cps.end())
    throw clm::InvalidInput("--checkpoints must be strictly increasing");
  const auto series = clm::analytic::gh_probe_series(cps);
  std::ostringstream csv;
  csv << "N,gh_sum\n";
  for (const auto& [n, v] : series) csv << n << ',' << format_double(v) << '\n';
  return {csv.str(), kExitOk};
}

}  // namespace moments
