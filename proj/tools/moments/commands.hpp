#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace moments {

// Each command renders its CSV (written by the caller) and reports a human
// summary on stderr. Return value is the exit status.
struct CommandResult {
  std::string csv;
  int status = 0;
};

struct GroupArgs {
  std::string preset;
  std::int64_t max_order = 200;
  std::int64_t max_enumerated = 200'000;
};
CommandResult cmd_group(const GroupArgs& a);

struct AffineScanArgs {
  std::int64_t max_qd = 200;
};
inline constexpr std::int64_t kMaxAffineQd = 300;
CommandResult cmd_affine_scan(const AffineScanArgs& a);

struct SieveArgs {
  std::string group = "q8";
  std::string sign = "neg";
  std::int64_t x_max = 1'000'000;
  std::int64_t x_limit = 10'000'000;
  std::vector<std::int64_t> checkpoints;
  unsigned workers = 0;  // 0: hardware concurrency
  std::int64_t block_size = 1 << 18;
  std::string checkpoint_file;  // empty: <output>.ckpt when writing to a file
  bool resume = false;
  std::int64_t max_blocks = 0;  // stop after this many blocks (0: run to the end)
};
CommandResult cmd_sieve(const SieveArgs& a, const std::string& output_path);

struct RestrictedArgs {
  std::int64_t d1 = 0, d2 = 0;
  std::string sign;
  std::int64_t x = 0;
};
CommandResult cmd_restricted(const RestrictedArgs& a);

struct ResidueArgs {
  std::int64_t d1 = 0, d2 = 0;
  std::string sign;
  std::int64_t x = 1'000'000;
  std::int64_t prime_cutoff = 1'000'000;
};
CommandResult cmd_residue(const ResidueArgs& a);

struct DensityArgs {
  std::int64_t d = 0;
  std::int64_t x_max = 10'000'000;
};
CommandResult cmd_density(const DensityArgs& a);

struct LfuncArgs {
  std::int64_t disc = 0;
  double prec = 1e-10;
  std::string method = "character-sum";
};
CommandResult cmd_lfunc(const LfuncArgs& a);

struct GhArgs {
  std::int64_t n = 1'000'000;
  std::vector<std::int64_t> checkpoints;
};
CommandResult cmd_gh(const GhArgs& a);

}  // namespace moments
