#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clm/disc/fundamental.hpp"

namespace clm::arith {
class SpfTable;
}

namespace clm::disc {

enum class CountedGroup { q8, d4 };

std::string_view to_string(CountedGroup g);
CountedGroup parse_counted_group(std::string_view text);

// Per-discriminant count from the distinct odd primes of |d| (ascending).
// Equivalent to q8_count / d4_count for odd fundamental d, without allocation.
std::int64_t fast_count(CountedGroup group, Sign sign, std::span<const std::uint32_t> primes);

struct MomentRow {
  std::int64_t x = 0;
  std::int64_t sum_counts = 0;  // odd fundamental discriminants only
  std::int64_t num_fields = 0;  // all fundamental discriminants of the sign
  double moment() const { return num_fields == 0 ? 0.0 : static_cast<double>(sum_counts) / static_cast<double>(num_fields); }
  bool operator==(const MomentRow&) const = default;
};

struct SieveConfig {
  CountedGroup group = CountedGroup::q8;
  Sign sign = Sign::negative;
  std::int64_t x_max = 0;
  std::vector<std::int64_t> checkpoints;  // increasing, last one <= x_max; x_max is appended if missing
  unsigned workers = 1;
  std::int64_t block_size = 1 << 18;
  std::int64_t x_limit = 100'000'000;  // resource bound on x_max

  // Canonical text of everything that influences the output (not workers or
  // block size), used for checkpoint compatibility.
  std::string fingerprint() const;
};

// Resumable sieve progress. All fields are exact integers.
struct SieveState {
  std::int64_t next = 1;  // next |D| to process
  std::int64_t sum_counts = 0;
  std::int64_t num_fields = 0;
  std::vector<MomentRow> rows;
  bool operator==(const SieveState&) const = default;
};

struct MomentSeries {
  CountedGroup group = CountedGroup::q8;
  Sign sign = Sign::negative;
  std::vector<MomentRow> rows;
  bool truncated = false;
  std::int64_t reached = 0;  // last |D| fully processed
};

class MomentSieve {
 public:
  explicit MomentSieve(SieveConfig config, SieveState resume = {});
  ~MomentSieve();
  MomentSieve(const MomentSieve&) = delete;
  MomentSieve& operator=(const MomentSieve&) = delete;

  // Processes one block (never crossing a checkpoint). Returns false once done.
  bool step();
  bool finished() const noexcept { return state_.next > config_.x_max; }
  const SieveState& state() const noexcept { return state_; }
  const SieveConfig& config() const noexcept { return config_; }
  MomentSeries series() const;

 private:
  SieveConfig config_;
  SieveState state_;
  std::unique_ptr<arith::SpfTable> spf_;
};

// Runs to completion, or until the time budget is spent (then truncated = true).
MomentSeries sieve_moments(const SieveConfig& config,
                           std::optional<std::chrono::milliseconds> budget = std::nullopt);

}  // namespace clm::disc
