#include "clm/disc/moments.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <thread>

#include "clm/arith/kronecker.hpp"
#include "clm/arith/primes.hpp"
#include "clm/error.hpp"
#include "partitions.hpp"

namespace clm::disc {

std::string_view to_string(CountedGroup g) { return g == CountedGroup::q8 ? "q8" : "d4"; }

CountedGroup parse_counted_group(std::string_view text) {
  if (text == "q8" || text == "Q8") return CountedGroup::q8;
  if (text == "d4" || text == "D4") return CountedGroup::d4;
  throw InvalidInput("unknown group '" + std::string(text) + "' (use q8 or d4)");
}

std::int64_t fast_count(CountedGroup group, Sign sign, std::span<const std::uint32_t> primes) {
  const int w = static_cast<int>(primes.size());
  if (w < 3) return 0;
  std::uint32_t negative = 0;
  std::int64_t q[detail::kMaxPartitionElements];
  for (int i = 0; i < w; ++i) {
    q[i] = odd_prime_discriminant(primes[static_cast<std::size_t>(i)]);
    if (q[i] < 0) negative |= 1u << i;
  }
  if (((std::popcount(negative) & 1) == 1) != (sign == Sign::negative)) {
    throw InvalidInput("fast_count: primes do not form a discriminant of the requested sign");
  }
  // nonresidue[j]: bit i set when (q_i / p_j) = -1.
  std::uint32_t nonresidue[detail::kMaxPartitionElements] = {};
  for (int j = 0; j < w; ++j) {
    for (int i = 0; i < w; ++i) {
      if (i != j && arith::kronecker(q[i], primes[static_cast<std::size_t>(j)]) == -1) nonresidue[j] |= 1u << i;
    }
  }
  const std::int64_t mult = std::int64_t{1} << (w - 3);
  // Product of the parts over `mask` is a residue mod every prime in `primes_of`.
  auto residue_on = [&](std::uint32_t mask, std::uint32_t primes_of) {
    for (std::uint32_t bits = primes_of; bits != 0; bits &= bits - 1) {
      if (std::popcount(nonresidue[std::countr_zero(bits)] & mask) & 1) return false;
    }
    return true;
  };
  std::int64_t total = 0;
  for (const auto& b : detail::three_block_partitions(w)) {
    int neg_blocks = 0;
    for (std::uint32_t blk : b) neg_blocks += std::popcount(blk & negative) & 1;
    if (neg_blocks > 1) continue;
    if (group == CountedGroup::q8) {
      if (residue_on(b[1] | b[2], b[0]) && residue_on(b[0] | b[2], b[1]) && residue_on(b[0] | b[1], b[2])) {
        total += mult;
      }
    } else {
      for (int f = 0; f < 3; ++f) {
        const std::uint32_t x = b[static_cast<std::size_t>((f + 1) % 3)];
        const std::uint32_t y = b[static_cast<std::size_t>((f + 2) % 3)];
        if (residue_on(x, y) && residue_on(y, x)) total += mult;
      }
    }
  }
  return total;
}

std::string SieveConfig::fingerprint() const {
  std::ostringstream os;
  os << "moment-sieve/1;group=" << to_string(group) << ";sign=" << to_string(sign) << ";x_max=" << x_max
     << ";checkpoints=";
  for (std::size_t i = 0; i < checkpoints.size(); ++i) os << (i ? "," : "") << checkpoints[i];
  return os.str();
}

namespace {

struct Partial {
  std::int64_t sum_counts = 0;
  std::int64_t num_fields = 0;
};

Partial sieve_range(const arith::SpfTable& spf, CountedGroup group, Sign sign, std::int64_t lo, std::int64_t hi) {
  Partial out;
  const std::int64_t s = sign == Sign::negative ? -1 : 1;
  std::uint32_t primes[16];
  for (std::int64_t a = std::max<std::int64_t>(lo, 3); a <= hi; ++a) {
    const std::int64_t d = s * a;
    const std::int64_t r = ((d % 4) + 4) % 4;
    if (r == 1) {
      const int k = spf.squarefree_primes(static_cast<std::uint32_t>(a), primes);
      if (k < 0) continue;
      ++out.num_fields;
      out.sum_counts += fast_count(group, sign, std::span<const std::uint32_t>(primes, static_cast<std::size_t>(k)));
    } else if (r == 0) {
      const std::int64_t rm = (((d / 4) % 4) + 4) % 4;
      if ((rm == 2 || rm == 3) && spf.is_squarefree(static_cast<std::uint32_t>(a / 4))) ++out.num_fields;
    }
  }
  return out;
}

}  // namespace

MomentSieve::MomentSieve(SieveConfig config, SieveState resume) : config_(std::move(config)), state_(std::move(resume)) {
  if (config_.x_max < 3) throw InvalidInput("sieve: x_max must be at least 3");
  if (config_.x_max > config_.x_limit) {
    throw CapExceeded("sieve: x_max " + std::to_string(config_.x_max) + " exceeds the configured bound " +
                      std::to_string(config_.x_limit));
  }
  if (config_.workers == 0) throw InvalidInput("sieve: workers must be positive");
  if (config_.block_size < 1) throw InvalidInput("sieve: block size must be positive");
  auto& cps = config_.checkpoints;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (cps[i] < 1 || cps[i] > config_.x_max) throw InvalidInput("sieve: checkpoint outside [1, x_max]");
    if (i > 0 && cps[i] <= cps[i - 1]) throw InvalidInput("sieve: checkpoints must be strictly increasing");
  }
  if (cps.empty() || cps.back() != config_.x_max) cps.push_back(config_.x_max);
  if (state_.next < 1 || state_.next > config_.x_max + 1) throw InvalidInput("sieve: resume position out of range");
  spf_ = std::make_unique<arith::SpfTable>(static_cast<std::uint32_t>(config_.x_max));
}

MomentSieve::~MomentSieve() = default;

bool MomentSieve::step() {
  if (finished()) return false;
  const std::int64_t lo = state_.next;
  const auto cp = std::lower_bound(config_.checkpoints.begin(), config_.checkpoints.end(), lo);
  const std::int64_t hi = std::min(lo + config_.block_size - 1, *cp);

  const unsigned workers = static_cast<unsigned>(std::min<std::int64_t>(config_.workers, hi - lo + 1));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    parts[0] = sieve_range(*spf_, config_.group, config_.sign, lo, hi);
  } else {
    const std::int64_t span = (hi - lo + 1 + workers - 1) / workers;
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t a = lo + static_cast<std::int64_t>(w) * span;
      const std::int64_t b = std::min(hi, a + span - 1);
      if (a > b) continue;
      pool.emplace_back([&, w, a, b] { parts[w] = sieve_range(*spf_, config_.group, config_.sign, a, b); });
    }
  }
  for (const auto& p : parts) {
    state_.sum_counts += p.sum_counts;
    state_.num_fields += p.num_fields;
  }
  state_.next = hi + 1;
  if (hi == *cp) state_.rows.push_back({hi, state_.sum_counts, state_.num_fields});
  return !finished();
}

MomentSeries MomentSieve::series() const {
  return MomentSeries{config_.group, config_.sign, state_.rows, !finished(), state_.next - 1};
}

MomentSeries sieve_moments(const SieveConfig& config, std::optional<std::chrono::milliseconds> budget) {
  MomentSieve sieve(config);
  const auto start = std::chrono::steady_clock::now();
  while (sieve.step()) {
    if (budget && std::chrono::steady_clock::now() - start > *budget) break;
  }
  return sieve.series();
}

}  // namespace clm::disc
