#include "privmarket/oracle.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "privmarket/dp_core.hpp"
#include "privmarket/rng.hpp"
#include "privmarket/stats.hpp"

namespace privmarket {

namespace {

constexpr std::int64_t kChunkSize = 1 << 16;

// Accumulates n samples of sample_fn(rng) in fixed chunks, each chunk on its
// own substream derived from (seed, chunk index). Chunks are merged in index
// order, so the estimate is a pure function of (n, seed) regardless of how
// many worker threads ran.
template <typename SampleFn>
RunningMoments accumulate_chunked(std::int64_t n, std::uint64_t seed,
                                  SampleFn sample_fn) {
  const std::int64_t n_chunks = (n + kChunkSize - 1) / kChunkSize;
  std::vector<RunningMoments> chunk_stats(static_cast<std::size_t>(n_chunks));

  auto run_chunk = [&](std::int64_t chunk) {
    const std::int64_t begin = chunk * kChunkSize;
    const std::int64_t count = std::min(kChunkSize, n - begin);
    Substream rng(seed, kDomainOracle, static_cast<std::uint64_t>(chunk));
    RunningMoments acc;
    for (std::int64_t i = 0; i < count; ++i) {
      acc.add(sample_fn(rng));
    }
    chunk_stats[static_cast<std::size_t>(chunk)] = acc;
  };

  const unsigned hw = std::thread::hardware_concurrency();
  const std::int64_t n_workers =
      std::min<std::int64_t>(n_chunks, hw > 0 ? hw : 1);
  if (n_workers <= 1) {
    for (std::int64_t c = 0; c < n_chunks; ++c) run_chunk(c);
  } else {
    std::atomic<std::int64_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_workers));
    for (std::int64_t w = 0; w < n_workers; ++w) {
      workers.emplace_back([&] {
        for (std::int64_t c = next.fetch_add(1); c < n_chunks;
             c = next.fetch_add(1)) {
          run_chunk(c);
        }
      });
    }
    for (auto& t : workers) t.join();
  }

  RunningMoments total;
  for (const auto& s : chunk_stats) total.merge(s);
  return total;
}

McEstimate to_estimate(const RunningMoments& m) {
  return {m.mean, m.stderr_of_mean(), m.n};
}

void require_sample_count(std::int64_t n) {
  if (n < 2) {
    throw std::invalid_argument("sample count n must be >= 2");
  }
}

}  // namespace

McEstimate mc_expected_excess(const MarketQuery& q, std::int64_t n,
                              std::uint64_t seed) {
  require_sample_count(n);
  const double k_star = static_cast<double>(q.k_star);
  return to_estimate(accumulate_chunked(n, seed, [&](Substream& rng) {
    const double k = sample_laplace(rng, q.k_hat, q.lambda);
    return positive_part(k - k_star);
  }));
}

McEstimate mc_expected_shortfall(const MarketQuery& q, bool truncate,
                                 std::int64_t n, std::uint64_t seed) {
  require_sample_count(n);
  const double k_star = static_cast<double>(q.k_star);
  return to_estimate(accumulate_chunked(n, seed, [&](Substream& rng) {
    const double k = sample_laplace(rng, q.k_hat, q.lambda);
    if (truncate && k < 0.0) return 0.0;
    return positive_part(k_star - k);
  }));
}

McEstimate mc_expected_profit(const TradeTerms& terms, const MarketQuery& q,
                              bool integerize, std::int64_t n,
                              std::uint64_t seed) {
  require_sample_count(n);
  if (terms.k_star != q.k_star) {
    throw std::invalid_argument("terms.k_star and q.k_star must agree");
  }
  const double k_star = static_cast<double>(terms.k_star);
  const double outlay = terms.prices.p_opt + k_star * terms.prices.p_s;

  return to_estimate(accumulate_chunked(n, seed, [&](Substream& rng) {
    double k = sample_laplace(rng, q.k_hat, q.lambda);
    if (integerize) {
      k = static_cast<double>(std::llround(positive_part(k)));
    }
    // Same flow grouping as settlement, applied to a real-valued delivery.
    const double supplier = k * terms.costs.c_s;
    const double production = positive_part(k_star - k) * terms.costs.c_p;
    return ((outlay - supplier) - terms.costs.c_q) - production;
  }));
}

}  // namespace privmarket
