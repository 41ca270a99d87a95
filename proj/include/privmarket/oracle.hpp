#pragma once

#include <cstdint>

#include "privmarket/pricing.hpp"
#include "privmarket/settlement.hpp"

namespace privmarket {

/// Monte Carlo estimate: sample mean, standard error of the mean, and sample
/// count.
struct McEstimate {
  double mean;
  double std_error;
  std::int64_t n;
};

/// Plain Monte Carlo estimate of E[(k - k*)^+ | k_hat] with
/// k ~ Laplace(k_hat, 1/lambda), untruncated. Deterministic given (q, n,
/// seed); samples run in fixed-size chunks with per-chunk substreams and an
/// index-ordered reduction, so the result is independent of thread count.
McEstimate mc_expected_excess(const MarketQuery& q, std::int64_t n,
                              std::uint64_t seed);

/// Monte Carlo estimate of the shortfall expectation. With truncate=true the
/// sub-zero posterior mass is dropped unnormalized,
/// averaging (k* - k)^+ 1{k >= 0}; with truncate=false it averages the plain
/// (k* - k)^+.
McEstimate mc_expected_shortfall(const MarketQuery& q, bool truncate,
                                 std::int64_t n, std::uint64_t seed);

/// Monte Carlo estimate of the broker's expected profit under the posterior:
/// draws k ~ Laplace(k_hat, 1/lambda) and averages the realized profit at the
/// given terms. With integerize=true each draw is clamped at zero and rounded
/// to the nearest integer before settlement, quantifying the gap between the
/// continuous expectations and physical unit deliveries. Requires
/// terms.k_star == q.k_star.
McEstimate mc_expected_profit(const TradeTerms& terms, const MarketQuery& q,
                              bool integerize, std::int64_t n,
                              std::uint64_t seed);

}  // namespace privmarket
