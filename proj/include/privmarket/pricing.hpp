#pragma once

#include <cstdint>

namespace privmarket {

/// One market interaction: customers demand k_star items, the database
/// declared k_hat of them available under Laplace noise of scale 1/lambda.
/// k_hat is real-valued and may be negative.
struct MarketQuery {
  std::int64_t k_star;
  double k_hat;
  double lambda;

  MarketQuery(std::int64_t k_star_in, double k_hat_in, double lambda_in);
};

/// Broker-side unit costs: fixed query fee c_q, supplier unit price c_s, and
/// internal unit production cost c_p. The market premise is c_s < c_p; a
/// schedule violating it is legal but callers may want to warn (see
/// premise_holds).
struct CostSchedule {
  double c_q;
  double c_s;
  double c_p;

  CostSchedule(double c_q_in, double c_s_in, double c_p_in);

  /// True when procuring from suppliers is actually cheaper than producing.
  bool premise_holds() const { return c_s < c_p; }
};

/// Quoted option terms: full price and its noise-uncertainty component.
struct OptionQuote {
  double price;
  double premium;
};

/// max(x, 0).
double positive_part(double x);

/// Expected number of items bought in excess of demand, conditional on the
/// declared count: E[(k - k*)^+ | k_hat] with k ~ Laplace(k_hat, 1/lambda).
/// Closed form (k_hat - k*)^+ + e^{-lambda |k_hat - k*|} / (2 lambda).
double expected_excess(const MarketQuery& q);

/// Call-option price: the supplier unit price times the expected excess.
double option_price(double c_s, const MarketQuery& q);

/// Noise-uncertainty component of the option price,
/// c_s e^{-lambda |k_hat - k*|} / (2 lambda). Peaks at k_hat = k* with value
/// c_s / (2 lambda) and decays as the declared count moves away from demand.
double premium(double c_s, const MarketQuery& q);

OptionQuote make_quote(double c_s, const MarketQuery& q);

/// Expected shortfall the broker must produce, with the posterior mass below
/// zero dropped unnormalized:
///   E[(k* - k)^+ 1{k >= 0} | k_hat]
///     = (k* - k_hat)^+ + e^{-lambda |k_hat - k*|}/(2 lambda)
///       - (e^{-lambda k_hat}/2)(k* + 1/lambda).
/// Only defined for k_hat >= 0; throws std::domain_error otherwise.
double expected_shortfall(const MarketQuery& q);

/// End-price lower bound for a profitable trade given the realized delivery:
///   (c_q + k c_s + (k* - k)^+ c_p - p_opt) / k*.
double min_price_deterministic(const CostSchedule& costs, std::int64_t k,
                               std::int64_t k_star, double p_opt);

/// End-price lower bound for a trade profitable on average over the noisy
/// posterior. Requires k_hat >= 0 (inherits the expected_shortfall regime);
/// throws std::domain_error otherwise.
double min_price_average(const CostSchedule& costs, const MarketQuery& q);

}  // namespace privmarket
