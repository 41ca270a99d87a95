#include "privmarket/pricing.hpp"

#include <cmath>
#include <stdexcept>

namespace privmarket {

namespace {

void require_nonnegative_finite(double v, const char* name) {
  if (!(std::isfinite(v) && v >= 0.0)) {
    throw std::invalid_argument(std::string(name) +
                                " must be finite and non-negative");
  }
}

// e^{-lambda |k_hat - k*|} / (2 lambda), the noise term shared by the excess
// and shortfall expectations.
double noise_term(const MarketQuery& q) {
  const double gap = std::abs(q.k_hat - static_cast<double>(q.k_star));
  return std::exp(-q.lambda * gap) / (2.0 * q.lambda);
}

}  // namespace

MarketQuery::MarketQuery(std::int64_t k_star_in, double k_hat_in,
                         double lambda_in)
    : k_star(k_star_in), k_hat(k_hat_in), lambda(lambda_in) {
  if (k_star < 1) {
    throw std::invalid_argument("k_star must be >= 1");
  }
  if (!std::isfinite(k_hat)) {
    throw std::invalid_argument("k_hat must be finite");
  }
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    throw std::invalid_argument("lambda must be finite and > 0");
  }
}

CostSchedule::CostSchedule(double c_q_in, double c_s_in, double c_p_in)
    : c_q(c_q_in), c_s(c_s_in), c_p(c_p_in) {
  require_nonnegative_finite(c_q, "c_q");
  require_nonnegative_finite(c_s, "c_s");
  require_nonnegative_finite(c_p, "c_p");
}

double positive_part(double x) { return x > 0.0 ? x : 0.0; }

double expected_excess(const MarketQuery& q) {
  const double excess = positive_part(q.k_hat - static_cast<double>(q.k_star));
  return excess + noise_term(q);
}

double option_price(double c_s, const MarketQuery& q) {
  require_nonnegative_finite(c_s, "c_s");
  return c_s * expected_excess(q);
}

double premium(double c_s, const MarketQuery& q) {
  require_nonnegative_finite(c_s, "c_s");
  return c_s * noise_term(q);
}

OptionQuote make_quote(double c_s, const MarketQuery& q) {
  return {option_price(c_s, q), premium(c_s, q)};
}

double expected_shortfall(const MarketQuery& q) {
  if (q.k_hat < 0.0) {
    throw std::domain_error("expected_shortfall requires k_hat >= 0");
  }
  const double k_star = static_cast<double>(q.k_star);
  const double shortfall = positive_part(k_star - q.k_hat);
  const double below_zero_mass =
      0.5 * std::exp(-q.lambda * q.k_hat) * (k_star + 1.0 / q.lambda);
  return shortfall + noise_term(q) - below_zero_mass;
}

double min_price_deterministic(const CostSchedule& costs, std::int64_t k,
                               std::int64_t k_star, double p_opt) {
  if (k < 0) {
    throw std::invalid_argument("k must be >= 0");
  }
  if (k_star < 1) {
    throw std::invalid_argument("k_star must be >= 1");
  }
  require_nonnegative_finite(p_opt, "p_opt");
  const double kd = static_cast<double>(k);
  const double shortfall = static_cast<double>(k_star > k ? k_star - k : 0);
  return (costs.c_q + kd * costs.c_s + shortfall * costs.c_p - p_opt) /
         static_cast<double>(k_star);
}

double min_price_average(const CostSchedule& costs, const MarketQuery& q) {
  if (q.k_hat < 0.0) {
    throw std::domain_error("min_price_average requires k_hat >= 0");
  }
  const double k_star = static_cast<double>(q.k_star);
  const double gap = std::abs(q.k_hat - k_star);
  const double realized_terms =
      (costs.c_q + q.k_hat * costs.c_s + costs.c_p * positive_part(k_star - q.k_hat) -
       costs.c_s * positive_part(q.k_hat - k_star)) /
      k_star;
  const double noise_terms =
      ((costs.c_p - costs.c_s) * std::exp(-q.lambda * gap) / (2.0 * q.lambda) -
       0.5 * costs.c_p * std::exp(-q.lambda * q.k_hat) * (k_star + 1.0 / q.lambda)) /
      k_star;
  return realized_terms + noise_terms;
}

}  // namespace privmarket
