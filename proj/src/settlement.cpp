#include "privmarket/settlement.hpp"

#include <cmath>
#include <stdexcept>

#include "privmarket/numfmt.hpp"

namespace privmarket {

namespace {

struct Flows {
  double outlay;
  double supplier;
  double fee;
  double production;
};

Flows component_flows(const TradeOutcome& t) {
  const auto& terms = t.terms;
  const double k = static_cast<double>(t.k);
  const double k_star = static_cast<double>(terms.k_star);
  const double shortfall =
      static_cast<double>(terms.k_star > t.k ? terms.k_star - t.k : 0);
  return {terms.prices.p_opt + k_star * terms.prices.p_s,
          k * terms.costs.c_s, terms.costs.c_q, shortfall * terms.costs.c_p};
}

// Single definition of the profit expression so that broker_profit and settle
// agree bit-for-bit.
double profit_of(const Flows& f) {
  return ((f.outlay - f.supplier) - f.fee) - f.production;
}

}  // namespace

PriceSchedule::PriceSchedule(double p_opt_in, double p_s_in)
    : p_opt(p_opt_in), p_s(p_s_in) {
  if (!(std::isfinite(p_opt) && p_opt >= 0.0)) {
    throw std::invalid_argument("p_opt must be finite and non-negative");
  }
  if (!(std::isfinite(p_s) && p_s >= 0.0)) {
    throw std::invalid_argument("p_s must be finite and non-negative");
  }
}

TradeTerms::TradeTerms(std::int64_t k_star_in, CostSchedule costs_in,
                       PriceSchedule prices_in)
    : k_star(k_star_in), costs(costs_in), prices(prices_in) {
  if (k_star < 1) {
    throw std::invalid_argument("k_star must be >= 1");
  }
}

TradeOutcome::TradeOutcome(std::int64_t k_in, TradeTerms terms_in)
    : k(k_in), terms(terms_in) {
  if (k < 0) {
    throw std::invalid_argument("k must be >= 0");
  }
}

double broker_profit(const TradeOutcome& t) {
  return profit_of(component_flows(t));
}

FlowStatement settle(const TradeOutcome& t) {
  const Flows f = component_flows(t);
  return {f.outlay, f.supplier, f.fee, f.production, profit_of(f)};
}

std::string flow_csv_header() {
  return "k,k_star,customer_outlay,supplier_revenue,query_fee,production_cost,"
         "broker_profit";
}

std::string flow_csv_row(const TradeOutcome& t, const FlowStatement& f) {
  std::string row = std::to_string(t.k);
  row += ',';
  row += std::to_string(t.terms.k_star);
  for (double v : {f.customer_outlay, f.supplier_revenue, f.query_fee,
                   f.production_cost, f.broker_profit}) {
    row += ',';
    row += format_full(v);
  }
  return row;
}

}  // namespace privmarket
