#pragma once

#include <cstdint>
#include <string>

#include "privmarket/pricing.hpp"

namespace privmarket {

/// Agreed prices for one trade: the option fee p_opt and the end unit price
/// p_s customers pay per delivered item.
struct PriceSchedule {
  double p_opt;
  double p_s;

  PriceSchedule(double p_opt_in, double p_s_in);
};

/// Everything about a trade that is fixed before delivery.
struct TradeTerms {
  std::int64_t k_star;
  CostSchedule costs;
  PriceSchedule prices;

  TradeTerms(std::int64_t k_star_in, CostSchedule costs_in,
             PriceSchedule prices_in);
};

/// A completed trade: the terms plus the realized supplier delivery k.
/// The broker buys all k items, produces any shortfall, and the option is
/// always exercised (customers take all k_star items).
struct TradeOutcome {
  std::int64_t k;
  TradeTerms terms;

  TradeOutcome(std::int64_t k_in, TradeTerms terms_in);
};

/// Itemized cash flows of one settled trade. Conservation holds bit-exactly:
/// broker_profit = customer_outlay - supplier_revenue - query_fee
///                 - production_cost.
struct FlowStatement {
  double customer_outlay;
  double supplier_revenue;
  double query_fee;
  double production_cost;
  double broker_profit;
};

/// Realized broker profit:
///   p_opt + k* p_s - c_q - k c_s - (k* - k)^+ c_p.
/// May be negative.
double broker_profit(const TradeOutcome& t);

/// Full itemization of the trade's cash flows. settle(t).broker_profit equals
/// broker_profit(t) bit-exactly.
FlowStatement settle(const TradeOutcome& t);

/// CSV header and row for a settled trade:
/// `k,k_star,customer_outlay,supplier_revenue,query_fee,production_cost,broker_profit`.
std::string flow_csv_header();
std::string flow_csv_row(const TradeOutcome& t, const FlowStatement& f);

}  // namespace privmarket
