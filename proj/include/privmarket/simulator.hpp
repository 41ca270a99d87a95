#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "privmarket/dp_core.hpp"
#include "privmarket/pricing.hpp"
#include "privmarket/settlement.hpp"

namespace privmarket {

enum class ScenarioModel { posterior, forward };

/// Synthetic supplier population: `count` suppliers with integer stocks drawn
/// uniformly from [lo, hi] (constant stock when lo == hi).
struct StockGenerator {
  std::int64_t count;
  std::uint64_t lo;
  std::uint64_t hi;
};

/// Where the supplier database comes from: a CSV file or a generator.
struct SupplierSpec {
  std::optional<std::string> csv_path;
  std::optional<StockGenerator> generator;
};

/// Full experiment description. `p_s` empty means "auto": price at the
/// average break-even threshold marked up by `delta`. `k_hat` pins the
/// declared count for the posterior model; when absent, one forward draw
/// from the supplier database provides it.
struct Scenario {
  ScenarioModel model = ScenarioModel::posterior;
  std::optional<SupplierSpec> suppliers;
  std::int64_t k_star = 1;
  double lambda = 1.0;
  CostSchedule costs = CostSchedule(0.0, 0.0, 0.0);
  std::optional<double> p_s;
  double delta = 0.01;
  std::int64_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<double> k_hat;
};

/// Scenario validation failure, carrying the offending key.
struct ScenarioError : std::runtime_error {
  std::string key;
  ScenarioError(std::string key_in, const std::string& reason)
      : std::runtime_error("scenario key '" + key_in + "': " + reason),
        key(std::move(key_in)) {}
};

/// Parses a scenario JSON document. Relative supplier CSV paths are resolved
/// against base_dir. Throws ScenarioError naming the key and reason.
Scenario load_scenario(const std::string& json_text,
                       const std::string& base_dir = ".");
Scenario load_scenario_file(const std::string& path);

/// One completed (or flagged) trial. Flagged trials could not be priced
/// (negative declared count with auto pricing); their p_s_used is NaN and
/// flows are zero, and they are excluded from the aggregates.
struct TrialRecord {
  std::int64_t trial_index;
  std::int64_t k;
  double k_hat;
  double p_opt;
  double p_s_used;
  bool flagged;
  FlowStatement flows;
};

struct SummaryStats {
  double mean_profit;
  double stderr_profit;
  double fraction_profitable;
  double mean_production_cost;
  double mean_supplier_revenue;
};

struct ScenarioResult {
  SummaryStats stats;
  std::int64_t trials;
  std::int64_t flagged_trials;
  /// Model-predicted mean profit from the closed-form expectations, available
  /// for the posterior model with k_hat >= 0 and a resolved end price. The
  /// gap against stats.mean_profit measures the unit-delivery discretization.
  std::optional<double> closed_form_mean_profit;
  std::vector<TrialRecord> records;
};

/// Runs the protocol query -> quote -> commitment -> delivery -> settlement.
/// Construction performs all one-off work (database build, posterior declared
/// count, fixed pricing); each trial is then a pure function of
/// (seed, trial_index).
class ScenarioEngine {
 public:
  explicit ScenarioEngine(Scenario s);

  TrialRecord run_trial(std::int64_t trial_index) const;
  ScenarioResult run() const;

  const Scenario& scenario() const { return scenario_; }
  std::optional<double> posterior_k_hat() const { return posterior_k_hat_; }

 private:
  Scenario scenario_;
  std::optional<StatDatabase> db_;
  std::int64_t forward_true_count_ = 0;
  std::optional<double> posterior_k_hat_;
  std::optional<double> posterior_p_opt_;
  std::optional<double> posterior_p_s_;
};

ScenarioResult run_scenario(const Scenario& s);

/// Closed-form pricing table over a (k_hat, lambda) grid: option price,
/// premium, and (when costs are given and k_hat >= 0) the average break-even
/// end price. Rows appear in grid order, k_hat major.
struct SweepRow {
  double k_hat;
  double lambda;
  double option_price;
  double premium;
  std::optional<double> min_price_avg;
  bool flagged;
};

std::vector<SweepRow> sweep(const std::vector<double>& k_hat_grid,
                            const std::vector<double>& lambdas, double c_s,
                            std::int64_t k_star,
                            const std::optional<CostSchedule>& costs);

/// Default grids: k_hat spanning [0, 2 k*] in steps of k*/100, and
/// lambda in {0.05, 0.1, 0.2}.
std::vector<double> default_k_hat_grid(std::int64_t k_star);
std::vector<double> default_sweep_lambdas();

/// CSV emitters. Sweep header is
/// `k_hat,lambda,option_price,premium,min_price_avg`; the last column is
/// omitted entirely when include_min_price is false and left empty on
/// flagged rows. Values are written round-trip exact.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                     bool include_min_price);
void write_trials_csv(std::ostream& out, const std::vector<TrialRecord>& records,
                      std::int64_t k_star);
void write_summary(std::ostream& out, const ScenarioResult& result,
                   int significant_digits = 6);

}  // namespace privmarket
