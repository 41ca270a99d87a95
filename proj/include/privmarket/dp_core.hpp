#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "privmarket/rng.hpp"

namespace privmarket {

/// One supplier's entry in the statistical database.
struct SupplierRecord {
  std::string supplier_id;
  std::uint64_t stock = 0;
};

/// Immutable collection of supplier stock records. Built once, then queried;
/// all queries are pure given an explicit random substream, so concurrent use
/// needs no synchronization.
class StatDatabase {
 public:
  StatDatabase() = default;

  /// Validates that supplier ids are non-empty and unique.
  explicit StatDatabase(std::vector<SupplierRecord> records);

  /// Reads rows from a CSV stream with the exact header `supplier_id,stock`.
  /// Throws std::runtime_error with a line reference on malformed input.
  static StatDatabase from_csv(std::istream& in);
  static StatDatabase from_csv_file(const std::string& path);

  const std::vector<SupplierRecord>& records() const { return records_; }

  /// Largest single-supplier stock; 0 for an empty database. Used as the
  /// default query sensitivity: one supplier joining or leaving moves the
  /// total count by at most its own stock.
  std::uint64_t max_stock() const;

 private:
  std::vector<SupplierRecord> records_;
};

/// Laplace noise scale parameter. Smaller lambda means wider noise and
/// stronger privacy.
struct PrivacyLevel {
  double lambda;

  /// Rejects zero, negative, and non-finite values.
  explicit PrivacyLevel(double lambda_in);
};

/// Exact total stock across all suppliers: the count before obfuscation.
std::uint64_t true_count(const StatDatabase& db);

/// Inverse CDF of Laplace(mu, 1/lambda) parameterized on the centered
/// quantile u in (-1/2, 1/2); u = 0 maps to mu. Throws std::domain_error at
/// or beyond the endpoints, where the quantile is unbounded.
double laplace_inverse_cdf(double u, double mu, double lambda);

/// One Laplace(mu, 1/lambda) variate from a single uniform draw.
double sample_laplace(Substream& rng, double mu, double lambda);

/// Noisy response to the counting query: true count plus Laplace(0, 1/lambda)
/// noise. Real-valued and possibly negative; never rounded or clamped.
double noisy_count(const StatDatabase& db, const PrivacyLevel& privacy,
                   Substream& rng);

/// Differential-privacy budget of one noisy count: epsilon = lambda *
/// sensitivity. Rejects non-positive sensitivity.
double epsilon_of(const PrivacyLevel& privacy, double sensitivity);

}  // namespace privmarket
