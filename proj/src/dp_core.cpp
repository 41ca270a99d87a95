#include "privmarket/dp_core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace privmarket {

namespace {

void fail_csv(std::size_t line_no, const std::string& what) {
  throw std::runtime_error("suppliers csv, line " + std::to_string(line_no) +
                           ": " + what);
}

}  // namespace

StatDatabase::StatDatabase(std::vector<SupplierRecord> records)
    : records_(std::move(records)) {
  std::unordered_set<std::string> seen;
  seen.reserve(records_.size());
  for (const auto& r : records_) {
    if (r.supplier_id.empty()) {
      throw std::invalid_argument("supplier_id must be non-empty");
    }
    if (!seen.insert(r.supplier_id).second) {
      throw std::invalid_argument("duplicate supplier_id: " + r.supplier_id);
    }
  }
}

StatDatabase StatDatabase::from_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;

  if (!std::getline(in, line)) {
    throw std::runtime_error("suppliers csv: empty input");
  }
  ++line_no;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "supplier_id,stock") {
    fail_csv(line_no, "expected header 'supplier_id,stock', got '" + line + "'");
  }

  std::vector<SupplierRecord> records;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto comma = line.find(',');
    if (comma == std::string::npos) fail_csv(line_no, "missing comma");
    std::string id = line.substr(0, comma);
    std::string stock_text = line.substr(comma + 1);
    if (id.empty()) fail_csv(line_no, "empty supplier_id");
    if (stock_text.empty() ||
        stock_text.find_first_not_of("0123456789") != std::string::npos) {
      fail_csv(line_no, "stock must be a base-10 non-negative integer, got '" +
                            stock_text + "'");
    }
    std::uint64_t stock = 0;
    try {
      stock = std::stoull(stock_text);
    } catch (const std::out_of_range&) {
      fail_csv(line_no, "stock out of range: '" + stock_text + "'");
    }
    records.push_back({std::move(id), stock});
  }

  try {
    return StatDatabase(std::move(records));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("suppliers csv: ") + e.what());
  }
}

StatDatabase StatDatabase::from_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::ios_base::failure("cannot open suppliers csv: " + path);
  }
  return from_csv(in);
}

std::uint64_t StatDatabase::max_stock() const {
  std::uint64_t best = 0;
  for (const auto& r : records_) best = std::max(best, r.stock);
  return best;
}

PrivacyLevel::PrivacyLevel(double lambda_in) : lambda(lambda_in) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    throw std::invalid_argument("privacy lambda must be finite and > 0");
  }
}

std::uint64_t true_count(const StatDatabase& db) {
  std::uint64_t sum = 0;
  for (const auto& r : db.records()) sum += r.stock;
  return sum;
}

double laplace_inverse_cdf(double u, double mu, double lambda) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) {
    throw std::invalid_argument("lambda must be finite and > 0");
  }
  if (!(u > -0.5 && u < 0.5)) {
    throw std::domain_error("quantile u must lie in the open interval (-1/2, 1/2)");
  }
  const double sign = u < 0.0 ? -1.0 : (u > 0.0 ? 1.0 : 0.0);
  return mu - sign * std::log1p(-2.0 * std::abs(u)) / lambda;
}

double sample_laplace(Substream& rng, double mu, double lambda) {
  return laplace_inverse_cdf(rng.next_open_symmetric(), mu, lambda);
}

double noisy_count(const StatDatabase& db, const PrivacyLevel& privacy,
                   Substream& rng) {
  const double k = static_cast<double>(true_count(db));
  return k + sample_laplace(rng, 0.0, privacy.lambda);
}

double epsilon_of(const PrivacyLevel& privacy, double sensitivity) {
  if (!(std::isfinite(sensitivity) && sensitivity > 0.0)) {
    throw std::invalid_argument("sensitivity must be finite and > 0");
  }
  return privacy.lambda * sensitivity;
}

}  // namespace privmarket
