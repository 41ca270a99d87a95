#pragma once

#include <cstdint>
#include <random>

namespace privmarket {

// Stream domains keep independent consumers of the same master seed from
// overlapping: database generation, the one-off noisy response of a posterior
// scenario, per-trial draws, and oracle sample chunks each get their own tag.
inline constexpr std::uint64_t kDomainQuery = 0;
inline constexpr std::uint64_t kDomainDbGen = 1;
inline constexpr std::uint64_t kDomainKhatInit = 2;
inline constexpr std::uint64_t kDomainTrial = 3;
inline constexpr std::uint64_t kDomainOracle = 4;

/// Deterministic random substream derived from (master seed, domain, index).
///
/// Every draw is a pure function of the three construction values, so trials
/// and sample chunks can run in any order (or in parallel) and still
/// reproduce bit-identical results. Doubles are built from the top 53 bits of
/// the engine output rather than std::uniform_real_distribution, which the
/// standard leaves implementation-defined.
class Substream {
 public:
  Substream(std::uint64_t master_seed, std::uint64_t domain, std::uint64_t index)
      : engine_(make_engine(master_seed, domain, index)) {}

  Substream(std::uint64_t master_seed, std::uint64_t index)
      : Substream(master_seed, kDomainQuery, index) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53-bit resolution.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in the open interval (-1/2, 1/2).
  double next_open_symmetric() {
    double v = next_unit();
    while (v == 0.0) {  // excludes the closed endpoint -1/2
      v = next_unit();
    }
    return v - 0.5;
  }

 private:
  static std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t domain,
                                     std::uint64_t index) {
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(domain), static_cast<std::uint32_t>(domain >> 32),
        static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
  }

  std::mt19937_64 engine_;
};

}  // namespace privmarket
