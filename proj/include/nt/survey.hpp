#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nt/arith.hpp"

namespace nt {

/// Smallest-prime-factor sieve over [2, limit]; O(log n) factorizations.
class SpfSieve {
 public:
  explicit SpfSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  std::uint32_t spf(std::uint64_t n) const { return spf_[n]; }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_[n] == n; }
  std::vector<std::pair<std::uint64_t, unsigned>> factor(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Dense lambda(n) for n in [2, limit], plus prime flags. lambda(n) < n, so
/// machine-width entries suffice for any buildable limit.
struct LambdaTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> lambda;  // index 0 and 1 unused
  std::vector<bool> prime;

  std::uint64_t operator[](std::uint64_t n) const { return lambda[n]; }
  bool is_composite(std::uint64_t n) const { return n >= 2 && !prime[n]; }
};

inline constexpr std::uint64_t kLambdaTableLimit = 100'000'000;

/// SPF sieve, then lambda(p^e * m) = lcm(lambda(p^e), lambda(m)) walking it.
/// Throws std::length_error beyond kLambdaTableLimit.
LambdaTable build_lambda_table(std::uint64_t limit);

/// Counting-function table C_k(X) = #{composite n <= X : lambda(n) | k(n-1)}
/// with exact pairwise ratios and the C_5 > C_3 > C_7 > C_p ordering verdict.
struct SurveyReport {
  std::uint64_t limit = 0;
  bool include_primes = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counts;  // (k, C_k), k ascending
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, Rat>> ratios;
  std::optional<bool> ordering_ok;  // set when 3, 5 and 7 are all surveyed
};

/// Counts over fixed-size segments (parallel when threads != 1; the totals
/// are order-independent sums, so results never depend on the schedule).
/// include_primes switches membership to the letter of the definition,
/// admitting primes; n = 1 is never counted.
SurveyReport count_k_carmichael(const LambdaTable& table, std::vector<std::uint64_t> ks,
                                bool include_primes = false, unsigned threads = 0,
                                std::uint64_t segment_size = std::uint64_t{1} << 20);

/// Exact C_k(X)/C_t(X) — a finite-X proxy for the relative density, no limit
/// claimed. Throws std::domain_error when C_t(X) = 0.
Rat density_report(const LambdaTable& table, std::uint64_t k, std::uint64_t t);

/// "k,limit,count" rows, LF line endings.
std::string to_csv(const SurveyReport& report);

/// Key-sorted JSON object; byte-identical across runs and thread counts.
std::string to_json(const SurveyReport& report);

}  // namespace nt
