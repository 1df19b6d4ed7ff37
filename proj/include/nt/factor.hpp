#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nt/arith.hpp"

namespace nt {

/// A verified prime factorization: value >= 2, primes strictly increasing,
/// product of prime^exponent equal to value.
struct Factorization {
  Nat value;
  std::vector<std::pair<Nat, unsigned>> factors;

  bool is_composite() const {
    return factors.size() > 1 || (factors.size() == 1 && factors[0].second > 1);
  }
  bool is_square_free() const {
    for (const auto& [p, e] : factors)
      if (e > 1) return false;
    return true;
  }
};

/// Checks every Factorization invariant (value >= 2, ordering, primality of
/// each factor, product equality). Throws std::invalid_argument on failure.
void verify(const Factorization& f);

/// Canonical one-line form: "N = p1^e1 * p2^e2 * ... * pk^ek".
std::string to_line(const Factorization& f);

/// Deterministic and exact below 2^64 (fixed Miller-Rabin base set); above,
/// 40 Miller-Rabin rounds with bases drawn from a PRNG seeded from n.
bool is_probable_prime(const Nat& n);

struct PartialFactorization {
  std::vector<std::pair<Nat, unsigned>> found;
  Nat remaining;  // composite cofactor that did not yield in time
};

/// Thrown when the factoring budget runs out; carries what was found so the
/// caller can supply a cache entry instead.
class GaveUp : public std::runtime_error {
 public:
  GaveUp(const std::string& what, PartialFactorization partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const PartialFactorization& partial() const { return partial_; }

 private:
  PartialFactorization partial_;
};

/// Persistent factor cache. Entries are re-verified on load and on insert, so
/// correctness never depends on whatever tool produced the file.
///
/// File format: UTF-8 text, one entry per line,
///   N = p1^e1 * p2^e2 * ... * pk^ek
/// decimal numbers, single spaces around '=' and '*', primes strictly
/// increasing. Lines starting with '#' are ignored.
class FactorCache {
 public:
  const Factorization* lookup(const Nat& n) const;
  void insert(Factorization f);  // verifies; replaces any existing entry
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Rejects the whole file on any malformed or unverifiable line, naming it.
  static FactorCache load(const std::filesystem::path& path);
  void store(const std::filesystem::path& path) const;

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<Nat, Factorization> entries_;
};

/// Factors n >= 2: cache lookup, trial division to 10^6, then Brent's variant
/// of Pollard rho with Miller-Rabin on cofactors. On success the result is
/// inserted into the cache (when one is given). Throws GaveUp when the budget
/// expires with a composite cofactor left.
Factorization factor(const Nat& n, FactorCache* cache = nullptr,
                     std::chrono::milliseconds budget = std::chrono::milliseconds(30000));

namespace detail {
bool is_prime_u64(std::uint64_t n);
}

}  // namespace nt
