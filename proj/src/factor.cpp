#include "nt/factor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <numeric>

namespace nt {

namespace detail {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = std::countr_zero(d);
  d >>= s;
  // exhaustive witness set below 2^64
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull,
                          31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

namespace {

// primes below 10^6, built once
const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= limit; j += i)
        composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_mpz(const Nat& n, unsigned rounds) {
  // deterministic per n: bases come from a PRNG seeded from n itself
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(Nat(n ^ Nat("12297829382473034410")));
  Nat n1 = n - 1;
  auto s = mpz_scan1(n1.get_mpz_t(), 0);
  Nat d = n1 >> s;
  for (unsigned round = 0; round < rounds; ++round) {
    Nat a = rng.get_z_range(n - 3) + 2;  // uniform in [2, n-2]
    Nat x = modpow(a, d, n);
    if (x == 1 || x == n1) continue;
    bool witness = true;
    for (decltype(s) r = 1; r < s; ++r) {
      x = x * x % n;
      if (x == n1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::uint64_t rho_brent_u64(std::uint64_t n, std::uint64_t seed) {
  // Brent's cycle finding with batched gcd
  for (std::uint64_t c = seed;; ++c) {
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 2;
    const unsigned batch = 128;
    for (std::uint64_t r = 1; d == 1; r <<= 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (std::uint64_t k = 0; k < r && d == 1; k += batch) {
        ys = y;
        std::uint64_t count = std::min<std::uint64_t>(batch, r - k);
        for (std::uint64_t i = 0; i < count; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
    }
    if (d == n) {
      // backtrack one step at a time
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

// returns a nontrivial factor of odd composite n, or 0 when the deadline hits
Nat rho_brent_mpz(const Nat& n, std::chrono::steady_clock::time_point deadline) {
  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(Nat(n ^ Nat("7640891576956012808")));
  for (;;) {
    Nat c = rng.get_z_range(n - 1) + 1;
    Nat x = 2, y = 2, ys = 2, d = 1, q = 1;
    const unsigned batch = 128;
    for (unsigned long r = 1; d == 1; r <<= 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && d == 1; k += batch) {
        if (std::chrono::steady_clock::now() > deadline) return 0;
        ys = y;
        unsigned long count = std::min<unsigned long>(batch, r - k);
        for (unsigned long i = 0; i < count; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        d = gcd(q, n);
      }
    }
    if (d == n) {
      do {
        ys = (ys * ys + c) % n;
        d = gcd(abs(x - ys), n);
        if (std::chrono::steady_clock::now() > deadline) return 0;
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

}  // namespace
}  // namespace detail

bool is_probable_prime(const Nat& n) {
  if (detail::fits_u64(n)) return detail::is_prime_u64(detail::to_u64(n));
  if (n < 2) return false;  // large negatives
  if (mpz_even_p(n.get_mpz_t())) return false;
  for (unsigned long p : {3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul,
                          41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul, 71ul, 73ul, 79ul, 83ul,
                          89ul, 97ul})
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  return detail::miller_rabin_mpz(n, 40);
}

void verify(const Factorization& f) {
  if (f.value < 2) throw std::invalid_argument("factorization: value must be >= 2");
  if (f.factors.empty()) throw std::invalid_argument("factorization: no factors");
  Nat product = 1;
  const Nat* previous = nullptr;
  for (const auto& [p, e] : f.factors) {
    if (previous && !(*previous < p))
      throw std::invalid_argument("factorization: primes not strictly increasing");
    previous = &p;
    if (e == 0) throw std::invalid_argument("factorization: zero exponent");
    if (!is_probable_prime(p))
      throw std::invalid_argument("factorization: " + to_decimal(p) + " is not prime");
    Nat power;
    mpz_pow_ui(power.get_mpz_t(), p.get_mpz_t(), e);
    product *= power;
  }
  if (product != f.value)
    throw std::invalid_argument("factorization: product " + to_decimal(product) +
                                " does not equal " + to_decimal(f.value));
}

std::string to_line(const Factorization& f) {
  std::string line = to_decimal(f.value) + " =";
  bool first = true;
  for (const auto& [p, e] : f.factors) {
    line += first ? " " : " * ";
    first = false;
    line += to_decimal(p) + "^" + std::to_string(e);
  }
  return line;
}

const Factorization* FactorCache::lookup(const Nat& n) const {
  auto it = entries_.find(n);
  return it == entries_.end() ? nullptr : &it->second;
}

void FactorCache::insert(Factorization f) {
  verify(f);
  Nat key = f.value;
  entries_.insert_or_assign(std::move(key), std::move(f));
}

FactorCache FactorCache::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cache: cannot open " + path.string());
  FactorCache cache;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return std::runtime_error("cache: " + path.string() + ":" + std::to_string(line_no) +
                                ": " + why);
    };
    auto eq = line.find(" = ");
    if (eq == std::string::npos) throw fail("missing ' = '");
    Factorization f;
    try {
      f.value = parse_natural(line.substr(0, eq));
      std::string rest = line.substr(eq + 3);
      std::size_t pos = 0;
      while (true) {
        auto sep = rest.find(" * ", pos);
        std::string term =
            sep == std::string::npos ? rest.substr(pos) : rest.substr(pos, sep - pos);
        auto caret = term.find('^');
        if (caret == std::string::npos) throw fail("term '" + term + "' lacks '^'");
        Nat prime = parse_natural(term.substr(0, caret));
        unsigned long exponent = std::stoul(term.substr(caret + 1));
        if (exponent == 0 || term.substr(caret + 1) != std::to_string(exponent))
          throw fail("bad exponent in '" + term + "'");
        f.factors.emplace_back(std::move(prime), static_cast<unsigned>(exponent));
        if (sep == std::string::npos) break;
        pos = sep + 3;
      }
      verify(f);
    } catch (const std::runtime_error&) {
      throw;
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    Nat key = f.value;
    cache.entries_.insert_or_assign(std::move(key), std::move(f));
  }
  return cache;
}

void FactorCache::store(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cache: cannot write " + path.string());
  for (const auto& [n, f] : entries_) out << to_line(f) << '\n';
  if (!out.flush()) throw std::runtime_error("cache: write failed for " + path.string());
}

Factorization factor(const Nat& n, FactorCache* cache, std::chrono::milliseconds budget) {
  if (n < 2) throw std::invalid_argument("factor: n must be >= 2");
  if (cache)
    if (const Factorization* hit = cache->lookup(n)) return *hit;

  const auto deadline = std::chrono::steady_clock::now() + budget;
  std::map<Nat, unsigned> found;
  Nat m = n;

  for (std::uint32_t p : detail::small_primes()) {
    if (mpz_cmp_ui(m.get_mpz_t(), 1) == 0) break;
    // once p^2 > m the remainder is prime
    if (detail::fits_u64(m)) {
      std::uint64_t small = detail::to_u64(m);
      if (static_cast<std::uint64_t>(p) * p > small) break;
    }
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(m.get_mpz_t(), p));
      found[Nat(static_cast<unsigned long>(p))] += e;
    }
  }

  std::vector<Nat> pending;
  if (m > 1) pending.push_back(m);

  auto give_up = [&](const std::vector<Nat>& left) {
    PartialFactorization partial;
    for (const auto& [p, e] : found) partial.found.emplace_back(p, e);
    partial.remaining = 1;
    for (const Nat& c : left) partial.remaining *= c;
    throw GaveUp("factor: budget exhausted on " + to_decimal(n) +
                     " with composite cofactor " + to_decimal(partial.remaining) +
                     "; supply a cache entry",
                 std::move(partial));
  };

  while (!pending.empty()) {
    Nat c = std::move(pending.back());
    pending.pop_back();
    if (is_probable_prime(c)) {
      found[c] += 1;
      continue;
    }
    // rho makes no progress on perfect powers; peel them here
    if (mpz_perfect_power_p(c.get_mpz_t())) {
      for (unsigned long k = 2;; ++k) {
        Nat root, rem;
        mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), k);
        if (root < 2) break;
        if (rem == 0) {
          for (unsigned long i = 0; i < k; ++i) pending.push_back(root);
          c = 0;
          break;
        }
      }
      if (c == 0) continue;
    }
    if (std::chrono::steady_clock::now() > deadline) {
      pending.push_back(std::move(c));
      give_up(pending);
    }
    Nat divisor;
    if (detail::fits_u64(c)) {
      std::uint64_t v = detail::to_u64(c);
      divisor = Nat(static_cast<unsigned long>(detail::rho_brent_u64(v, v % 97 + 1)));
    } else {
      divisor = detail::rho_brent_mpz(c, deadline);
      if (divisor == 0) {
        pending.push_back(std::move(c));
        give_up(pending);
      }
    }
    pending.push_back(c / divisor);
    pending.push_back(std::move(divisor));
  }

  Factorization result;
  result.value = n;
  result.factors.assign(found.begin(), found.end());
  verify(result);
  if (cache) cache->insert(result);
  return result;
}

}  // namespace nt
