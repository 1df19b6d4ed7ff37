#pragma once

#include "nt/factor.hpp"

namespace nt {

/// S(n, e) = sum_{j=1}^{n-1} j^e mod n as the least non-negative residue.
/// Ground-truth route: term-by-term modpow. Requires n >= 2, e >= 1.
Nat power_sum_naive(const Nat& n, const Nat& e);

/// Same value via prime-power blocks and CRT. For each p^r || n,
///   S(n, e) = (n/p^r mod p^r) * S(p^r, e)  (mod p^r);
/// for r = 1 the block has a closed form (S(p, e) = p-1 when (p-1) | e,
/// else 0, the e-th powers of the units summing over a subgroup), and for
/// r >= 2 the p^r - 1 terms are summed directly. Requires e >= 1.
Nat power_sum_fast(const Factorization& f, const Nat& e);

}  // namespace nt
