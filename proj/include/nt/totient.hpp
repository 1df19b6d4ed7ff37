#pragma once

#include "nt/factor.hpp"

namespace nt {

struct TotientPair {
  Nat phi;
  Nat lambda;  // always divides phi
};

/// Euler's totient from a factorization: prod p^(e-1) * (p-1).
Nat euler_phi(const Factorization& f);

/// Carmichael's function: lambda(p^e) = p^(e-1)(p-1) for odd p;
/// lambda(2) = 1, lambda(4) = 2, lambda(2^e) = 2^(e-2) for e >= 3;
/// lcm over the prime-power blocks.
Nat carmichael_lambda(const Factorization& f);

TotientPair totients(const Factorization& f);

}  // namespace nt
