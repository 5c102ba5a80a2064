#pragma once

#include "primat/matrix.hpp"

#include <vector>

namespace primat {

enum class Certainty { definite, probable };

struct PrimalityResult {
    bool is_prime = false;
    Certainty certainty = Certainty::definite;
};

// Miller-Rabin primality of |n|. Deterministic (fixed witness set, first 12
// primes) for |n| below 3317044064679887385961981 — in particular for every
// 64-bit value; above that bound runs 40 fixed prime bases and reports
// certainty == probable on the prime answer.
PrimalityResult classify_prime(const Int& n);

bool is_rational_prime(const Int& n);

// Prime factorization of n >= 1 with multiplicity, nondecreasing order.
// Trial division up to 10^5, then Pollard rho with Miller-Rabin splits.
// Factors beyond the deterministic range may be probable primes.
std::vector<Int> factor_integer(const Int& n);

}  // namespace primat
