#pragma once

#include <utility>
#include <vector>

#include "dynred/arith.hpp"

namespace dynred {

struct FactorOptions {
    unsigned long trial_bound = 1000000;
    // Cofactors at most this many bits are certified prime by Miller-Rabin.
    unsigned max_certified_bits = 64;
};

/// |n| = prod p^e * cofactor. cofactor is 1 when the factorization is
/// complete; otherwise it is a number > 1 that could not be split or
/// certified within the options.
struct Factorization {
    std::vector<std::pair<BigInt, unsigned>> primes;
    BigInt cofactor = 1;

    bool complete() const { return cofactor == 1; }
};

// Throws UsageError for n = 0.
Factorization factor_integer(const BigInt& n, const FactorOptions& opts = {});

} // namespace dynred
