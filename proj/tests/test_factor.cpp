#include "doctest.h"

#include "dynred/factor.hpp"

using namespace dynred;

namespace {
BigInt product(const Factorization& f) {
    BigInt n = f.cofactor;
    for (const auto& [p, e] : f.primes)
        for (int k = 0; k < e; ++k) n *= p;
    return n;
}
unsigned exponent_of(const Factorization& f, long p) {
    for (const auto& [q, e] : f.primes)
        if (q == p) return e;
    return 0;
}
} // namespace

TEST_CASE("small integers factor completely") {
    for (long n = 1; n < 3000; ++n) {
        const auto f = factor_integer(BigInt(n));
        CHECK(f.complete());
        CHECK(product(f) == n);
        for (const auto& [p, e] : f.primes) CHECK(is_prime(p));
    }
    const auto f = factor_integer(BigInt(-360));
    CHECK(f.primes.size() == 3);
    CHECK(exponent_of(f, 2) == 3);
    CHECK(exponent_of(f, 5) == 1);
}

TEST_CASE("large prime cofactors are certified") {
    const BigInt big("1000000007");
    const auto f = factor_integer(BigInt(12) * big * big);
    CHECK(f.complete());
    CHECK(f.primes.back() == std::pair<BigInt, unsigned>(big, 2));
}

TEST_CASE("composites beyond trial division stay unfactored") {
    FactorOptions o;
    o.trial_bound = 1000;
    const BigInt n = BigInt(1000003) * BigInt(1000033);
    const auto f = factor_integer(BigInt(8) * n, o);
    CHECK_FALSE(f.complete());
    CHECK(f.cofactor == n);
    CHECK(exponent_of(f, 2) == 3);
    CHECK_THROWS(factor_integer(BigInt(0)));
}
