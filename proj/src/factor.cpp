#include "dynred/factor.hpp"

#include "dynred/errors.hpp"

namespace dynred {

Factorization factor_integer(const BigInt& n, const FactorOptions& opts) {
    if (n == 0) throw UsageError("cannot factor zero");
    Factorization f;
    BigInt rest = abs(n);
    auto divide_out = [&](unsigned long q) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
            ++e;
        }
        if (e) f.primes.emplace_back(BigInt(q), e);
    };
    divide_out(2);
    unsigned long q = 3;
    for (; q <= opts.trial_bound && rest > 1; q += 2) {
        if (BigInt(q) * q > rest) break;
        divide_out(q);
    }
    if (rest == 1) return f;
    // No factor below q remains, so rest < q^2 means rest is prime.
    const bool below_square = BigInt(q) * q > rest;
    if (below_square) {
        f.primes.emplace_back(rest, 1);
        return f;
    }
    // rest = r^k with r a certified prime (k = 1 included)
    const std::size_t bits = mpz_sizeinbase(rest.get_mpz_t(), 2);
    for (unsigned long k = bits; k >= 1; --k) {
        BigInt r;
        if (!mpz_root(r.get_mpz_t(), rest.get_mpz_t(), k)) continue;
        if (mpz_sizeinbase(r.get_mpz_t(), 2) <= opts.max_certified_bits && is_prime(r)) {
            f.primes.emplace_back(r, static_cast<unsigned>(k));
            return f;
        }
    }
    f.cofactor = rest;
    return f;
}

} // namespace dynred
