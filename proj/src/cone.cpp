#include "dynred/cone.hpp"

#include <algorithm>
#include <set>

#include "dynred/arith.hpp"
#include "dynred/errors.hpp"

namespace dynred {

namespace {

// sum_j coeffs[j] * x_j  (> 0 if strict, >= 0 otherwise)
struct Constraint {
    std::vector<BigInt> coeffs;
    bool strict = false;

    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; });
    }

    void normalize() {
        BigInt g = 0;
        for (const auto& c : coeffs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g > 1)
            for (auto& c : coeffs) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }

    friend bool operator<(const Constraint& a, const Constraint& b) {
        if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
        return a.strict < b.strict;
    }
};

using System = std::vector<Constraint>;

// Drops duplicate rows and weak rows implied by an identical strict row.
System canonical(System sys) {
    for (auto& c : sys) c.normalize();
    std::set<Constraint> seen(sys.begin(), sys.end());
    System out;
    for (const auto& c : seen) {
        if (!c.strict && seen.count(Constraint{c.coeffs, true})) continue;
        if (!c.strict && c.is_zero()) continue;
        out.push_back(c);
    }
    return out;
}

System eliminate(const System& sys, std::size_t var) {
    System next, pos, neg;
    for (const auto& c : sys) {
        int s = sgn(c.coeffs[var]);
        if (s == 0)
            next.push_back(c);
        else
            (s > 0 ? pos : neg).push_back(c);
    }
    for (const auto& a : pos)
        for (const auto& b : neg) {
            Constraint comb;
            comb.strict = a.strict || b.strict;
            comb.coeffs.resize(a.coeffs.size());
            const BigInt fa = -b.coeffs[var];
            const BigInt fb = a.coeffs[var];
            for (std::size_t j = 0; j < a.coeffs.size(); ++j) comb.coeffs[j] = fa * a.coeffs[j] + fb * b.coeffs[j];
            comb.coeffs[var] = 0;
            next.push_back(std::move(comb));
        }
    return canonical(std::move(next));
}

} // namespace

std::optional<IntVector> cone_feasible(std::span<const IntVector> strict_rows, std::span<const IntVector> weak_rows) {
    std::size_t m = 0;
    for (const auto* rows : {&strict_rows, &weak_rows})
        for (const auto& r : *rows) {
            if (m == 0) m = r.size();
            if (r.size() != m) throw UsageError("cone rows have inconsistent lengths");
        }
    if (m == 0) {
        if (strict_rows.empty() && weak_rows.empty()) return std::nullopt;
        throw UsageError("cone rows must be nonempty vectors");
    }
    if (m > kMaxConeDimension)
        throw BudgetError("cone feasibility supports vectors of length <= " + std::to_string(kMaxConeDimension));

    const std::size_t k = m - 1;  // free variables after substitution
    System base;
    auto add = [&](const IntVector& row, bool strict) {
        Constraint c;
        c.strict = strict;
        c.coeffs.resize(k);
        for (std::size_t j = 0; j < k; ++j) c.coeffs[j] = BigInt(static_cast<long>(row[j] - row[k]));
        base.push_back(std::move(c));
    };
    for (const auto& r : strict_rows) add(r, true);
    for (const auto& r : weak_rows) add(r, false);

    // levels[v] has variables 0..v-1 only.
    std::vector<System> levels(k + 1);
    levels[k] = canonical(std::move(base));
    for (std::size_t v = k; v > 0; --v) levels[v - 1] = eliminate(levels[v], v - 1);
    for (const auto& c : levels[0])
        if (c.strict) return std::nullopt;  // reduced to 0 > 0

    std::vector<BigRational> x(k, BigRational(0));
    for (std::size_t v = 0; v < k; ++v) {
        std::optional<BigRational> lo, hi;
        bool lo_strict = false, hi_strict = false;
        for (const auto& c : levels[v + 1]) {
            if (c.coeffs[v] == 0) continue;
            BigRational rest = 0;
            for (std::size_t j = 0; j < v; ++j) rest += BigRational(c.coeffs[j]) * x[j];
            BigRational bound = -rest / BigRational(c.coeffs[v]);
            if (c.coeffs[v] > 0) {
                if (!lo || bound > *lo) {
                    lo = bound;
                    lo_strict = c.strict;
                } else if (bound == *lo) {
                    lo_strict = lo_strict || c.strict;
                }
            } else {
                if (!hi || bound < *hi) {
                    hi = bound;
                    hi_strict = c.strict;
                } else if (bound == *hi) {
                    hi_strict = hi_strict || c.strict;
                }
            }
        }
        if (lo && hi)
            x[v] = (*lo == *hi) ? *lo : BigRational((*lo + *hi) / 2);
        else if (lo)
            x[v] = lo_strict ? BigRational(*lo + 1) : *lo;
        else if (hi)
            x[v] = hi_strict ? BigRational(*hi - 1) : *hi;
    }

    BigInt den = 1;
    for (const auto& xi : x) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), xi.get_den_mpz_t());
    std::vector<BigInt> r(m);
    BigInt total = 0;
    for (std::size_t j = 0; j < k; ++j) {
        r[j] = x[j].get_num() * (den / x[j].get_den());
        total += r[j];
    }
    r[k] = -total;
    BigInt g = 0;
    for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    IntVector out(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
        BigInt v = g > 1 ? BigInt(r[j] / g) : r[j];
        if (!v.fits_slong_p()) throw BudgetError("cone witness exceeds 64-bit range");
        out[j] = v.get_si();
    }
    return out;
}

std::optional<IntVector> strict_cone_feasible(std::span<const IntVector> rows) { return cone_feasible(rows, {}); }

} // namespace dynred
