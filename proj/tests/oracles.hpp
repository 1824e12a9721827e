#pragma once
// Slow, independent reference implementations used by the tests. They share
// only the Presentation type and rational conjugation with the library.

#include <functional>
#include <string>
#include <vector>

#include "dynred/corpus.hpp"
#include "dynred/minimality.hpp"
#include "dynred/resultant.hpp"
#include "dynred/semistability.hpp"

namespace oracle {

using namespace dynred;

// Presentation from sparse terms, coefficients as strings.
inline Presentation forms(unsigned n, unsigned d,
                          const std::vector<std::vector<std::pair<std::string, Exponents>>>& fs) {
    std::vector<std::vector<Term>> terms;
    for (const auto& f : fs) {
        terms.emplace_back();
        for (const auto& [c, e] : f) terms.back().emplace_back(parse_rational(c), e);
    }
    return presentation_from_terms(n, d, terms);
}

inline std::int64_t ord_R(const Presentation& P, const PrimeInt& p) {
    return valuation_report(P, p).ord_R_phi.value();
}

// (a0 b2 - a2 b0)^2 - (a0 b1 - a1 b0)(a1 b2 - a2 b1) for binary quadratics.
inline BigRational quadratic_resultant(const Presentation& P) {
    const auto a = P.form(0);
    const auto b = P.form(1);
    const BigRational u = a[0] * b[2] - a[2] * b[0];
    return u * u - (a[0] * b[1] - a[1] * b[0]) * (a[1] * b[2] - a[2] * b[1]);
}

// Integer r, Sum r = 0, |r_i| <= bound, with <row, r> >= 1 on strict rows and
// >= 0 on weak rows. Exhaustive.
inline std::optional<IntVector> grid_cone(const std::vector<IntVector>& strict, const std::vector<IntVector>& weak,
                                          std::size_t dim, std::int64_t bound) {
    IntVector r(dim, -bound);
    while (true) {
        std::int64_t last = 0;
        for (std::size_t i = 0; i + 1 < dim; ++i) last -= r[i];
        if (last >= -bound && last <= bound) {
            r[dim - 1] = last;
            auto dot = [&](const IntVector& row) {
                std::int64_t s = 0;
                for (std::size_t i = 0; i < dim; ++i) s += row[i] * r[i];
                return s;
            };
            bool ok = true;
            for (const auto& row : strict) ok = ok && dot(row) >= 1;
            for (const auto& row : weak) ok = ok && dot(row) >= 0;
            if (ok) return r;
        }
        std::size_t i = 0;
        for (; i + 1 < dim; ++i) {
            if (++r[i] <= bound) break;
            r[i] = -bound;
        }
        if (i + 1 == dim) return std::nullopt;
    }
}

// w = e - unit_i for coordinate k of an (n, d) presentation.
inline IntVector weight_of(const Presentation& P, std::size_t k) {
    const std::size_t D = P.form_size();
    const std::size_t i = k / D;
    const Exponents& e = P.monomials().exponents(k % D);
    IntVector w(e.begin(), e.end());
    w[i] -= 1;
    return w;
}

// Integer presentation with coefficients reduced into [0, p).
inline Presentation reduce_lift(const Presentation& P, std::uint64_t p) {
    std::vector<BigRational> c;
    const PrimeInt q(p);
    for (const auto& x : P.coeffs()) c.emplace_back(static_cast<unsigned long>(reduce_mod_p(x, q).residue()));
    bool zero = true;
    for (const auto& x : c) zero = zero && x == 0;
    if (zero) throw DomainError("reduces to zero");
    return Presentation(P.dim(), P.degree(), std::move(c));
}

// Calls fn(g) for every invertible (n+1)x(n+1) matrix over F_p, as an
// integer matrix with entries in [0, p).
inline void for_each_gl(unsigned n, std::uint64_t p, const std::function<bool(const RationalMatrix&)>& fn) {
    const std::size_t m = n + 1, cells = m * m;
    std::vector<std::uint64_t> v(cells, 0);
    while (true) {
        RationalMatrix g(m, m);
        for (std::size_t k = 0; k < cells; ++k) g(k / m, k % m) = BigRational(static_cast<unsigned long>(v[k]));
        if (ord_p(det(g), PrimeInt(p)) == Valuation(0))
            if (!fn(g)) return;
        std::size_t k = 0;
        for (; k < cells; ++k) {
            if (++v[k] < p) break;
            v[k] = 0;
        }
        if (k == cells) return;
    }
}

// Instability of the reduction of the normalized integral presentation P at
// p: some g in GL_{n+1}(F_p) and some integer r (Sum r = 0, |r_i| <= 4d^2,
// no ordering imposed) give every nonzero coordinate of g.x weight >= 1.
inline bool unstable(const Presentation& P, std::uint64_t p) {
    const Presentation x = reduce_lift(normalize_at(P, PrimeInt(p)).base(), p);
    const std::int64_t bound = P.dim() == 1 ? 1 : 4 * P.degree() * P.degree();
    bool found = false;
    for_each_gl(P.dim(), p, [&](const RationalMatrix& g) {
        const Presentation y = reduce_lift(conjugate(x, g), p);
        std::vector<IntVector> rows;
        for (std::size_t k = 0; k < y.coeffs().size(); ++k)
            if (y.coeffs()[k] != 0) rows.push_back(weight_of(y, k));
        found = grid_cone(rows, {}, P.nvars(), bound).has_value();
        return !found;
    });
    return found;
}

// Re-checks a witness by conjugating the rational lift.
inline bool witness_holds(const Presentation& P, const PrimeInt& p, const OnePSWitness& w) {
    if (w.field_degree != 1) return false;
    const std::uint64_t pv = p.as_u64();
    const Presentation x = reduce_lift(normalize_at(P, p).base(), pv);
    const std::size_t m = P.nvars();
    RationalMatrix g(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) g(i, j) = BigRational(static_cast<unsigned long>(w.flag_matrix(i, j)));
    if (ord_p(det(g), p) != Valuation(0)) return false;
    std::int64_t sum = 0;
    bool nonzero = false;
    for (auto v : w.r) {
        sum += v;
        nonzero = nonzero || v != 0;
    }
    if (sum != 0 || !nonzero) return false;
    const Presentation y = reduce_lift(conjugate(x, g), pv);
    for (std::size_t k = 0; k < y.coeffs().size(); ++k) {
        if (y.coeffs()[k] == 0) continue;
        const IntVector wt = weight_of(y, k);
        std::int64_t s = 0;
        for (std::size_t i = 0; i < m; ++i) s += wt[i] * w.r[i];
        if (s < 1) return false;
    }
    return true;
}

// Smallest normalized ord_p over conjugates by [[p^a, b], [0, p^c]],
// a, c <= bound, 0 <= b < p^a. Up to scalars and GL_2(Z_(p)) on the right
// these are all of GL_2(Q) with exponents in range.
inline std::int64_t hermite_best_ord(const Presentation& P, const PrimeInt& p, unsigned bound) {
    std::int64_t best = ord_R(P, p);
    const BigInt pv = p.value();
    for (unsigned a = 0; a <= bound; ++a) {
        const BigInt pa = pow(pv, a);
        for (unsigned c = 0; c <= bound; ++c) {
            for (BigInt b = 0; b < pa; ++b) {
                RationalMatrix g{{BigRational(pa), BigRational(b)}, {BigRational(0), BigRational(pow(pv, c))}};
                best = std::min(best, ord_R(conjugate(P, g), p));
            }
        }
    }
    return best;
}

} // namespace oracle
