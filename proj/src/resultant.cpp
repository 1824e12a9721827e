#include "dynred/resultant.hpp"

#include <vector>

#include "dynred/errors.hpp"
#include "dynred/presentation.hpp"

namespace dynred {

namespace {

void check_size(const Presentation& P) {
    if (P.coeffs().size() > kMaxPresentationCoefficients)
        throw BudgetError("presentation has " + std::to_string(P.coeffs().size()) + " coefficients; limit is " +
                          std::to_string(kMaxPresentationCoefficients));
}

unsigned macaulay_degree(const Presentation& P) { return (P.dim() + 1) * (P.degree() - 1) + 1; }

struct MacaulaySystem {
    RationalMatrix full;
    RationalMatrix reduced;  // rows/columns of monomials divisible by two or more x_i^d
};

// Rows and columns are indexed by the same degree-nu monomials, so the
// system for (x_0^d, ..., x_n^d) is the identity.
MacaulaySystem macaulay_system(const Presentation& P, const BigRational& t) {
    const std::size_t nv = P.nvars();
    const int d = static_cast<int>(P.degree());
    const unsigned nu = macaulay_degree(P);
    const auto& big = monomial_table(nv, nu);
    const auto& small = P.monomials();
    if (big.size() > kMaxMacaulayDimension)
        throw BudgetError("Macaulay matrix dimension " + std::to_string(big.size()) + " exceeds limit " +
                          std::to_string(kMaxMacaulayDimension));

    MacaulaySystem sys;
    sys.full = RationalMatrix(big.size(), big.size(), BigRational(0));
    std::vector<std::size_t> non_reduced;
    Exponents e(nv);
    for (std::size_t row = 0; row < big.size(); ++row) {
        const Exponents& m = big.exponents(row);
        std::size_t divisible = 0, first = nv;
        for (std::size_t i = 0; i < nv; ++i)
            if (m[i] >= d) {
                ++divisible;
                if (first == nv) first = i;
            }
        if (divisible >= 2) non_reduced.push_back(row);

        Exponents quotient = m;
        quotient[first] -= d;
        const auto form = P.form(first);
        for (std::size_t k = 0; k < small.size(); ++k) {
            BigRational c = form[k];
            const Exponents& u = small.exponents(k);
            if (t != 0 && u[first] == d) c += t;
            if (c == 0) continue;
            for (std::size_t v = 0; v < nv; ++v) e[v] = quotient[v] + u[v];
            sys.full(row, big.index_of(e)) = c;
        }
    }
    sys.reduced = RationalMatrix(non_reduced.size(), non_reduced.size());
    for (std::size_t i = 0; i < non_reduced.size(); ++i)
        for (std::size_t j = 0; j < non_reduced.size(); ++j)
            sys.reduced(i, j) = sys.full(non_reduced[i], non_reduced[j]);
    return sys;
}

} // namespace

std::uint64_t resultant_degree(unsigned n, unsigned d) {
    std::uint64_t r = n + 1;
    for (unsigned i = 0; i < n; ++i) r *= d;
    return r;
}

BigRational sylvester_resultant(const Presentation& P) {
    if (P.dim() != 1) throw UsageError("Sylvester resultant needs n = 1");
    check_size(P);
    const std::size_t d = P.degree();
    RationalMatrix S(2 * d, 2 * d, BigRational(0));
    const auto a = P.form(0);
    const auto b = P.form(1);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k <= d; ++k) {
            S(j, j + k) = a[k];
            S(d + j, j + k) = b[k];
        }
    return det(S);
}

BigRational macaulay_resultant(const Presentation& P) {
    check_size(P);
    {
        const MacaulaySystem sys = macaulay_system(P, BigRational(0));
        const BigRational den = det(sys.reduced);
        if (den != 0) return det(sys.full) / den;
    }
    // det(M') vanished: interpolate the quotient in the perturbation t. The
    // leading behaviour in t is that of (x_i^d), so det(M'(t)) is a nonzero
    // polynomial and only finitely many t are skipped.
    const std::uint64_t needed = resultant_degree(P.dim(), P.degree()) + 1;
    std::vector<BigRational> ts, values;
    for (long t = 1; ts.size() < needed; ++t) {
        const MacaulaySystem sys = macaulay_system(P, BigRational(t));
        const BigRational den = det(sys.reduced);
        if (den == 0) continue;
        ts.emplace_back(t);
        values.push_back(det(sys.full) / den);
    }
    BigRational at_zero = 0;
    for (std::size_t j = 0; j < ts.size(); ++j) {
        BigRational basis = 1;
        for (std::size_t k = 0; k < ts.size(); ++k)
            if (k != j) basis *= (-ts[k]) / (ts[j] - ts[k]);
        at_zero += values[j] * basis;
    }
    return at_zero;
}

BigRational resultant(const Presentation& P) { return P.dim() == 1 ? sylvester_resultant(P) : macaulay_resultant(P); }

ResultantValuation valuation_report(const Presentation& P, const PrimeInt& p) {
    ResultantValuation r;
    r.p = p.value();
    r.ord_rho = ord_p(resultant(P), p);
    r.min_coeff_ord = ord_p_tuple(P.coeffs(), p);
    const auto delta = static_cast<std::int64_t>(resultant_degree(P.dim(), P.degree()));
    r.ord_R_phi = r.ord_rho.is_infinite() ? Valuation::infinity()
                                          : Valuation(r.ord_rho.value() - delta * r.min_coeff_ord.value());
    return r;
}

ConjugationValuationCheck check_conjugation_valuation(const Presentation& P, const RationalMatrix& gamma,
                                                      const PrimeInt& p) {
    const Presentation Q = conjugate(P, gamma);  // throws on singular gamma
    const std::int64_t n = P.dim(), d = P.degree();
    const auto dn = static_cast<std::int64_t>(resultant_degree(P.dim(), P.degree()) / (P.dim() + 1));

    ConjugationValuationCheck c;
    c.lhs = ord_p(resultant(Q), p);
    c.rhs_formula = ord_p(resultant(P), p) + (n + d) * dn * ord_p(det(gamma), p);
    c.equality_holds = c.lhs == c.rhs_formula;
    c.min_ord_conjugate = ord_p_tuple(Q.coeffs(), p);
    c.min_ord_bound = ord_p_tuple(P.coeffs(), p) + (d + 1) * ord_p(gamma, p);
    c.inequality_holds = c.min_ord_conjugate >= c.min_ord_bound;
    c.holds = c.equality_holds && c.inequality_holds;
    return c;
}

} // namespace dynred
