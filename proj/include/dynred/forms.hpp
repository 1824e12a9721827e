#pragma once

#include <cstddef>
#include <vector>

#include "dynred/matrix.hpp"
#include "dynred/monomial.hpp"

namespace dynred {

/// Ring interface over BigRational for the form engine.
struct RationalRing {
    using Elem = BigRational;
    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
};

// Homogeneous forms are dense coefficient vectors indexed by
// monomial_table(nvars, degree).

template <class Ring>
std::vector<typename Ring::Elem> multiply_forms(const Ring& R, std::size_t nvars, const std::vector<typename Ring::Elem>& a,
                                                unsigned da, const std::vector<typename Ring::Elem>& b, unsigned db) {
    const auto& ta = monomial_table(nvars, da);
    const auto& tb = monomial_table(nvars, db);
    const auto& tc = monomial_table(nvars, da + db);
    std::vector<typename Ring::Elem> c(tc.size(), R.zero());
    Exponents e(nvars);
    for (std::size_t i = 0; i < ta.size(); ++i) {
        if (R.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < tb.size(); ++j) {
            if (R.is_zero(b[j])) continue;
            for (std::size_t v = 0; v < nvars; ++v) e[v] = ta.exponents(i)[v] + tb.exponents(j)[v];
            auto& slot = c[tc.index_of(e)];
            slot = R.add(slot, R.mul(a[i], b[j]));
        }
    }
    return c;
}

/// F(g x) for a single form F of the given degree: substitutes
/// x_j -> sum_k g(j,k) x_k and expands.
template <class Ring>
std::vector<typename Ring::Elem> substitute_linear(const Ring& R, std::size_t nvars, unsigned degree,
                                                   const std::vector<typename Ring::Elem>& form,
                                                   const Matrix<typename Ring::Elem>& g) {
    using Elem = typename Ring::Elem;
    // powers[j][k] = (row j of g)^k as a form of degree k
    std::vector<std::vector<std::vector<Elem>>> powers(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
        std::vector<Elem> lin(nvars);
        for (std::size_t k = 0; k < nvars; ++k) lin[k] = g(j, k);
        powers[j].push_back({R.one()});
        for (unsigned k = 1; k <= degree; ++k)
            powers[j].push_back(multiply_forms(R, nvars, powers[j].back(), k - 1, lin, 1));
    }
    const auto& table = monomial_table(nvars, degree);
    std::vector<Elem> out(table.size(), R.zero());
    for (std::size_t m = 0; m < table.size(); ++m) {
        if (R.is_zero(form[m])) continue;
        const Exponents& e = table.exponents(m);
        std::vector<Elem> term{form[m]};
        unsigned deg = 0;
        for (std::size_t j = 0; j < nvars; ++j) {
            if (e[j] == 0) continue;
            term = multiply_forms(R, nvars, term, deg, powers[j][e[j]], e[j]);
            deg += e[j];
        }
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = R.add(out[k], term[k]);
    }
    return out;
}

/// Conjugation of the forms (F_0, ..., F_n), stored form-major, by g:
/// G_i = sum_k adj(i,k) F_k(g x). adj must be the adjugate of g.
template <class Ring>
std::vector<typename Ring::Elem> conjugate_forms(const Ring& R, std::size_t nvars, unsigned degree,
                                                 const std::vector<typename Ring::Elem>& coeffs,
                                                 const Matrix<typename Ring::Elem>& g,
                                                 const Matrix<typename Ring::Elem>& adj) {
    using Elem = typename Ring::Elem;
    const std::size_t D = monomial_table(nvars, degree).size();
    std::vector<std::vector<Elem>> substituted(nvars);
    for (std::size_t k = 0; k < nvars; ++k) {
        std::vector<Elem> f(coeffs.begin() + k * D, coeffs.begin() + (k + 1) * D);
        substituted[k] = substitute_linear(R, nvars, degree, f, g);
    }
    std::vector<Elem> out(nvars * D, R.zero());
    for (std::size_t i = 0; i < nvars; ++i)
        for (std::size_t k = 0; k < nvars; ++k) {
            if (R.is_zero(adj(i, k))) continue;
            for (std::size_t m = 0; m < D; ++m)
                out[i * D + m] = R.add(out[i * D + m], R.mul(adj(i, k), substituted[k][m]));
        }
    return out;
}

} // namespace dynred
