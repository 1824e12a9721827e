#include "doctest.h"

#include "dynred/corpus.hpp"
#include "dynred/resultant.hpp"
#include "oracles.hpp"

using namespace dynred;
using oracle::forms;

namespace {

BigRational r(long v) { return BigRational(v); }

Presentation diagonal_powers(unsigned n, unsigned d) {
    std::vector<std::vector<std::pair<std::string, Exponents>>> fs;
    for (unsigned i = 0; i <= n; ++i) {
        Exponents e(n + 1, 0);
        e[i] = static_cast<int>(d);
        fs.push_back({{"1", e}});
    }
    return forms(n, d, fs);
}

Presentation scale_form(const Presentation& P, std::size_t i, const BigRational& c) {
    std::vector<BigRational> v = P.coeffs();
    for (std::size_t k = i * P.form_size(); k < (i + 1) * P.form_size(); ++k) v[k] *= c;
    return Presentation(P.dim(), P.degree(), std::move(v));
}

} // namespace

TEST_CASE("Sylvester examples") {
    CHECK(sylvester_resultant(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}})) == 1);
    CHECK(sylvester_resultant(forms(1, 2, {{{"1", {2, 0}}, {"-1", {0, 2}}}, {{"1", {1, 1}}}})) == -1);
    CHECK(sylvester_resultant(forms(1, 2, {{{"2", {2, 0}}}, {{"1", {0, 2}}}})) == 4);
    CHECK_THROWS_AS(sylvester_resultant(diagonal_powers(2, 2)), UsageError);
}

TEST_CASE("Macaulay examples") {
    CHECK(macaulay_resultant(diagonal_powers(2, 2)) == 1);
    CHECK(macaulay_resultant(forms(2, 2, {{{"2", {2, 0, 0}}}, {{"3", {0, 2, 0}}}, {{"5", {0, 0, 2}}}})) == 810000);
    CHECK(macaulay_resultant(forms(2, 2, {{{"1", {2, 0, 0}}}, {{"1", {0, 2, 0}}}, {{"1", {2, 0, 0}}, {"1", {0, 2, 0}}}})) ==
          0);
}

TEST_CASE("normalization anchor") {
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {3, 1}})
        CHECK(resultant(diagonal_powers(n, d)) == 1);
}

TEST_CASE("degenerate reduced submatrix uses the perturbation path") {
    // Permuted diagonal forms: the extraneous factor vanishes.
    const Presentation P = forms(2, 2, {{{"1", {0, 2, 0}}}, {{"1", {0, 0, 2}}}, {{"1", {2, 0, 0}}}});
    const BigRational rho = macaulay_resultant(P);
    CHECK(abs(rho) == 1);
    // Linear forms: the resultant is the determinant.
    const Presentation L = forms(2, 1, {{{"1", {0, 1, 0}}, {"2", {0, 0, 1}}}, {{"3", {1, 0, 0}}}, {{"1", {0, 1, 0}}, {"1", {1, 0, 0}}}});
    const RationalMatrix m{{r(0), r(1), r(2)}, {r(3), r(0), r(0)}, {r(1), r(1), r(0)}};
    CHECK(macaulay_resultant(L) == det(m));
}

TEST_CASE("Sylvester equals Macaulay and the closed form for n = 1") {
    Rng rng(31);
    for (unsigned d : {2u, 3u}) {
        for (int t = 0; t < 100; ++t) {
            const Presentation P = random_presentation(rng, 1, d, {});
            CHECK(sylvester_resultant(P) == macaulay_resultant(P));
            if (d == 2) CHECK(sylvester_resultant(P) == oracle::quadratic_resultant(P));
        }
    }
}

TEST_CASE("Poisson formula: Res(x^d, F1, F2) = +-Res(F1(0,y,z), F2(0,y,z))^d") {
    Rng rng(32);
    for (int t = 0; t < 20; ++t) {
        const Presentation P = random_presentation(rng, 2, 2, {-3, 3});
        std::vector<BigRational> c = P.coeffs();
        for (std::size_t k = 0; k < 6; ++k) c[k] = k == 0 ? 1 : 0;
        const Presentation Q(2, 2, c);
        // restrict forms 1, 2 to x = 0: monomials y^2, yz, z^2 are indices 3, 4, 5
        std::vector<BigRational> b;
        for (std::size_t i = 1; i <= 2; ++i)
            for (std::size_t k = 3; k < 6; ++k) b.push_back(c[i * 6 + k]);
        const Presentation B(1, 2, b);
        const BigRational binary = oracle::quadratic_resultant(B);
        CHECK(abs(macaulay_resultant(Q)) == binary * binary);
    }
}

TEST_CASE("homogeneity of degree d^n per form, total degree (n+1)d^n") {
    Rng rng(33);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}}) {
        const std::uint64_t dn = resultant_degree(n, d) / (n + 1);
        for (int t = 0; t < 10; ++t) {
            const Presentation P = random_morphism(rng, n, d, {-3, 3});
            const BigRational rho = resultant(P);
            const BigRational c(BigInt(static_cast<long>(rng.uniform(2, 5))), BigInt(static_cast<long>(rng.uniform(1, 4))));
            const std::size_t i = static_cast<std::size_t>(rng.uniform(0, n));
            BigRational cpow = 1;
            for (std::uint64_t k = 0; k < dn; ++k) cpow *= c;
            CHECK(resultant(scale_form(P, i, c)) == cpow * rho);
            BigRational ctot = 1;
            for (std::uint64_t k = 0; k < resultant_degree(n, d); ++k) ctot *= c;
            CHECK(resultant(scaled(P, c)) == ctot * rho);
        }
    }
    CHECK(resultant_degree(2, 2) == 12);
    CHECK(resultant_degree(1, 3) == 6);
}

TEST_CASE("vanishing on planted common zeros, nonvanishing on conjugated powers") {
    Rng rng(34);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}}) {
        for (int t = 0; t < 10; ++t) {
            // forms vanishing at [1:0:...]: zero coefficient on x_0^d in every form
            Presentation P = random_presentation(rng, n, d, {});
            std::vector<BigRational> c = P.coeffs();
            for (std::size_t i = 0; i <= n; ++i) c[i * P.form_size()] = 0;
            if (std::all_of(c.begin(), c.end(), [](const BigRational& x) { return x == 0; })) continue;
            const Presentation Z(n, d, c);
            const RationalMatrix g = random_invertible(rng, n + 1, {-2, 2});
            CHECK(resultant(Z) == 0);
            CHECK(resultant(conjugate(Z, g)) == 0);
            CHECK(resultant(conjugate(diagonal_powers(n, d), g)) != 0);
        }
    }
}

TEST_CASE("valuation_report examples") {
    const PrimeInt p3(3), p2(2);
    auto v = valuation_report(forms(1, 2, {{{"3", {2, 0}}}, {{"3", {0, 2}}}}), p3);
    CHECK(v.ord_rho == Valuation(4));
    CHECK(v.min_coeff_ord == Valuation(1));
    CHECK(v.ord_R_phi == Valuation(0));
    v = valuation_report(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}}), p2);
    CHECK(v.ord_rho == Valuation(0));
    CHECK(v.ord_R_phi == Valuation(0));
    v = valuation_report(forms(1, 2, {{{"2", {2, 0}}}, {{"1", {0, 2}}}}), p2);
    CHECK(v.ord_rho == Valuation(2));
    CHECK(v.min_coeff_ord == Valuation(0));
    CHECK(v.ord_R_phi == Valuation(2));
    v = valuation_report(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {1, 1}}}}), p2);
    CHECK(v.ord_rho.is_infinite());
    CHECK(v.ord_R_phi.is_infinite());
}

TEST_CASE("check_conjugation_valuation examples") {
    const Presentation P = forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}});
    auto c = check_conjugation_valuation(P, RationalMatrix{{r(2), r(0)}, {r(0), r(1)}}, PrimeInt(2));
    CHECK(c.lhs == Valuation(6));
    CHECK(c.rhs_formula == Valuation(6));
    CHECK(c.holds);
    c = check_conjugation_valuation(P, RationalMatrix{{r(1), r(1)}, {r(0), r(1)}}, PrimeInt(7));
    CHECK(c.lhs == c.rhs_formula);
    CHECK(c.holds);
    CHECK_THROWS_AS(check_conjugation_valuation(P, RationalMatrix{{r(1), r(1)}, {r(1), r(1)}}, PrimeInt(2)), DomainError);
}

TEST_CASE("conjugation identities on random data") {
    Rng rng(35);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}}) {
        for (int t = 0; t < 8; ++t) {
            const Presentation P = random_morphism(rng, n, d, {});
            for (std::uint64_t pv : {2u, 3u, 5u}) {
                const PrimeInt p(pv);
                const RationalMatrix g = random_invertible(rng, n + 1, {-6, 6});
                const auto c = check_conjugation_valuation(P, g, p);
                CHECK(c.equality_holds);
                CHECK(c.inequality_holds);

                const RationalMatrix u = random_p_unimodular(rng, n + 1, p, {-4, 4});
                const Presentation Pu = conjugate(P, u);
                CHECK(ord_p(resultant(Pu), p) == ord_p(resultant(P), p));
                CHECK(ord_p_tuple(Pu.coeffs(), p) == ord_p_tuple(P.coeffs(), p));
            }
        }
    }
}

TEST_CASE("|rho| is invariant under GL(Z)") {
    Rng rng(36);
    for (int t = 0; t < 20; ++t) {
        const Presentation P = random_morphism(rng, 1, 3, {});
        // products of elementary matrices
        RationalMatrix u = identity_matrix(2);
        for (int k = 0; k < 4; ++k) {
            RationalMatrix e = identity_matrix(2);
            const long s = static_cast<long>(rng.uniform(-2, 2));
            if (k % 2) e(0, 1) = s; else e(1, 0) = s;
            u = u * e;
        }
        CHECK(abs(resultant(conjugate(P, u))) == abs(resultant(P)));
    }
}

TEST_CASE("size limits") {
    CHECK_THROWS_AS(resultant(diagonal_powers(2, 5)), BudgetError);
}
