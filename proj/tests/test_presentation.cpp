#include "doctest.h"

#include "dynred/corpus.hpp"
#include "dynred/presentation.hpp"
#include "oracles.hpp"

using namespace dynred;
using oracle::forms;

namespace {
BigRational r(long v) { return BigRational(v); }
std::vector<BigRational> ints(std::initializer_list<long> v) {
    std::vector<BigRational> out;
    for (long x : v) out.emplace_back(x);
    return out;
}
} // namespace

TEST_CASE("monomials are in descending lexicographic order") {
    const auto& t = monomial_table(2, 2);
    REQUIRE(t.size() == 3);
    CHECK(t.exponents(0) == Exponents{2, 0});
    CHECK(t.exponents(1) == Exponents{1, 1});
    CHECK(t.exponents(2) == Exponents{0, 2});
    const auto& u = monomial_table(3, 2);
    REQUIRE(u.size() == 6);
    CHECK(u.exponents(0) == Exponents{2, 0, 0});
    CHECK(u.exponents(1) == Exponents{1, 1, 0});
    CHECK(u.exponents(5) == Exponents{0, 0, 2});
    CHECK(u.index_of(Exponents{0, 1, 1}) == 4);
    CHECK_THROWS_AS((void)u.index_of(Exponents{1, 1, 1}), UsageError);
}

TEST_CASE("make_presentation") {
    const Presentation P = forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}});
    CHECK(P.coeffs() == ints({1, 0, 0, 0, 0, 1}));
    const Presentation Q = forms(2, 2, {{{"1", {2, 0, 0}}}, {{"1", {0, 2, 0}}}, {{"1", {0, 0, 2}}}});
    CHECK(Q.coeffs().size() == 18);
    CHECK(std::count(Q.coeffs().begin(), Q.coeffs().end(), r(1)) == 3);
    CHECK(Q.ambient_dim() == 17);
    CHECK_THROWS_AS(make_presentation(1, 2, ints({0, 0, 0, 0, 0, 0})), UsageError);
    CHECK_THROWS_AS(make_presentation(1, 2, ints({1, 0, 0, 0, 0})), UsageError);
}

TEST_CASE("is_morphism") {
    CHECK(is_morphism(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}})));
    CHECK_FALSE(is_morphism(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {1, 1}}}})));
    CHECK(is_morphism(forms(1, 2, {{{"1", {2, 0}}, {"-1", {0, 2}}}, {{"1", {1, 1}}}})));
}

TEST_CASE("conjugate examples") {
    const Presentation P = forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}});
    CHECK(conjugate(P, RationalMatrix{{r(2), r(0)}, {r(0), r(1)}}) == make_presentation(1, 2, ints({4, 0, 0, 0, 0, 2})));
    CHECK(conjugate(P, RationalMatrix{{r(1), r(1)}, {r(0), r(1)}}) == make_presentation(1, 2, ints({1, 2, 0, 0, 0, 1})));
    CHECK(conjugate(P, identity_matrix(2)) == P);
    CHECK_THROWS_AS(conjugate(P, RationalMatrix{{r(1), r(1)}, {r(1), r(1)}}), DomainError);
    CHECK_THROWS_AS(conjugate(P, identity_matrix(3)), UsageError);
}

TEST_CASE("conjugation is an action of PGL") {
    Rng rng(21);
    for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}}) {
        for (int t = 0; t < 15; ++t) {
            const Presentation P = random_presentation(rng, n, d, {});
            const RationalMatrix g = random_invertible(rng, n + 1, {-3, 3});
            const RationalMatrix h = random_invertible(rng, n + 1, {-3, 3});
            const Presentation lhs = conjugate(conjugate(P, g), h);
            CHECK(projectively_equal(lhs, conjugate(P, g * h)));
            CHECK(projectively_equal(conjugate(P, BigRational(-7, 3) * g), conjugate(P, g)));
            CHECK(lhs.dim() == n);
            CHECK(lhs.degree() == d);
        }
    }
}

TEST_CASE("projective equality") {
    const Presentation P = make_presentation(1, 2, ints({1, 0, 2, 0, 3, 0}));
    CHECK(projectively_equal(P, scaled(P, BigRational(-5, 2))));
    CHECK_FALSE(projectively_equal(P, make_presentation(1, 2, ints({1, 0, 2, 0, 4, 0}))));
    CHECK_FALSE(projectively_equal(P, make_presentation(1, 2, ints({0, 0, 2, 0, 3, 0}))));
    CHECK_FALSE(projectively_equal(P, make_presentation(1, 3, ints({1, 0, 2, 0, 3, 0, 0, 0}))));
}

TEST_CASE("normalize_at") {
    const PrimeInt p(2);
    CHECK(normalize_at(forms(1, 2, {{{"2", {2, 0}}}, {{"2", {0, 2}}}}), p).base() ==
          forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}}));
    const Presentation Q = forms(1, 2, {{{"2", {2, 0}}}, {{"1", {0, 2}}}});
    CHECK(normalize_at(Q, p).base() == Q);
    CHECK(normalize_at(forms(1, 2, {{{"1/2", {2, 0}}}, {{"1", {0, 2}}}}), p).base() ==
          forms(1, 2, {{{"1", {2, 0}}}, {{"2", {0, 2}}}}));
}

TEST_CASE("normalization is idempotent and reduces to a nonzero point") {
    Rng rng(22);
    for (int t = 0; t < 100; ++t) {
        std::vector<BigRational> c;
        for (int k = 0; k < 6; ++k)
            c.emplace_back(BigInt(static_cast<long>(rng.uniform(-40, 40))), BigInt(static_cast<long>(rng.uniform(1, 40))));
        for (auto& x : c) x.canonicalize();
        if (std::all_of(c.begin(), c.end(), [](const BigRational& x) { return x == 0; })) continue;
        const Presentation P(1, 2, c);
        for (std::uint64_t pv : {2u, 3u, 5u}) {
            const PrimeInt p(pv);
            const auto N = normalize_at(P, p);
            CHECK(normalize_at(N.base(), p).base() == N.base());
            CHECK(ord_p_tuple(N.base().coeffs(), p) == Valuation(0));
            CHECK_FALSE(reduce_at(N).is_zero());
        }
    }
}

TEST_CASE("reduce_at examples") {
    auto coords = [](const ReducedPoint& x) {
        std::vector<std::uint64_t> v;
        for (const auto& c : x.coords) v.push_back(c.residue());
        return v;
    };
    const PrimeInt p3(3), p2(2);
    using V = std::vector<std::uint64_t>;
    CHECK(coords(reduce_at(normalize_at(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}}), p3))) == V{1, 0, 0, 0, 0, 1});
    CHECK(coords(reduce_at(normalize_at(forms(1, 2, {{{"2", {2, 0}}}, {{"1", {0, 2}}}}), p2))) == V{0, 0, 0, 0, 0, 1});
    CHECK(coords(reduce_at(normalize_at(forms(1, 2, {{{"1", {2, 0}}, {"3", {1, 1}}}, {{"1", {0, 2}}}}), p3))) ==
          V{1, 0, 0, 0, 0, 1});
}

TEST_CASE("primitive integral form") {
    const Presentation P = forms(1, 2, {{{"-2/3", {2, 0}}}, {{"4/9", {0, 2}}}});
    CHECK(primitive_integral(P) == forms(1, 2, {{{"3", {2, 0}}}, {{"-2", {0, 2}}}}));
}
