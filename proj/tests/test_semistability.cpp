#include "doctest.h"

#include "dynred/corpus.hpp"
#include "dynred/semistability.hpp"
#include "oracles.hpp"

using namespace dynred;
using oracle::forms;

namespace {

using U32Matrix = Matrix<std::uint32_t>;

// All points of P^N(F_p) for (n, d), as integer presentations.
std::vector<Presentation> all_points(unsigned n, unsigned d, std::uint64_t p) {
    std::vector<Presentation> out;
    for (const auto& doc : boundary_scan(n, d, PrimeInt(p))) out.push_back(doc.presentation);
    return out;
}

} // namespace

TEST_CASE("coordinate weights") {
    const auto w = coordinate_weights(1, 2);
    REQUIRE(w.size() == 6);
    CHECK(w[5].weight == IntVector{0, 1});
    CHECK(w[0].weight == IntVector{1, 0});
    const auto w2 = coordinate_weights(2, 2);
    CHECK(w2[1].exponents == Exponents{1, 1, 0});
    CHECK(w2[1].weight == IntVector{0, 1, 0});
    for (const auto& x : w2) {
        std::int64_t s = 0;
        for (auto v : x.weight) s += v;
        CHECK(s == 1);
    }
}

TEST_CASE("flag representatives") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const GaloisField F(p, 1);
        CHECK(flag_representatives(F, 1).size() == flag_count(1, p));
        CHECK(flag_count(1, p) == p + 1);
    }
    CHECK(flag_representatives(GaloisField(2, 1), 2).size() == 21);
    CHECK(flag_count(2, 3) == 13 * 4);
    const auto reps = flag_representatives(GaloisField(3, 1), 1);
    CHECK(std::is_sorted(reps.begin(), reps.end(),
                         [](const U32Matrix& a, const U32Matrix& b) { return a.data() < b.data(); }));
}

TEST_CASE("semistability examples") {
    const PrimeInt p2(2), p3(3), p5(5);
    CHECK(is_semistable_presentation(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}}), p3).semistable);

    auto res = is_semistable_presentation(forms(1, 2, {{{"2", {2, 0}}}, {{"1", {0, 2}}}}), p2);
    CHECK_FALSE(res.semistable);
    REQUIRE(res.witness);
    CHECK(res.witness->flag_matrix == U32Matrix{{0, 1}, {1, 0}});
    CHECK(res.witness->r == IntVector{1, -1});

    res = is_semistable_presentation(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {1, 1}}}}), p3);
    CHECK_FALSE(res.semistable);
    REQUIRE(res.witness);
    CHECK(res.witness->flag_matrix == U32Matrix{{1, 0}, {0, 1}});
    CHECK(res.witness->r == IntVector{1, -1});

    CHECK(is_semistable_presentation(forms(1, 2, {{{"1", {2, 0}}, {"-1", {0, 2}}}, {{"1", {1, 1}}}}), p5).semistable);
    CHECK_FALSE(is_semistable_presentation(forms(1, 2, {{{"4", {2, 0}}}, {{"2", {0, 2}}}}), p2).semistable);
}

TEST_CASE("agreement with full GL_2 enumeration, every point") {
    for (auto [d, p] : std::vector<std::pair<unsigned, std::uint64_t>>{{2, 2}, {2, 3}, {3, 2}, {1, 5}}) {
        CAPTURE(d);
        CAPTURE(p);
        for (const auto& P : all_points(1, d, p)) {
            const auto res = is_semistable_presentation(P, PrimeInt(p));
            CHECK(res.semistable == !oracle::unstable(P, p));
            if (res.witness) CHECK(oracle::witness_holds(P, PrimeInt(p), *res.witness));
        }
    }
}

TEST_CASE("agreement with full GL_3(F_2) enumeration on random points") {
    Rng rng(41);
    const PrimeInt p(2);
    int unstable = 0;
    for (int t = 0; t < 25; ++t) {
        // sparse points are more often unstable
        std::vector<BigRational> c(18, 0);
        const int support = static_cast<int>(rng.uniform(1, 6));
        for (int k = 0; k < support; ++k) c[static_cast<std::size_t>(rng.uniform(0, 17))] = 1;
        const Presentation P(2, 2, c);
        const auto res = is_semistable_presentation(P, p);
        CHECK(res.semistable == !oracle::unstable(P, 2));
        if (res.witness) {
            ++unstable;
            CHECK(oracle::witness_holds(P, p, *res.witness));
        }
    }
    CHECK(unstable > 0);
}

TEST_CASE("good reduction points are semistable") {
    Rng rng(42);
    for (auto [n, d, p] : std::vector<std::tuple<unsigned, unsigned, std::uint64_t>>{{1, 2, 3}, {1, 3, 5}, {2, 2, 2}, {2, 2, 3}}) {
        for (int t = 0; t < 10; ++t) {
            const Presentation P = random_good_reduction_morphism(rng, n, d, PrimeInt(p), {});
            CHECK(is_semistable_presentation(P, PrimeInt(p)).semistable);
        }
    }
}

TEST_CASE("verdicts are invariant under conjugation over F_p") {
    Rng rng(43);
    for (auto [n, d, p] : std::vector<std::tuple<unsigned, unsigned, std::uint64_t>>{{1, 2, 2}, {1, 3, 3}, {2, 2, 2}}) {
        const PrimeInt pp(p);
        for (int t = 0; t < 15; ++t) {
            const Presentation P = random_presentation(rng, n, d, {-1, 1});
            const RationalMatrix g = random_p_unimodular(rng, n + 1, pp, {0, static_cast<std::int64_t>(p) - 1});
            CHECK(is_semistable_presentation(P, pp).semistable == is_semistable_presentation(conjugate(P, g), pp).semistable);
        }
    }
}

TEST_CASE("witnesses re-verify with the library checker") {
    for (const auto& P : all_points(1, 2, 3)) {
        const auto x = reduce_at(normalize_at(P, PrimeInt(3)));
        const auto res = is_semistable(x);
        if (res.witness) CHECK(verify_witness(x, *res.witness));
    }
}

TEST_CASE("field extension never overturns a semistable verdict") {
    for (const auto& P : all_points(1, 2, 2)) {
        SemistabilityOptions ext;
        ext.extension_degree = 2;
        const bool base = is_semistable_presentation(P, PrimeInt(2)).semistable;
        const auto res = is_semistable_presentation(P, PrimeInt(2), ext);
        if (base) CHECK(res.semistable);
        else CHECK_FALSE(res.semistable);
    }
}

TEST_CASE("strict semistability classification") {
    SemistabilityOptions o;
    o.classify_strict = true;
    // Good reduction with all four corner monomials: no nontrivial r keeps
    // every weight >= 0, so not strictly semistable.
    auto res = is_semistable_presentation(forms(1, 2, {{{"1", {2, 0}}}, {{"1", {0, 2}}}}), PrimeInt(3), o);
    REQUIRE(res.strictly_semistable);
    CHECK_FALSE(*res.strictly_semistable);
    for (const auto& P : all_points(1, 2, 2)) {
        res = is_semistable_presentation(P, PrimeInt(2), o);
        if (!res.semistable) {
            CHECK_FALSE(res.strictly_semistable);
            continue;
        }
        REQUIRE(res.strictly_semistable);
        // weak oracle over all of GL_2(F_2): some g and r = +-(1,-1) with all weights >= 0
        bool weak = false;
        const Presentation x = oracle::reduce_lift(P, 2);
        oracle::for_each_gl(1, 2, [&](const RationalMatrix& g) {
            const Presentation y = oracle::reduce_lift(conjugate(x, g), 2);
            std::vector<IntVector> rows;
            for (std::size_t k = 0; k < 6; ++k)
                if (y.coeffs()[k] != 0) rows.push_back(oracle::weight_of(y, k));
            for (const IntVector& r : {IntVector{1, -1}, IntVector{-1, 1}}) {
                bool ok = true;
                for (const auto& row : rows) ok = ok && row[0] * r[0] + row[1] * r[1] >= 0;
                weak = weak || ok;
            }
            return !weak;
        });
        CHECK(*res.strictly_semistable == weak);
    }
}

TEST_CASE("budgets and invalid input") {
    CHECK_THROWS_AS(is_semistable_presentation(forms(2, 2, {{{"1", {2, 0, 0}}}, {{"1", {0, 2, 0}}}, {{"1", {0, 0, 2}}}}), PrimeInt(11)),
                    BudgetError);
    ReducedPoint zero{1, 2, std::vector<FFElem>(6, FFElem(0, 2))};
    CHECK_THROWS_AS(is_semistable(zero), UsageError);
}
