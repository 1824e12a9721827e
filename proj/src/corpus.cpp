#include "dynred/corpus.hpp"

#include "dynred/resultant.hpp"

namespace dynred {

namespace {

constexpr int kMaxAttempts = 10000;

std::string tag_prime(const PrimeInt& p) { return p.value().get_str(); }

} // namespace

Presentation random_presentation(Rng& rng, unsigned n, unsigned d, const CoefficientBox& box) {
    const std::size_t count = (n + 1) * binomial(n + d, d);
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        std::vector<BigRational> c(count);
        bool nonzero = false;
        for (auto& x : c) {
            x = BigRational(static_cast<long>(rng.uniform(box.lo, box.hi)));
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return Presentation(n, d, std::move(c));
    }
    throw UsageError("coefficient box only produces zero presentations");
}

Presentation random_morphism(Rng& rng, unsigned n, unsigned d, const CoefficientBox& box) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Presentation P = random_presentation(rng, n, d, box);
        if (is_morphism(P)) return P;
    }
    throw UsageError("could not draw a morphism from the coefficient box");
}

Presentation random_good_reduction_morphism(Rng& rng, unsigned n, unsigned d, const PrimeInt& p,
                                            const CoefficientBox& box) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        Presentation P = random_morphism(rng, n, d, box);
        if (valuation_report(P, p).ord_R_phi == Valuation(0)) return P;
    }
    throw UsageError("could not draw a good-reduction morphism");
}

RationalMatrix random_invertible(Rng& rng, std::size_t m, const CoefficientBox& box) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RationalMatrix g(m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) g(i, j) = BigRational(static_cast<long>(rng.uniform(box.lo, box.hi)));
        if (det(g) != 0) return g;
    }
    throw UsageError("could not draw an invertible matrix");
}

RationalMatrix random_p_unimodular(Rng& rng, std::size_t m, const PrimeInt& p, const CoefficientBox& box) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RationalMatrix g = random_invertible(rng, m, box);
        if (ord_p(det(g), p) == Valuation(0)) return g;
    }
    throw UsageError("could not draw a p-unimodular matrix");
}

RationalMatrix leading_scaling(std::size_t m, const BigInt& scale) {
    RationalMatrix g = identity_matrix(m);
    g(0, 0) = BigRational(scale);
    return g;
}

std::vector<MorphismDocument> random_corpus(unsigned n, unsigned d, std::size_t count, std::uint64_t seed,
                                            const CoefficientBox& box) {
    Rng rng(seed);
    std::vector<MorphismDocument> out;
    for (std::size_t i = 0; i < count; ++i) {
        MorphismDocument doc{.presentation = random_morphism(rng, n, d, box)};
        doc.label = "random n=" + std::to_string(n) + " d=" + std::to_string(d) + " seed=" + std::to_string(seed) +
                    " #" + std::to_string(i);
        out.push_back(std::move(doc));
    }
    return out;
}

std::vector<MorphismDocument> conjugated_good_corpus(unsigned n, unsigned d, const PrimeInt& p, unsigned k,
                                                     std::size_t count, std::uint64_t seed,
                                                     const std::vector<Presentation>& bases,
                                                     const CoefficientBox& box) {
    Rng rng(seed);
    const RationalMatrix g = leading_scaling(n + 1, pow(p.value(), k));
    std::vector<MorphismDocument> out;
    for (std::size_t i = 0; i < count; ++i) {
        const Presentation base = i < bases.size() ? bases[i] : random_good_reduction_morphism(rng, n, d, p, box);
        MorphismDocument doc{.presentation = primitive_integral(conjugate(base, g))};
        doc.label = "conjugated-good p=" + tag_prime(p) + " k=" + std::to_string(k) + " #" + std::to_string(i);
        doc.tags["p"] = tag_prime(p);
        doc.tags["k"] = std::to_string(k);
        out.push_back(std::move(doc));
    }
    return out;
}

std::vector<MorphismDocument> boundary_scan(unsigned n, unsigned d, const PrimeInt& p, const SemistabilityOptions& opts,
                                            std::size_t max_points) {
    const std::uint64_t pv = p.as_u64();
    const std::size_t N1 = (n + 1) * binomial(n + d, d);
    // points of P^{N1-1}(F_p)
    long double total = 0, pk = 1;
    for (std::size_t i = 0; i < N1; ++i) {
        total += pk;
        pk *= static_cast<long double>(pv);
    }
    if (total > static_cast<long double>(max_points))
        throw BudgetError("boundary scan would visit more than " + std::to_string(max_points) + " points");

    std::vector<MorphismDocument> out;
    for (std::size_t lead = 0; lead < N1; ++lead) {
        const std::size_t free = N1 - 1 - lead;
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < free; ++i) combos *= pv;
        for (std::uint64_t code = 0; code < combos; ++code) {
            ReducedPoint x{n, d, std::vector<FFElem>(N1, FFElem(0, pv))};
            x.coords[lead] = FFElem(1, pv);
            std::uint64_t rest = code;
            for (std::size_t j = lead + 1; j < N1; ++j) {
                x.coords[j] = FFElem(rest % pv, pv);
                rest /= pv;
            }
            const auto verdict = is_semistable(x, opts);
            MorphismDocument doc{.presentation = lift(x)};
            doc.label = "boundary-scan p=" + tag_prime(p);
            doc.tags["p"] = tag_prime(p);
            doc.tags["verdict"] = verdict.semistable ? "semistable" : "unstable";
            if (verdict.strictly_semistable) doc.tags["strictly_semistable"] = *verdict.strictly_semistable ? "yes" : "no";
            const BigRational rho = resultant(doc.presentation);
            doc.tags["resultant_mod_p"] = ord_p(rho, p) > Valuation(0) ? "zero" : "nonzero";
            out.push_back(std::move(doc));
        }
    }
    return out;
}

std::vector<MorphismDocument> semistable_bad_corpus(unsigned n, unsigned d, const PrimeInt& p, std::size_t count,
                                                    std::uint64_t seed, const SemistabilityOptions& opts) {
    std::vector<MorphismDocument> out;
    Rng rng(seed);
    const auto scan = boundary_scan(n, d, p, opts);
    std::vector<const MorphismDocument*> pool;
    for (const auto& doc : scan)
        if (doc.tags.at("verdict") == "semistable" && doc.tags.at("resultant_mod_p") == "zero") pool.push_back(&doc);
    if (pool.empty()) return out;
    const CoefficientBox box{-2, 2};
    const BigRational pq(p.value());
    for (std::size_t i = 0; out.size() < count && i < count * 20; ++i) {
        const Presentation& base = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1))]->presentation;
        const Presentation noise = random_presentation(rng, n, d, box);
        std::vector<BigRational> c = base.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += pq * noise.coeffs()[k];
        Presentation P(n, d, std::move(c));
        if (!is_morphism(P)) continue;
        MorphismDocument doc{.presentation = std::move(P)};
        doc.label = "semistable-bad p=" + tag_prime(p) + " #" + std::to_string(out.size());
        doc.tags["p"] = tag_prime(p);
        out.push_back(std::move(doc));
    }
    return out;
}

} // namespace dynred
