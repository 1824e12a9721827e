#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "dynred/document.hpp"

namespace dynred {

/// Deterministic generator. The mapping to ranges is done here rather than
/// with std::uniform_int_distribution so outputs are identical across
/// standard library implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    // Uniform-ish integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

private:
    std::mt19937_64 engine_;
};

struct CoefficientBox {
    std::int64_t lo = -4;
    std::int64_t hi = 4;
};

Presentation random_presentation(Rng& rng, unsigned n, unsigned d, const CoefficientBox& box);
// Retries until the resultant is nonzero.
Presentation random_morphism(Rng& rng, unsigned n, unsigned d, const CoefficientBox& box);
// Random morphism whose resultant is a p-unit: good reduction at p.
Presentation random_good_reduction_morphism(Rng& rng, unsigned n, unsigned d, const PrimeInt& p,
                                            const CoefficientBox& box);
// Integer matrix with nonzero determinant.
RationalMatrix random_invertible(Rng& rng, std::size_t m, const CoefficientBox& box);
// Integer matrix whose determinant is a p-unit.
RationalMatrix random_p_unimodular(Rng& rng, std::size_t m, const PrimeInt& p, const CoefficientBox& box);

// diag(scale, 1, ..., 1)
RationalMatrix leading_scaling(std::size_t m, const BigInt& scale);

std::vector<MorphismDocument> random_corpus(unsigned n, unsigned d, std::size_t count, std::uint64_t seed,
                                            const CoefficientBox& box = {});

/// Good-reduction maps conjugated by diag(p^k, 1, ...): planted non-minimal
/// presentations. Uses `bases` when given, random good maps otherwise.
std::vector<MorphismDocument> conjugated_good_corpus(unsigned n, unsigned d, const PrimeInt& p, unsigned k,
                                                     std::size_t count, std::uint64_t seed,
                                                     const std::vector<Presentation>& bases = {},
                                                     const CoefficientBox& box = {});

/// Every point of P^N(F_p) (first nonzero coordinate 1), lifted to
/// coefficients in [0, p) and tagged with its semistability verdict and
/// whether its resultant vanishes mod p.
std::vector<MorphismDocument> boundary_scan(unsigned n, unsigned d, const PrimeInt& p,
                                            const SemistabilityOptions& opts = {}, std::size_t max_points = 200000);

/// Morphisms over Q whose reduction at p is semistable with vanishing
/// resultant (semistable bad reduction). Built by lifting semistable points
/// from boundary_scan and adding p times a random integral presentation
/// until the lift is a morphism.
std::vector<MorphismDocument> semistable_bad_corpus(unsigned n, unsigned d, const PrimeInt& p, std::size_t count,
                                                    std::uint64_t seed, const SemistabilityOptions& opts = {});

} // namespace dynred
