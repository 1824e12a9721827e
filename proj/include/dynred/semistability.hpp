#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dynred/cone.hpp"
#include "dynred/galois_field.hpp"
#include "dynred/matrix.hpp"
#include "dynred/presentation.hpp"

namespace dynred {

/// Weight of coordinate (form i, monomial e) under diag(t^r_0, ..., t^r_n),
/// Sum r = 0, acting by conjugation: <w, r> with w_j = e_j - [j = i].
struct WeightFunctional {
    std::size_t form = 0;
    Exponents exponents;
    IntVector weight;
};

// One functional per coordinate of P^N, in presentation coefficient order.
std::vector<WeightFunctional> coordinate_weights(unsigned n, unsigned d);

/// Certificate of instability. After conjugating the point by flag_matrix
/// (entries in F_q, q = p^field_degree, base-p encoded), every nonzero
/// coordinate has weight <w, r> >= 1. r is non-increasing with Sum r = 0.
struct OnePSWitness {
    std::uint32_t p = 0;
    unsigned field_degree = 1;
    Matrix<std::uint32_t> flag_matrix;
    IntVector r;
};

struct SemistabilityOptions {
    // Flags are enumerated over F_{p^extension_degree}.
    unsigned extension_degree = 1;
    // Largest supported projective dimension n.
    unsigned max_dimension = 2;
    // Refuse when the flag variety has more points than this. The default
    // admits n = 2 over F_7.
    std::uint64_t max_flags = 456;
    // Also decide whether a semistable point is strictly semistable.
    bool classify_strict = false;
};

struct SemistabilityResult {
    bool semistable = false;
    std::optional<OnePSWitness> witness;
    // Set only when classify_strict was requested and the point is semistable.
    std::optional<bool> strictly_semistable;
};

// Number of full flags in F_q^(n+1).
std::uint64_t flag_count(unsigned n, std::uint64_t q);

/// One representative per full flag: g modulo right multiplication by lower
/// triangular matrices, in lexicographic order of the row-major entries.
std::vector<Matrix<std::uint32_t>> flag_representatives(const GaloisField& F, unsigned n);

// Point with coordinates in F (prime-field points embed as residues).
using FieldPoint = std::vector<std::uint32_t>;

// Conjugate of a point of P^N(F) by an invertible g over F.
FieldPoint conjugate_point(const GaloisField& F, unsigned n, unsigned d, const FieldPoint& x,
                           const Matrix<std::uint32_t>& g);

/// Numerical-criterion semistability of a reduced point under conjugation.
/// Unstable iff for some flag representative g and some non-increasing
/// integer r with Sum r = 0, every nonzero coordinate of g.x has positive
/// weight. Throws BudgetError beyond the configured budget and UsageError
/// for the zero point.
SemistabilityResult is_semistable(const ReducedPoint& x, const SemistabilityOptions& opts = {});
SemistabilityResult is_semistable(const GaloisField& F, unsigned n, unsigned d, const FieldPoint& x,
                                  const SemistabilityOptions& opts = {});

// normalize_at, reduce_at, then is_semistable.
SemistabilityResult is_semistable_presentation(const Presentation& P, const PrimeInt& p,
                                               const SemistabilityOptions& opts = {});

// Re-checks a witness against the point with the finite-field engine.
bool verify_witness(const ReducedPoint& x, const OnePSWitness& w);

} // namespace dynred
