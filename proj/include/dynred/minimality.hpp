#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dynred/factor.hpp"
#include "dynred/presentation.hpp"
#include "dynred/semistability.hpp"

namespace dynred {

/// An integral conjugator with determinant a power of p, so it is invertible
/// modulo every other prime.
///
/// n = 1: W^e [[p^a, b], [0, 1]] W^e with W the coordinate swap,
///        e in {0, 1}, 0 <= a <= B, 0 <= b < p^a; key (e, a, b).
/// n >= 2: upper triangular Hermite forms with diagonal p^a_i, 0 <= a_i <= B,
///        and entry (i, j), i < j, in [0, p^a_i); forms that are p times
///        another member are skipped. key (a_0..a_n, entries).
struct ConjugationCandidate {
    RationalMatrix gamma;
    std::string description;
    std::vector<std::int64_t> key;
};

// Ordered by key. Throws BudgetError when the family exceeds max_candidates.
std::vector<ConjugationCandidate> conjugation_candidates(unsigned n, const PrimeInt& p, unsigned bound,
                                                         std::uint64_t max_candidates);

struct MinimalityOptions {
    unsigned bound = 3;
    std::uint64_t max_candidates = 200000;
    SemistabilityOptions semistability;
    FactorOptions factor;
};

/// Best normalized ord_p of rho over one pass of the candidate family.
struct SearchOutcome {
    std::int64_t base_ord = 0;
    std::int64_t best_ord = 0;
    // First candidate (by key) attaining best_ord when best_ord < base_ord.
    std::optional<ConjugationCandidate> improvement;
    std::size_t candidates_checked = 0;
};

SearchOutcome search_improvement(const Presentation& P, const PrimeInt& p, unsigned bound,
                                 std::uint64_t max_candidates = 200000);

enum class MinimalityStatus { CertifiedSemistable, SearchExhausted, Improved };

std::string to_string(MinimalityStatus s);

struct MinimalityCertificate {
    BigInt p;
    MinimalityStatus status = MinimalityStatus::SearchExhausted;
    unsigned bound = 0;
    // Normalized ord_p rho of the input.
    std::int64_t initial_ord = 0;
    // Normalized ord_p rho of `minimized`; equals new_ord when Improved.
    std::int64_t achieved_ord = 0;
    // Product of the improving conjugators (Improved only).
    std::optional<RationalMatrix> gamma;
    // minimized = primitive_integral(conjugate(input, gamma)).
    Presentation minimized;
    // True when achieved_ord is proven minimal: the minimized presentation is
    // semistable at p, or has good reduction there.
    bool certified = false;
    // False when the semistability test was skipped for budget reasons.
    bool semistability_checked = false;
    unsigned rounds = 0;
};

/// Semistable reduction certifies minimality at p. Otherwise searches the
/// candidate family, applies the best strict improvement and repeats until
/// the presentation is certified or no candidate improves it. Throws
/// DomainError for a non-morphism and BudgetError for oversized searches.
MinimalityCertificate certify_or_search_minimal(const Presentation& P, const PrimeInt& p,
                                                const MinimalityOptions& opts = {});

// Prime -> multiplicity, zero entries omitted.
using ResultantDivisor = std::map<BigInt, std::int64_t>;

struct DivisorReport {
    ResultantDivisor divisor;
    std::vector<MinimalityCertificate> certificates;
    // Part of |rho| left unfactored (1 when fully factored).
    BigInt unfactored = 1;
    BigInt integral_resultant;
};

/// Minimal resultant divisor: certify_or_search_minimal at each prime
/// dividing the resultant of the primitive integral presentation. At a prime
/// whose candidate family exceeds max_candidates the bound is lowered until
/// it fits; the certificate's bound says what was searched.
DivisorReport minimal_resultant_divisor(const Presentation& P, const MinimalityOptions& opts = {});

struct GlobalizationStep {
    BigInt p;
    MinimalityCertificate certificate;
    // Normalized ord_q rho at the other bad primes before and after the step.
    std::map<BigInt, std::int64_t> others_before;
    std::map<BigInt, std::int64_t> others_after;
    bool invariance_ok = true;
};

struct GlobalizationResult {
    Presentation presentation;
    std::vector<GlobalizationStep> steps;
    // Bad primes where only a search (no semistable certificate) was obtained.
    std::vector<BigInt> uncertified;
    BigInt unfactored = 1;
    bool invariance_ok = true;
};

/// Applies each prime's local improving conjugator in turn. Each has
/// determinant a power of its own prime, so every step is checked to leave
/// the valuations at the other bad primes unchanged.
GlobalizationResult globalize_over_Q(const Presentation& P, const MinimalityOptions& opts = {});

enum class PotentialGoodReduction { Good, NotEvenPotential, Unknown };

std::string to_string(PotentialGoodReduction s);

struct PotentialGoodReductionReport {
    PotentialGoodReduction status = PotentialGoodReduction::Unknown;
    MinimalityCertificate certificate;
    // Semistable presentation with ord_p rho > 0 (NotEvenPotential only).
    std::optional<Presentation> semistable_bad;
    // semistable_bad is conjugate(P, semistable_gamma) up to scalar.
    std::optional<RationalMatrix> semistable_gamma;
};

/// Good: minimized ord_p is 0. NotEvenPotential: some found presentation is
/// semistable at p with positive ord_p, which persists under any base
/// extension. Unknown otherwise.
PotentialGoodReductionReport potential_good_reduction_status(const Presentation& P, const PrimeInt& p,
                                                             const MinimalityOptions& opts = {});

} // namespace dynred
