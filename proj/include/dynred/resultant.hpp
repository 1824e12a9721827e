#pragma once

#include <cstdint>

#include "dynred/arith.hpp"
#include "dynred/matrix.hpp"

namespace dynred {

class Presentation;

// Size limits for exact resultant computation.
inline constexpr std::size_t kMaxPresentationCoefficients = 60;
inline constexpr std::size_t kMaxMacaulayDimension = 400;

/// Resultant of two binary forms of degree d via the 2d x 2d Sylvester
/// matrix. Res(x^d, y^d) = 1. Requires n = 1.
BigRational sylvester_resultant(const Presentation& P);

/// Macaulay resultant of the n+1 forms: det(M) / det(M') in degree
/// (n+1)(d-1)+1. When det(M') vanishes the forms are perturbed to
/// F_i + t x_i^d and the exact quotient polynomial in t is interpolated at
/// t = 0. Res(x_0^d, ..., x_n^d) = 1. Throws BudgetError beyond the size
/// limits above.
BigRational macaulay_resultant(const Presentation& P);

// Sylvester for n = 1, Macaulay otherwise.
BigRational resultant(const Presentation& P);

// Total degree of the resultant in the coefficients: (n+1) d^n.
std::uint64_t resultant_degree(unsigned n, unsigned d);

/// ord_p data of a presentation. ord_R_phi = ord_rho - (n+1) d^n min_coeff_ord,
/// which does not depend on how the presentation is scaled.
struct ResultantValuation {
    BigInt p;
    Valuation ord_rho;
    Valuation min_coeff_ord;
    Valuation ord_R_phi;
};

ResultantValuation valuation_report(const Presentation& P, const PrimeInt& p);

/// Both sides of the conjugation valuation identities for (P, gamma, p):
///   ord rho(a^g) = ord rho(a) + (n+d) d^n ord(det g)
///   min ord(a^g) >= min ord(a) + (d+1) ord(g)
/// with ord(g) the minimum entry valuation of g.
struct ConjugationValuationCheck {
    Valuation lhs;
    Valuation rhs_formula;
    bool equality_holds = false;
    Valuation min_ord_conjugate;
    Valuation min_ord_bound;
    bool inequality_holds = false;
    bool holds = false;
};

// Throws DomainError if gamma is singular.
ConjugationValuationCheck check_conjugation_valuation(const Presentation& P, const RationalMatrix& gamma,
                                                      const PrimeInt& p);

} // namespace dynred
