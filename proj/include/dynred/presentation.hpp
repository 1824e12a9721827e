#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dynred/arith.hpp"
#include "dynred/matrix.hpp"
#include "dynred/monomial.hpp"

namespace dynred {

/// A degree-d endomorphism of P^n written as n+1 homogeneous forms. Form i
/// occupies coefficients [i*D, (i+1)*D), D = C(n+d, d), in the monomial order
/// of monomial_table(n+1, d). Represents a point of P^N, N = (n+1)D - 1.
///
/// No morphism check is made; see is_morphism.
class Presentation {
public:
    // Throws UsageError on a wrong coefficient count or all-zero input.
    Presentation(unsigned n, unsigned d, std::vector<BigRational> coeffs);

    unsigned dim() const { return n_; }
    unsigned degree() const { return d_; }
    std::size_t nvars() const { return n_ + 1; }
    // D: monomials per form.
    std::size_t form_size() const { return coeffs_.size() / (n_ + 1); }
    // N: dimension of the ambient projective space.
    std::size_t ambient_dim() const { return coeffs_.size() - 1; }

    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    std::span<const BigRational> form(std::size_t i) const {
        return std::span<const BigRational>(coeffs_).subspan(i * form_size(), form_size());
    }
    const BigRational& coeff(std::size_t i, std::span<const int> exponents) const;
    const MonomialTable& monomials() const { return monomial_table(n_ + 1, d_); }

    // Exact equality of coefficient vectors (not projective equality).
    friend bool operator==(const Presentation&, const Presentation&) = default;

private:
    unsigned n_;
    unsigned d_;
    std::vector<BigRational> coeffs_;
};

using Term = std::pair<BigRational, Exponents>;

Presentation make_presentation(unsigned n, unsigned d, std::vector<BigRational> coeffs);
// Builds from sparse forms; unlisted monomials are zero, repeated ones add.
Presentation presentation_from_terms(unsigned n, unsigned d, const std::vector<std::vector<Term>>& forms);

// True when both describe the same point of P^N.
bool projectively_equal(const Presentation& a, const Presentation& b);

bool is_morphism(const Presentation& P);

/// The presentation of the conjugate: substitute x -> gamma x into every
/// form, then combine the results with adjugate(gamma). Throws DomainError if
/// gamma is singular.
Presentation conjugate(const Presentation& P, const RationalMatrix& gamma);

// Overall rational multiple.
Presentation scaled(const Presentation& P, const BigRational& c);

// Unique integral representative with coprime coefficients whose first
// nonzero coefficient is positive. Normalized at every prime at once.
Presentation primitive_integral(const Presentation& P);

/// Presentation normalized at p: all coefficients p-integral, at least one a
/// p-unit.
class NormalizedPresentation {
public:
    const Presentation& base() const { return base_; }
    const PrimeInt& prime() const { return p_; }

private:
    NormalizedPresentation(Presentation base, PrimeInt p) : base_(std::move(base)), p_(std::move(p)) {}
    friend NormalizedPresentation normalize_at(const Presentation& P, const PrimeInt& p);

    Presentation base_;
    PrimeInt p_;
};

/// Multiplies by p^(-m), m the minimum coefficient valuation.
NormalizedPresentation normalize_at(const Presentation& P, const PrimeInt& p);

/// Reduction of a normalized presentation: a point of P^N(F_p).
struct ReducedPoint {
    unsigned n = 0;
    unsigned d = 0;
    std::vector<FFElem> coords;

    std::uint64_t prime() const { return coords.front().modulus(); }
    bool is_zero() const;
    friend bool operator==(const ReducedPoint&, const ReducedPoint&) = default;
};

ReducedPoint reduce_at(const NormalizedPresentation& P);

// Smallest non-negative integer lift of a reduced point.
Presentation lift(const ReducedPoint& x);

} // namespace dynred
