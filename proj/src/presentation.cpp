#include "dynred/presentation.hpp"

#include <algorithm>

#include "dynred/errors.hpp"
#include "dynred/forms.hpp"
#include "dynred/resultant.hpp"

namespace dynred {

Presentation::Presentation(unsigned n, unsigned d, std::vector<BigRational> coeffs)
    : n_(n), d_(d), coeffs_(std::move(coeffs)) {
    if (n < 1) throw UsageError("dimension n must be >= 1");
    if (d < 1) throw UsageError("degree d must be >= 1");
    const std::size_t expected = (n + 1) * binomial(n + d, d);
    if (coeffs_.size() != expected)
        throw UsageError("expected " + std::to_string(expected) + " coefficients for n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ", got " + std::to_string(coeffs_.size()));
    for (auto& c : coeffs_) c.canonicalize();
    if (std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigRational& c) { return c == 0; }))
        throw UsageError("presentation has all coefficients zero");
}

const BigRational& Presentation::coeff(std::size_t i, std::span<const int> exponents) const {
    return coeffs_.at(i * form_size() + monomials().index_of(exponents));
}

Presentation make_presentation(unsigned n, unsigned d, std::vector<BigRational> coeffs) {
    return Presentation(n, d, std::move(coeffs));
}

Presentation presentation_from_terms(unsigned n, unsigned d, const std::vector<std::vector<Term>>& forms) {
    if (n < 1 || d < 1) throw UsageError("n and d must be >= 1");
    if (forms.size() != n + 1)
        throw UsageError("expected " + std::to_string(n + 1) + " forms, got " + std::to_string(forms.size()));
    const auto& table = monomial_table(n + 1, d);
    std::vector<BigRational> coeffs((n + 1) * table.size(), BigRational(0));
    for (std::size_t i = 0; i < forms.size(); ++i)
        for (const auto& [c, e] : forms[i]) coeffs[i * table.size() + table.index_of(e)] += c;
    return Presentation(n, d, std::move(coeffs));
}

bool projectively_equal(const Presentation& a, const Presentation& b) {
    if (a.dim() != b.dim() || a.degree() != b.degree()) return false;
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::size_t f = 0;
    while (f < ca.size() && ca[f] == 0) ++f;
    if (f == ca.size() || cb[f] == 0) return false;
    for (std::size_t k = 0; k < ca.size(); ++k)
        if (ca[k] * cb[f] != cb[k] * ca[f]) return false;
    return true;
}

bool is_morphism(const Presentation& P) { return resultant(P) != 0; }

Presentation conjugate(const Presentation& P, const RationalMatrix& gamma) {
    if (gamma.rows() != P.nvars() || gamma.cols() != P.nvars())
        throw UsageError("conjugating matrix must be " + std::to_string(P.nvars()) + "x" + std::to_string(P.nvars()));
    if (det(gamma) == 0) throw DomainError("conjugating matrix is singular");
    return Presentation(P.dim(), P.degree(),
                        conjugate_forms(RationalRing{}, P.nvars(), P.degree(), P.coeffs(), gamma, adjugate(gamma)));
}

Presentation scaled(const Presentation& P, const BigRational& c) {
    if (c == 0) throw UsageError("scaling a presentation by zero");
    std::vector<BigRational> out = P.coeffs();
    for (auto& x : out) x *= c;
    return Presentation(P.dim(), P.degree(), std::move(out));
}

Presentation primitive_integral(const Presentation& P) {
    BigInt den = 1, num = 0;
    for (const auto& c : P.coeffs()) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    }
    BigRational factor(den, num);
    factor.canonicalize();
    for (const auto& c : P.coeffs())
        if (c != 0) {
            if (c < 0) factor = -factor;
            break;
        }
    return scaled(P, factor);
}

NormalizedPresentation normalize_at(const Presentation& P, const PrimeInt& p) {
    const Valuation m = ord_p_tuple(P.coeffs(), p);
    if (m == Valuation(0)) return NormalizedPresentation(P, p);
    const std::int64_t k = m.value();
    BigRational factor = k > 0 ? BigRational(1, pow(p.value(), static_cast<unsigned long>(k)))
                               : BigRational(pow(p.value(), static_cast<unsigned long>(-k)));
    factor.canonicalize();
    return NormalizedPresentation(scaled(P, factor), p);
}

bool ReducedPoint::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const FFElem& x) { return x.is_zero(); });
}

ReducedPoint reduce_at(const NormalizedPresentation& P) {
    ReducedPoint x;
    x.n = P.base().dim();
    x.d = P.base().degree();
    x.coords.reserve(P.base().coeffs().size());
    for (const auto& c : P.base().coeffs()) x.coords.push_back(reduce_mod_p(c, P.prime()));
    return x;
}

Presentation lift(const ReducedPoint& x) {
    std::vector<BigRational> coeffs;
    coeffs.reserve(x.coords.size());
    for (const auto& c : x.coords) coeffs.emplace_back(BigInt(static_cast<unsigned long>(c.residue())));
    return Presentation(x.n, x.d, std::move(coeffs));
}

} // namespace dynred
