#pragma once

#include <cstdint>
#include <vector>

namespace dynred {

/// The finite field F_q, q = p^k, with elements encoded as integers in
/// [0, q). Digit j of the base-p expansion is the coefficient of t^j modulo a
/// fixed monic irreducible polynomial, so 0..p-1 is the prime subfield.
///
/// Satisfies the ring interface used by the form engine (zero, one, add,
/// sub, mul, neg, is_zero).
class GaloisField {
public:
    using Elem = std::uint32_t;

    // Throws BudgetError when q is too large for table-driven arithmetic.
    GaloisField(std::uint32_t p, unsigned k);

    std::uint32_t characteristic() const { return p_; }
    unsigned extension_degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    // Monic irreducible modulus, low coefficient first (empty when k = 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem from_residue(std::uint64_t r) const { return static_cast<Elem>(r % p_); }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    // Throws DomainError on zero.
    Elem inv(Elem a) const;

private:
    std::uint32_t p_;
    unsigned k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Elem> add_table_, mul_table_, neg_table_, inv_table_;
};

} // namespace dynred
