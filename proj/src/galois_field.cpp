#include "dynred/galois_field.hpp"

#include <string>

#include "dynred/arith.hpp"
#include "dynred/errors.hpp"

namespace dynred {

namespace {

constexpr std::uint32_t kMaxExtensionOrder = 4096;

using Poly = std::vector<std::uint32_t>;  // low coefficient first

Poly digits(std::uint32_t x, std::uint32_t p, unsigned k) {
    Poly d(k, 0);
    for (unsigned j = 0; j < k; ++j) {
        d[j] = x % p;
        x /= p;
    }
    return d;
}

std::uint32_t encode(const Poly& d, std::uint32_t p) {
    std::uint32_t x = 0;
    for (std::size_t j = d.size(); j-- > 0;) x = x * p + d[j];
    return x;
}

// Remainder of a modulo a monic polynomial m.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        const std::uint32_t c = a[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) a[i - dm + j] = (a[i - dm + j] + (p - c) * m[j]) % p;
    }
    a.resize(std::min(a.size(), dm));
    return a;
}

bool is_zero_poly(const Poly& a) {
    for (auto c : a)
        if (c) return false;
    return true;
}

// Monic polynomial of degree k with no monic factor of degree 1..k/2.
bool is_irreducible(const Poly& m, std::uint32_t p) {
    const unsigned k = static_cast<unsigned>(m.size() - 1);
    for (unsigned deg = 1; deg <= k / 2; ++deg) {
        std::uint32_t count = 1;
        for (unsigned i = 0; i < deg; ++i) count *= p;
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly f = digits(low, p, deg);
            f.push_back(1);
            if (is_zero_poly(poly_mod(m, f, p))) return false;
        }
    }
    return true;
}

} // namespace

GaloisField::GaloisField(std::uint32_t p, unsigned k) : p_(p), k_(k), q_(1) {
    if (k == 0) throw UsageError("extension degree must be >= 1");
    if (!is_prime(BigInt(static_cast<unsigned long>(p)))) throw UsageError(std::to_string(p) + " is not prime");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
        q *= p;
        if (k > 1 && q > kMaxExtensionOrder) throw BudgetError("extension field too large for table arithmetic");
        if (q > 0xffffffffULL) throw BudgetError("field order exceeds 32 bits");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (k == 1) return;

    // Smallest monic irreducible of degree k in the base-p encoding order.
    for (std::uint32_t low = 0;; ++low) {
        Poly m = digits(low, p, k);
        m.push_back(1);
        if (m[0] != 0 && is_irreducible(m, p)) {
            modulus_ = m;
            break;
        }
    }

    add_table_.resize(std::size_t(q_) * q_);
    mul_table_.resize(std::size_t(q_) * q_);
    neg_table_.resize(q_);
    inv_table_.assign(q_, 0);
    std::vector<Poly> d(q_);
    for (std::uint32_t a = 0; a < q_; ++a) d[a] = digits(a, p, k);
    for (std::uint32_t a = 0; a < q_; ++a) {
        Poly n(k);
        for (unsigned j = 0; j < k; ++j) n[j] = (p - d[a][j]) % p;
        neg_table_[a] = encode(n, p);
        for (std::uint32_t b = 0; b < q_; ++b) {
            Poly s(k), prod(2 * k - 1, 0);
            for (unsigned j = 0; j < k; ++j) s[j] = (d[a][j] + d[b][j]) % p;
            for (unsigned i = 0; i < k; ++i)
                for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + d[a][i] * d[b][j]) % p;
            add_table_[std::size_t(a) * q_ + b] = encode(s, p);
            const Elem m = encode(poly_mod(prod, modulus_, p), p);
            mul_table_[std::size_t(a) * q_ + b] = m;
            if (m == 1) inv_table_[a] = b;
        }
    }
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
    if (k_ == 1) {
        std::uint64_t s = std::uint64_t(a) + b;
        return static_cast<Elem>(s >= p_ ? s - p_ : s);
    }
    return add_table_[std::size_t(a) * q_ + b];
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    if (k_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
    if (k_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);
    return mul_table_[std::size_t(a) * q_ + b];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw DomainError("inverse of zero in a finite field");
    if (k_ > 1) return inv_table_[a];
    return static_cast<Elem>(FFElem(a, p_).inverse().residue());
}

} // namespace dynred
