#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dynred {

using BigInt = mpz_class;
using BigRational = mpq_class;

// Parses "a", "-a" or "a/b" into a canonical rational. Throws UsageError.
BigRational parse_rational(std::string_view text);
std::string to_string(const BigRational& x);
std::string to_string(const BigInt& x);

/// p-adic order of a rational. Zero has order +infinity, which compares
/// above every finite order.
class Valuation {
public:
    constexpr Valuation() = default;
    constexpr Valuation(std::int64_t v) : value_(v) {}

    static constexpr Valuation infinity() {
        Valuation v;
        v.infinite_ = true;
        return v;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }
    // Throws DomainError on +infinity.
    std::int64_t value() const;

    friend constexpr bool operator==(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
        if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
        if (a.infinite_) return std::strong_ordering::greater;
        if (b.infinite_) return std::strong_ordering::less;
        return a.value_ <=> b.value_;
    }

    // +infinity absorbs.
    friend constexpr Valuation operator+(const Valuation& a, const Valuation& b) {
        if (a.infinite_ || b.infinite_) return infinity();
        return Valuation(a.value_ + b.value_);
    }
    friend constexpr Valuation operator*(std::int64_t k, const Valuation& a) {
        if (a.infinite_) {
            if (k == 0) return Valuation(0);
            return infinity();
        }
        return Valuation(k * a.value_);
    }

    std::string str() const;

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// A rational prime. Primality is verified when the value is constructed.
class PrimeInt {
public:
    explicit PrimeInt(const BigInt& value);
    explicit PrimeInt(std::uint64_t value) : PrimeInt(BigInt(static_cast<unsigned long>(value))) {}

    const BigInt& value() const { return value_; }
    bool fits_u64() const;
    // Throws BudgetError if the prime does not fit in 64 bits.
    std::uint64_t as_u64() const;

    friend bool operator==(const PrimeInt& a, const PrimeInt& b) { return a.value_ == b.value_; }
    friend bool operator<(const PrimeInt& a, const PrimeInt& b) { return a.value_ < b.value_; }

private:
    BigInt value_;
};

std::ostream& operator<<(std::ostream& os, const PrimeInt& p);

/// Element of the prime field F_p, p < 2^63.
class FFElem {
public:
    FFElem(std::uint64_t residue, std::uint64_t modulus);

    std::uint64_t residue() const { return residue_; }
    std::uint64_t modulus() const { return modulus_; }
    bool is_zero() const { return residue_ == 0; }

    FFElem operator+(const FFElem& o) const;
    FFElem operator-(const FFElem& o) const;
    FFElem operator*(const FFElem& o) const;
    FFElem operator-() const;
    // Throws DomainError on zero.
    FFElem inverse() const;

    friend bool operator==(const FFElem& a, const FFElem& b) = default;

private:
    std::uint64_t residue_;
    std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FFElem& x);

// Deterministic for n < 3.3e24; GMP's BPSW test beyond that.
bool is_prime(const BigInt& n);

Valuation ord_p(const BigRational& x, const PrimeInt& p);
Valuation ord_p(const BigInt& x, const PrimeInt& p);
// Minimum of ord_p over the entries. Throws UsageError on an empty sequence.
Valuation ord_p_tuple(std::span<const BigRational> xs, const PrimeInt& p);

// Image of x in F_p. Throws DomainError if ord_p(x) < 0.
FFElem reduce_mod_p(const BigRational& x, const PrimeInt& p);

BigInt pow(const BigInt& base, unsigned long exponent);

} // namespace dynred
