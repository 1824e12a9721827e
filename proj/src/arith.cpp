#include "dynred/arith.hpp"

#include <array>
#include <sstream>

#include "dynred/errors.hpp"

namespace dynred {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

BigInt parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!is_digits(s)) throw UsageError("not an integer: '" + std::string(s) + "'");
    BigInt v(std::string(s), 10);
    return negative ? BigInt(-v) : v;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

} // namespace

BigRational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) throw UsageError("bad denominator in '" + std::string(text) + "'");
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw UsageError("zero denominator in '" + std::string(text) + "'");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& x) { return x.get_str(10); }
std::string to_string(const BigInt& x) { return x.get_str(10); }

std::int64_t Valuation::value() const {
    if (infinite_) throw DomainError("valuation is +infinity");
    return value_;
}

std::string Valuation::str() const { return infinite_ ? std::string("inf") : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, const Valuation& v) { return os << v.str(); }

PrimeInt::PrimeInt(const BigInt& value) : value_(value) {
    if (!is_prime(value_)) throw UsageError(value_.get_str() + " is not prime");
}

bool PrimeInt::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 63; }

std::uint64_t PrimeInt::as_u64() const {
    if (!fits_u64()) throw BudgetError("prime " + value_.get_str() + " exceeds 63 bits");
    return static_cast<std::uint64_t>(mpz_get_ui(value_.get_mpz_t()));
}

std::ostream& operator<<(std::ostream& os, const PrimeInt& p) { return os << p.value().get_str(); }

FFElem::FFElem(std::uint64_t residue, std::uint64_t modulus) : residue_(residue % modulus), modulus_(modulus) {}

FFElem FFElem::operator+(const FFElem& o) const {
    std::uint64_t s = residue_ + o.residue_;
    if (s >= modulus_) s -= modulus_;
    return FFElem(s, modulus_);
}

FFElem FFElem::operator-(const FFElem& o) const {
    return FFElem(residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + modulus_ - o.residue_, modulus_);
}

FFElem FFElem::operator*(const FFElem& o) const { return FFElem(mulmod(residue_, o.residue_, modulus_), modulus_); }

FFElem FFElem::operator-() const { return FFElem(residue_ == 0 ? 0 : modulus_ - residue_, modulus_); }

FFElem FFElem::inverse() const {
    if (residue_ == 0) throw DomainError("inverse of zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = residue_, e = modulus_ - 2;
    while (e > 0) {
        if (e & 1) result = mulmod(result, base, modulus_);
        base = mulmod(base, base, modulus_);
        e >>= 1;
    }
    return FFElem(result, modulus_);
}

std::ostream& operator<<(std::ostream& os, const FFElem& x) { return os << x.residue(); }

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static constexpr std::array<unsigned long, 13> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
    for (unsigned long b : bases) {
        if (n == b) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), b)) return false;
    }
    // Miller-Rabin with the first 13 prime bases is deterministic below 3.3e24.
    static const BigInt deterministic_limit("3317044064679887385961981", 10);
    if (n >= deterministic_limit) return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;

    BigInt d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    BigInt n_minus_1 = n - 1;
    for (unsigned long b : bases) {
        BigInt x;
        BigInt base(b);
        mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        if (x == 1 || x == n_minus_1) continue;
        bool composite = true;
        for (unsigned long r = 1; r < s; ++r) {
            x = x * x % n;
            if (x == n_minus_1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Valuation ord_p(const BigInt& x, const PrimeInt& p) {
    if (x == 0) return Valuation::infinity();
    BigInt rest;
    return Valuation(static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.value().get_mpz_t())));
}

Valuation ord_p(const BigRational& x, const PrimeInt& p) {
    if (x == 0) return Valuation::infinity();
    return Valuation(ord_p(BigInt(x.get_num()), p).value() - ord_p(BigInt(x.get_den()), p).value());
}

Valuation ord_p_tuple(std::span<const BigRational> xs, const PrimeInt& p) {
    if (xs.empty()) throw UsageError("ord_p_tuple of an empty sequence");
    Valuation best = Valuation::infinity();
    for (const auto& x : xs) best = std::min(best, ord_p(x, p));
    return best;
}

FFElem reduce_mod_p(const BigRational& x, const PrimeInt& p) {
    if (ord_p(x, p) < Valuation(0))
        throw DomainError(x.get_str() + " is not integral at " + p.value().get_str());
    const std::uint64_t m = p.as_u64();
    BigInt num, den;
    mpz_fdiv_r(num.get_mpz_t(), x.get_num_mpz_t(), p.value().get_mpz_t());
    mpz_invert(den.get_mpz_t(), x.get_den_mpz_t(), p.value().get_mpz_t());
    return FFElem(mpz_get_ui(num.get_mpz_t()), m) * FFElem(mpz_get_ui(den.get_mpz_t()), m);
}

BigInt pow(const BigInt& base, unsigned long exponent) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

} // namespace dynred
