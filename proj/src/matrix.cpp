#include "dynred/matrix.hpp"

#include <utility>

namespace dynred {

RationalMatrix identity_matrix(std::size_t m) { return RationalMatrix::identity(m, BigRational(0), BigRational(1)); }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols() != b.rows()) throw UsageError("matrix product dimension mismatch");
    RationalMatrix c(a.rows(), b.cols(), BigRational(0));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RationalMatrix operator*(const BigRational& c, const RationalMatrix& a) {
    RationalMatrix r = a;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= c;
    return r;
}

BigInt det(const IntMatrix& input) {
    if (!input.is_square()) throw UsageError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) return BigInt(1);
    IntMatrix a = input;
    BigInt prev_pivot = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a(swap_row, k) == 0) ++swap_row;
            if (swap_row == n) return BigInt(0);
            for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a(i, k) = 0;
        }
        prev_pivot = a(k, k);
    }
    return sign > 0 ? BigInt(a(n - 1, n - 1)) : BigInt(-a(n - 1, n - 1));
}

BigRational det(const RationalMatrix& m) {
    if (!m.is_square()) throw UsageError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    IntMatrix scaled(n, n);
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) scaled(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }
    BigRational r(det(scaled), scale);
    r.canonicalize();
    return r;
}

FFElem det(const Matrix<FFElem>& input) {
    if (!input.is_square()) throw UsageError("determinant of a non-square matrix");
    const std::size_t n = input.rows();
    if (n == 0) throw UsageError("determinant of an empty F_p matrix has no modulus");
    Matrix<FFElem> a = input;
    const std::uint64_t p = a(0, 0).modulus();
    FFElem result(1, p);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a(piv, k).is_zero()) ++piv;
        if (piv == n) return FFElem(0, p);
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            result = -result;
        }
        result = result * a(k, k);
        const FFElem inv = a(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            const FFElem f = a(i, k) * inv;
            if (f.is_zero()) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) = a(i, j) - f * a(k, j);
        }
    }
    return result;
}

RationalMatrix adjugate(const RationalMatrix& m) {
    if (!m.is_square()) throw UsageError("adjugate of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix adj(n, n, BigRational(0));
    if (n == 1) {
        adj(0, 0) = 1;
        return adj;
    }
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t i = 0, mi = 0; i < n; ++i) {
                if (i == r) continue;
                for (std::size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(mi, mj++) = m(i, j);
                }
                ++mi;
            }
            BigRational cof = det(minor);
            if ((r + c) % 2 == 1) cof = -cof;
            adj(c, r) = cof;
        }
    return adj;
}

Valuation ord_p(const RationalMatrix& m, const PrimeInt& p) {
    Valuation best = Valuation::infinity();
    for (const auto& x : m.data()) best = std::min(best, ord_p(x, p));
    return best;
}

std::ostream& operator<<(std::ostream& os, const RationalMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
        os << ']';
    }
    return os << ']';
}

} // namespace dynred
