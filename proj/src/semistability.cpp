#include "dynred/semistability.hpp"

#include <algorithm>
#include <numeric>

#include "dynred/errors.hpp"
#include "dynred/forms.hpp"

namespace dynred {

namespace {

using FieldMatrix = Matrix<std::uint32_t>;

std::uint32_t field_det(const GaloisField& F, FieldMatrix a) {
    const std::size_t n = a.rows();
    std::uint32_t result = F.one();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && F.is_zero(a(piv, k))) ++piv;
        if (piv == n) return F.zero();
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            result = F.neg(result);
        }
        result = F.mul(result, a(k, k));
        const auto inv = F.inv(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const auto f = F.mul(a(i, k), inv);
            if (F.is_zero(f)) continue;
            for (std::size_t j = k; j < n; ++j) a(i, j) = F.sub(a(i, j), F.mul(f, a(k, j)));
        }
    }
    return result;
}

FieldMatrix field_adjugate(const GaloisField& F, const FieldMatrix& m) {
    const std::size_t n = m.rows();
    FieldMatrix adj(n, n, F.zero());
    if (n == 1) {
        adj(0, 0) = F.one();
        return adj;
    }
    FieldMatrix minor(n - 1, n - 1);
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
            const auto cof = field_det(F, minor);
            adj(c, r) = (r + c) % 2 ? F.neg(cof) : cof;
        }
    return adj;
}

// Columns are filled from last to first. Column c has its pivot (first
// nonzero entry, equal to 1) in a row not used by later columns and zeros in
// the pivot rows of later columns.
void build_flags(const GaloisField& F, std::size_t nv, int col, std::vector<bool>& used, FieldMatrix& g,
                 std::vector<FieldMatrix>& out) {
    if (col < 0) {
        out.push_back(g);
        return;
    }
    const std::size_t c = static_cast<std::size_t>(col);
    for (std::size_t piv = 0; piv < nv; ++piv) {
        if (used[piv]) continue;
        std::vector<std::size_t> free_rows;
        for (std::size_t r = piv + 1; r < nv; ++r)
            if (!used[r]) free_rows.push_back(r);
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < free_rows.size(); ++i) combos *= F.order();
        for (std::size_t r = 0; r < nv; ++r) g(r, c) = F.zero();
        g(piv, c) = F.one();
        used[piv] = true;
        for (std::uint64_t code = 0; code < combos; ++code) {
            std::uint64_t rest = code;
            for (std::size_t r : free_rows) {
                g(r, c) = static_cast<std::uint32_t>(rest % F.order());
                rest /= F.order();
            }
            build_flags(F, nv, col - 1, used, g, out);
        }
        used[piv] = false;
    }
}


std::vector<IntVector> dominance_rows(std::size_t nv) {
    std::vector<IntVector> rows;
    for (std::size_t j = 0; j + 1 < nv; ++j) {
        IntVector row(nv, 0);
        row[j] = 1;
        row[j + 1] = -1;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<IntVector> support_rows(const std::vector<WeightFunctional>& weights, const FieldPoint& y) {
    std::vector<IntVector> rows;
    for (std::size_t k = 0; k < y.size(); ++k)
        if (y[k] != 0) rows.push_back(weights[k].weight);
    return rows;
}

void check_budget(unsigned n, std::uint64_t q, const SemistabilityOptions& opts) {
    if (n > opts.max_dimension || n + 1 > kMaxConeDimension)
        throw BudgetError("semistability test supports n <= " + std::to_string(opts.max_dimension));
    const std::uint64_t flags = flag_count(n, q);
    if (flags > opts.max_flags)
        throw BudgetError("flag variety over F_" + std::to_string(q) + " has " + std::to_string(flags) +
                          " points; budget is " + std::to_string(opts.max_flags));
}

} // namespace

std::vector<WeightFunctional> coordinate_weights(unsigned n, unsigned d) {
    const auto& table = monomial_table(n + 1, d);
    std::vector<WeightFunctional> out;
    out.reserve((n + 1) * table.size());
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t m = 0; m < table.size(); ++m) {
            WeightFunctional w;
            w.form = i;
            w.exponents = table.exponents(m);
            w.weight.assign(w.exponents.begin(), w.exponents.end());
            w.weight[i] -= 1;
            out.push_back(std::move(w));
        }
    return out;
}

std::uint64_t flag_count(unsigned n, std::uint64_t q) {
    std::uint64_t total = 1;
    for (unsigned k = 1; k <= n; ++k) {
        std::uint64_t points = 0, qk = 1;
        for (unsigned i = 0; i <= k; ++i) {
            points += qk;
            qk *= q;
        }
        total *= points;
    }
    return total;
}

std::vector<FieldMatrix> flag_representatives(const GaloisField& F, unsigned n) {
    const std::size_t nv = n + 1;
    std::vector<FieldMatrix> out;
    std::vector<bool> used(nv, false);
    FieldMatrix g(nv, nv, 0);
    build_flags(F, nv, static_cast<int>(n), used, g, out);
    std::sort(out.begin(), out.end(), [](const FieldMatrix& a, const FieldMatrix& b) { return a.data() < b.data(); });
    return out;
}

FieldPoint conjugate_point(const GaloisField& F, unsigned n, unsigned d, const FieldPoint& x, const FieldMatrix& g) {
    return conjugate_forms(F, n + 1, d, x, g, field_adjugate(F, g));
}

SemistabilityResult is_semistable(const GaloisField& F, unsigned n, unsigned d, const FieldPoint& x,
                                  const SemistabilityOptions& opts) {
    check_budget(n, F.order(), opts);
    if (std::all_of(x.begin(), x.end(), [](std::uint32_t c) { return c == 0; }))
        throw UsageError("the zero vector is not a point of projective space");

    const auto weights = coordinate_weights(n, d);
    const auto dominance = dominance_rows(n + 1);
    const auto flags = flag_representatives(F, n);

    SemistabilityResult result;
    std::vector<FieldPoint> conjugates;
    conjugates.reserve(flags.size());
    for (const auto& g : flags) {
        conjugates.push_back(conjugate_point(F, n, d, x, g));
        const auto rows = support_rows(weights, conjugates.back());
        if (auto r = cone_feasible(rows, dominance)) {
            result.witness = OnePSWitness{F.characteristic(), F.extension_degree(), g, *r};
            return result;
        }
    }
    result.semistable = true;
    if (opts.classify_strict) {
        // Some nonzero dominant r with every weight >= 0; r != 0 iff r_0 > r_n.
        IntVector spread(n + 1, 0);
        spread.front() = 1;
        spread.back() -= 1;
        const std::vector<IntVector> strict{spread};
        bool strict_ss = false;
        for (const auto& y : conjugates) {
            auto weak = support_rows(weights, y);
            weak.insert(weak.end(), dominance.begin(), dominance.end());
            if (cone_feasible(strict, weak)) {
                strict_ss = true;
                break;
            }
        }
        result.strictly_semistable = strict_ss;
    }
    return result;
}

SemistabilityResult is_semistable(const ReducedPoint& x, const SemistabilityOptions& opts) {
    if (x.coords.empty()) throw UsageError("empty reduced point");
    const std::uint64_t p = x.prime();
    if (p > 0xffffffffULL) throw BudgetError("prime too large for flag enumeration");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < opts.extension_degree; ++i) q *= p;
    check_budget(x.n, q, opts);
    const GaloisField F(static_cast<std::uint32_t>(p), opts.extension_degree);
    FieldPoint pt;
    pt.reserve(x.coords.size());
    for (const auto& c : x.coords) pt.push_back(F.from_residue(c.residue()));
    return is_semistable(F, x.n, x.d, pt, opts);
}

SemistabilityResult is_semistable_presentation(const Presentation& P, const PrimeInt& p,
                                               const SemistabilityOptions& opts) {
    return is_semistable(reduce_at(normalize_at(P, p)), opts);
}

bool verify_witness(const ReducedPoint& x, const OnePSWitness& w) {
    if (w.r.size() != x.n + 1 || std::accumulate(w.r.begin(), w.r.end(), std::int64_t(0)) != 0) return false;
    if (w.p != x.prime()) return false;
    const GaloisField F(w.p, w.field_degree);
    if (w.flag_matrix.rows() != x.n + 1 || w.flag_matrix.cols() != x.n + 1) return false;
    if (F.is_zero(field_det(F, w.flag_matrix))) return false;
    FieldPoint pt;
    for (const auto& c : x.coords) pt.push_back(F.from_residue(c.residue()));
    const FieldPoint y = conjugate_point(F, x.n, x.d, pt, w.flag_matrix);
    const auto weights = coordinate_weights(x.n, x.d);
    bool any = false;
    for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] == 0) continue;
        any = true;
        std::int64_t s = 0;
        for (std::size_t j = 0; j < w.r.size(); ++j) s += weights[k].weight[j] * w.r[j];
        if (s < 1) return false;
    }
    return any;
}

} // namespace dynred
