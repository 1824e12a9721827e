#include "dynred/minimality.hpp"

#include <algorithm>

#include "dynred/errors.hpp"
#include "dynred/resultant.hpp"

namespace dynred {

namespace {

RationalMatrix swap_matrix() { return RationalMatrix{{0, 1}, {1, 0}}; }

std::uint64_t checked_pow(std::uint64_t p, unsigned e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > cap / p) return cap + 1;
        r *= p;
    }
    return r;
}

std::vector<ConjugationCandidate> binary_candidates(const PrimeInt& p, unsigned bound, std::uint64_t cap) {
    const std::uint64_t pv = p.as_u64();
    std::uint64_t total = 0;
    for (unsigned a = 0; a <= bound; ++a) {
        total += 2 * checked_pow(pv, a, cap);
        if (total > cap) throw BudgetError("candidate family exceeds " + std::to_string(cap) + " matrices");
    }
    const RationalMatrix W = swap_matrix();
    std::vector<ConjugationCandidate> out;
    out.reserve(total);
    for (int e = 0; e <= 1; ++e)
        for (unsigned a = 0; a <= bound; ++a) {
            const std::uint64_t pa = checked_pow(pv, a, cap);
            for (std::uint64_t b = 0; b < pa; ++b) {
                RationalMatrix M{{BigRational(BigInt(static_cast<unsigned long>(pa))),
                                  BigRational(BigInt(static_cast<unsigned long>(b)))},
                                 {0, 1}};
                if (e) M = W * M * W;
                out.push_back({std::move(M),
                               "swap=" + std::to_string(e) + " alpha=" + std::to_string(a) + " beta=" + std::to_string(b),
                               {e, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)}});
            }
        }
    return out;
}

void hermite_fill(std::size_t nv, const std::vector<unsigned>& alpha, std::uint64_t pv, std::size_t slot,
                  std::vector<std::pair<std::size_t, std::size_t>>& cells, RationalMatrix& H,
                  std::vector<std::int64_t>& key, std::vector<ConjugationCandidate>& out, bool all_positive) {
    if (slot == cells.size()) {
        if (all_positive) {
            bool divisible = true;
            for (const auto& [i, j] : cells)
                if (H(i, j).get_num() % pv != 0) divisible = false;
            if (divisible) return;  // p times a smaller member
        }
        std::string desc = "alpha=(";
        for (std::size_t i = 0; i < nv; ++i) desc += (i ? "," : "") + std::to_string(alpha[i]);
        desc += ")";
        for (const auto& [i, j] : cells) desc += " h" + std::to_string(i) + std::to_string(j) + "=" + H(i, j).get_str();
        out.push_back({H, desc, key});
        return;
    }
    const auto [i, j] = cells[slot];
    std::uint64_t range = 1;
    for (unsigned k = 0; k < alpha[i]; ++k) range *= pv;
    for (std::uint64_t v = 0; v < range; ++v) {
        H(i, j) = BigRational(BigInt(static_cast<unsigned long>(v)));
        key.push_back(static_cast<std::int64_t>(v));
        hermite_fill(nv, alpha, pv, slot + 1, cells, H, key, out, all_positive);
        key.pop_back();
    }
}

std::vector<ConjugationCandidate> hermite_candidates(unsigned n, const PrimeInt& p, unsigned bound, std::uint64_t cap) {
    const std::size_t nv = n + 1;
    const std::uint64_t pv = p.as_u64();
    std::vector<std::vector<unsigned>> alphas;
    std::vector<unsigned> alpha(nv, 0);
    std::uint64_t total = 0;
    while (true) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < nv; ++i) {
            count *= checked_pow(pv, alpha[i] * static_cast<unsigned>(nv - 1 - i), cap);
            if (count > cap) break;
        }
        total += count;
        if (total > cap) throw BudgetError("candidate family exceeds " + std::to_string(cap) + " matrices");
        alphas.push_back(alpha);
        std::size_t k = nv;
        while (k > 0 && alpha[k - 1] == bound) alpha[--k] = 0;
        if (k == 0) break;
        ++alpha[k - 1];
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j) cells.emplace_back(i, j);

    std::vector<ConjugationCandidate> out;
    for (const auto& a : alphas) {
        RationalMatrix H(nv, nv, BigRational(0));
        std::vector<std::int64_t> key(a.begin(), a.end());
        for (std::size_t i = 0; i < nv; ++i) H(i, i) = BigRational(pow(p.value(), a[i]));
        const bool all_positive = std::all_of(a.begin(), a.end(), [](unsigned x) { return x > 0; });
        hermite_fill(nv, a, pv, 0, cells, H, key, out, all_positive);
    }
    return out;
}

std::int64_t normalized_ord(const Presentation& P, const PrimeInt& p) {
    return valuation_report(P, p).ord_R_phi.value();
}

} // namespace

std::vector<ConjugationCandidate> conjugation_candidates(unsigned n, const PrimeInt& p, unsigned bound,
                                                         std::uint64_t max_candidates) {
    if (n == 1) return binary_candidates(p, bound, max_candidates);
    return hermite_candidates(n, p, bound, max_candidates);
}

SearchOutcome search_improvement(const Presentation& P, const PrimeInt& p, unsigned bound,
                                 std::uint64_t max_candidates) {
    SearchOutcome out;
    out.base_ord = normalized_ord(P, p);
    out.best_ord = out.base_ord;
    for (auto& c : conjugation_candidates(P.dim(), p, bound, max_candidates)) {
        ++out.candidates_checked;
        const std::int64_t ord = normalized_ord(conjugate(P, c.gamma), p);
        if (ord < out.best_ord) {
            out.best_ord = ord;
            out.improvement = std::move(c);
        }
    }
    return out;
}

std::string to_string(MinimalityStatus s) {
    switch (s) {
    case MinimalityStatus::CertifiedSemistable: return "CERTIFIED_SEMISTABLE";
    case MinimalityStatus::SearchExhausted: return "SEARCH_EXHAUSTED";
    case MinimalityStatus::Improved: return "IMPROVED";
    }
    return "?";
}

std::string to_string(PotentialGoodReduction s) {
    switch (s) {
    case PotentialGoodReduction::Good: return "GOOD";
    case PotentialGoodReduction::NotEvenPotential: return "NOT_EVEN_POTENTIAL";
    case PotentialGoodReduction::Unknown: return "UNKNOWN";
    }
    return "?";
}

MinimalityCertificate certify_or_search_minimal(const Presentation& P, const PrimeInt& p,
                                                const MinimalityOptions& opts) {
    if (!is_morphism(P)) throw DomainError("presentation does not define a morphism (resultant is zero)");

    MinimalityCertificate cert{.p = p.value(), .bound = opts.bound, .minimized = primitive_integral(P)};
    cert.initial_ord = normalized_ord(P, p);
    std::int64_t current = cert.initial_ord;
    RationalMatrix total = identity_matrix(P.nvars());
    bool improved = false;

    while (true) {
        ++cert.rounds;
        bool semistable = false;
        try {
            semistable = is_semistable_presentation(cert.minimized, p, opts.semistability).semistable;
            cert.semistability_checked = true;
        } catch (const BudgetError&) {
            cert.semistability_checked = false;
        }
        if (current == 0 || semistable) {
            cert.certified = true;
            break;
        }
        const SearchOutcome s = search_improvement(cert.minimized, p, opts.bound, opts.max_candidates);
        if (!s.improvement) break;
        total = total * s.improvement->gamma;
        cert.minimized = primitive_integral(conjugate(cert.minimized, s.improvement->gamma));
        current = s.best_ord;
        improved = true;
    }

    cert.achieved_ord = current;
    if (improved) {
        cert.status = MinimalityStatus::Improved;
        cert.gamma = total;
    } else {
        cert.status = cert.certified ? MinimalityStatus::CertifiedSemistable : MinimalityStatus::SearchExhausted;
    }
    return cert;
}

namespace {

// For the many-prime operations: a large prime dividing rho must not sink the
// whole report, so the bound drops until the candidate family fits. The
// certificate records the bound actually searched.
MinimalityCertificate certify_within_budget(const Presentation& P, const PrimeInt& p, MinimalityOptions opts) {
    while (true) {
        try {
            return certify_or_search_minimal(P, p, opts);
        } catch (const BudgetError&) {
            if (opts.bound == 0) throw;
            --opts.bound;
        }
    }
}

} // namespace

DivisorReport minimal_resultant_divisor(const Presentation& P, const MinimalityOptions& opts) {
    const Presentation integral = primitive_integral(P);
    DivisorReport report;
    report.integral_resultant = resultant(integral).get_num();
    if (report.integral_resultant == 0) throw DomainError("presentation does not define a morphism (resultant is zero)");
    const Factorization f = factor_integer(report.integral_resultant, opts.factor);
    report.unfactored = f.cofactor;
    for (const auto& [q, e] : f.primes) {
        auto cert = certify_within_budget(integral, PrimeInt(q), opts);
        if (cert.achieved_ord > 0) report.divisor[q] = cert.achieved_ord;
        report.certificates.push_back(std::move(cert));
    }
    return report;
}

GlobalizationResult globalize_over_Q(const Presentation& P, const MinimalityOptions& opts) {
    GlobalizationResult out{.presentation = primitive_integral(P)};
    const BigInt rho = resultant(out.presentation).get_num();
    if (rho == 0) throw DomainError("presentation does not define a morphism (resultant is zero)");
    const Factorization f = factor_integer(rho, opts.factor);
    out.unfactored = f.cofactor;

    std::vector<PrimeInt> bad;
    for (const auto& [q, e] : f.primes) bad.emplace_back(q);
    auto ords_except = [&](const Presentation& Q, const PrimeInt& skip) {
        std::map<BigInt, std::int64_t> m;
        for (const auto& q : bad)
            if (!(q == skip)) m[q.value()] = normalized_ord(Q, q);
        return m;
    };

    for (const auto& p : bad) {
        auto cert = certify_within_budget(out.presentation, p, opts);
        GlobalizationStep step{.p = p.value(), .certificate = cert};
        step.others_before = ords_except(out.presentation, p);
        if (cert.gamma) out.presentation = cert.minimized;
        step.others_after = ords_except(out.presentation, p);
        step.invariance_ok = step.others_before == step.others_after;
        out.invariance_ok = out.invariance_ok && step.invariance_ok;
        if (!cert.certified) out.uncertified.push_back(p.value());
        out.steps.push_back(std::move(step));
    }
    return out;
}

PotentialGoodReductionReport potential_good_reduction_status(const Presentation& P, const PrimeInt& p,
                                                             const MinimalityOptions& opts) {
    PotentialGoodReductionReport report{.certificate = certify_or_search_minimal(P, p, opts)};
    const auto& cert = report.certificate;
    if (cert.achieved_ord == 0) {
        report.status = PotentialGoodReduction::Good;
        return report;
    }
    if (cert.certified) {
        report.status = PotentialGoodReduction::NotEvenPotential;
        report.semistable_bad = cert.minimized;
        report.semistable_gamma = cert.gamma.value_or(identity_matrix(P.nvars()));
        return report;
    }
    // Any conjugate at the current minimum that is semistable also certifies.
    for (const auto& c : conjugation_candidates(P.dim(), p, opts.bound, opts.max_candidates)) {
        Presentation Q = primitive_integral(conjugate(cert.minimized, c.gamma));
        if (normalized_ord(Q, p) != cert.achieved_ord) continue;
        try {
            if (is_semistable_presentation(Q, p, opts.semistability).semistable) {
                report.status = PotentialGoodReduction::NotEvenPotential;
                report.semistable_bad = std::move(Q);
                report.semistable_gamma = cert.gamma.value_or(identity_matrix(P.nvars())) * c.gamma;
                return report;
            }
        } catch (const BudgetError&) {
            break;
        }
    }
    report.status = PotentialGoodReduction::Unknown;
    return report;
}

} // namespace dynred
