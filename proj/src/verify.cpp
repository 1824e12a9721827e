#include "dynred/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <sstream>
#include <thread>

#include "dynred/resultant.hpp"

namespace dynred {

namespace {

std::vector<std::uint64_t> parse_values(const std::string& key, const std::string& value) {
    std::vector<std::uint64_t> out;
    auto number = [&](const std::string& s) {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad value '" + s + "' for parameter " + key);
        return static_cast<std::uint64_t>(std::stoull(s));
    };
    const auto dots = value.find("..");
    if (dots == std::string::npos) {
        out.push_back(number(value));
        return out;
    }
    const std::uint64_t lo = number(value.substr(0, dots)), hi = number(value.substr(dots + 2));
    if (lo > hi) throw UsageError("empty range for parameter " + key);
    for (std::uint64_t v = lo; v <= hi; ++v) out.push_back(v);
    return out;
}

struct Item {
    unsigned n = 1, d = 2;
    std::uint64_t p = 2, p2 = 0;
    int kind = 0;
    std::optional<Presentation> P;
    std::optional<RationalMatrix> gamma, unimodular;
    std::int64_t k = 0;
};

struct Outcome {
    bool ok = true;
    std::string reason;
};

struct Combo {
    unsigned n, d;
    std::uint64_t p, p2;
};

std::vector<Combo> combos(const SuiteParams& params, bool prime_pairs) {
    std::vector<Combo> out;
    for (unsigned n : params.n)
        for (unsigned d : params.d) {
            if (!prime_pairs) {
                for (auto p : params.p) out.push_back({n, d, p, 0});
                continue;
            }
            for (std::size_t i = 0; i < params.p.size(); ++i)
                for (std::size_t j = i + 1; j < params.p.size(); ++j)
                    if (params.p[i] != params.p[j]) out.push_back({n, d, params.p[i], params.p[j]});
        }
    if (out.empty()) throw UsageError(prime_pairs ? "globalize suite needs two distinct primes" : "empty parameter set");
    return out;
}

std::string matrix_text(const RationalMatrix& m) {
    std::ostringstream os;
    os << m;
    return os.str();
}

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome check_prop22(const Item& it) {
    const PrimeInt p(it.p);
    const Presentation& P = *it.P;
    const auto base = valuation_report(P, p);

    const BigInt pk = pow(p.value(), static_cast<unsigned long>(std::abs(it.k)));
    const BigRational factor = it.k >= 0 ? BigRational(pk) : BigRational(BigInt(1), pk);
    if (valuation_report(scaled(P, factor), p).ord_R_phi != base.ord_R_phi) return fail("(a) scaling changed ord_p(R_phi)");

    const auto b = check_conjugation_valuation(P, *it.gamma, p);
    if (!b.equality_holds) return fail("(b) equality: lhs " + b.lhs.str() + " rhs " + b.rhs_formula.str());
    if (!b.inequality_holds) return fail("(b) min-ord inequality");

    const auto c = valuation_report(conjugate(P, *it.unimodular), p);
    if (c.ord_rho != base.ord_rho) return fail("(c) ord rho changed under p-unimodular U");
    if (c.min_coeff_ord != base.min_coeff_ord) return fail("(c) min-ord changed under p-unimodular U");
    return {};
}

Outcome check_homss(const Item& it) {
    const PrimeInt p(it.p);
    const auto ss = is_semistable_presentation(*it.P, p);
    const bool good = valuation_report(*it.P, p).ord_R_phi == Valuation(0);
    if (good && !ss.semistable) return fail("good reduction judged unstable");
    if (!ss.semistable) {
        if (!ss.witness || !verify_witness(reduce_at(normalize_at(*it.P, p)), *ss.witness))
            return fail("unstable verdict without a valid witness");
    }
    return {};
}

Outcome check_theorem(const Item& it, unsigned bound) {
    const PrimeInt p(it.p);
    const Presentation& P = *it.P;
    const auto ss = is_semistable_presentation(P, p);
    if (it.kind == 2) {
        if (ss.semistable) return fail("planted non-minimal presentation judged semistable");
        MinimalityOptions opts;
        opts.bound = bound;
        const auto cert = certify_or_search_minimal(P, p, opts);
        if (cert.status != MinimalityStatus::Improved || cert.achieved_ord != 0 || !cert.gamma)
            return fail("minimization did not recover ord 0");
        if (valuation_report(conjugate(P, *cert.gamma), p).ord_R_phi != Valuation(0))
            return fail("IMPROVED certificate does not re-verify");
        return {};
    }
    if (!ss.semistable) return {};  // theorem says nothing
    const auto s = search_improvement(P, p, bound + 1);
    if (s.improvement)
        return fail("semistable presentation improved from " + std::to_string(s.base_ord) + " to " +
                    std::to_string(s.best_ord) + " by " + s.improvement->description);
    return {};
}

Outcome check_globalize(const Item& it, unsigned bound) {
    const PrimeInt p1(it.p), p2(it.p2);
    MinimalityOptions opts;
    opts.bound = bound;
    const auto local1 = certify_or_search_minimal(*it.P, p1, opts);
    const auto local2 = certify_or_search_minimal(*it.P, p2, opts);
    const auto g = globalize_over_Q(*it.P, opts);
    if (!g.invariance_ok) return fail("a globalization step changed ord at another prime");
    const auto o1 = valuation_report(g.presentation, p1).ord_R_phi;
    const auto o2 = valuation_report(g.presentation, p2).ord_R_phi;
    if (o1 != Valuation(local1.achieved_ord) || o2 != Valuation(local2.achieved_ord))
        return fail("global presentation misses a local minimum");
    if (!is_morphism(g.presentation))
        return fail("globalized presentation is not a morphism");
    return {};
}

} // namespace

SuiteParams parse_params(const std::string& text) {
    SuiteParams params;
    std::map<std::string, std::vector<std::uint64_t>> values;
    std::string key;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const auto eq = token.find('=');
        std::string value = token;
        if (eq != std::string::npos) {
            key = token.substr(0, eq);
            value = token.substr(eq + 1);
            values[key].clear();
        } else if (key.empty()) {
            throw UsageError("parameter value '" + token + "' has no key");
        }
        for (auto v : parse_values(key, value)) values[key].push_back(v);
    }
    for (const auto& [k, v] : values) {
        if (k == "n")
            params.n.assign(v.begin(), v.end());
        else if (k == "d")
            params.d.assign(v.begin(), v.end());
        else if (k == "p") {
            params.p = v;
            for (auto q : v) PrimeInt check(q);
        } else if (k == "B")
            params.bound = static_cast<unsigned>(v.front());
        else if (k == "box") {
            params.box.lo = -static_cast<std::int64_t>(v.front());
            params.box.hi = static_cast<std::int64_t>(v.front());
        } else
            throw UsageError("unknown parameter '" + k + "'");
    }
    return params;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"prop22", "homss", "theorem", "globalize"};
    return names;
}

unsigned workers_from_environment() {
    if (const char* w = std::getenv("WORKERS")) {
        const int v = std::atoi(w);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

void parallel_for(std::size_t count, unsigned workers, const std::function<void(std::size_t)>& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

std::optional<Presentation> random_semistable_bad(Rng& rng, unsigned n, unsigned d, const PrimeInt& p,
                                                  const CoefficientBox& box, int attempts) {
    for (int a = 0; a < attempts; ++a) {
        Presentation P = random_morphism(rng, n, d, box);
        if (valuation_report(P, p).ord_R_phi == Valuation(0)) continue;
        if (is_semistable_presentation(P, p).semistable) return P;
    }
    return std::nullopt;
}

SuiteReport run_suite(const std::string& suite, const SuiteParams& params, std::uint64_t seed, std::size_t count,
                      unsigned workers) {
    if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
        throw UsageError("unknown suite '" + suite + "'");
    const auto cs = combos(params, suite == "globalize");
    Rng rng(seed);
    std::vector<Item> items(count);
    for (std::size_t i = 0; i < count; ++i) {
        Item& it = items[i];
        const Combo& c = cs[i % cs.size()];
        it.n = c.n;
        it.d = c.d;
        it.p = c.p;
        it.p2 = c.p2;
        const PrimeInt p(c.p);
        if (suite == "prop22") {
            it.P = random_morphism(rng, c.n, c.d, params.box);
            it.gamma = random_invertible(rng, c.n + 1, params.box);
            it.unimodular = random_p_unimodular(rng, c.n + 1, p, params.box);
            it.k = rng.uniform(-3, 3);
        } else if (suite == "homss") {
            it.P = (i % 2 == 0) ? random_good_reduction_morphism(rng, c.n, c.d, p, params.box)
                                : random_morphism(rng, c.n, c.d, params.box);
        } else if (suite == "theorem") {
            it.kind = static_cast<int>(i % 3);
            if (it.kind == 0) it.P = random_semistable_bad(rng, c.n, c.d, p, params.box);
            if (it.kind == 2) {
                const Presentation base = random_good_reduction_morphism(rng, c.n, c.d, p, params.box);
                it.P = primitive_integral(conjugate(base, leading_scaling(c.n + 1, p.value())));
            }
            if (!it.P) {
                it.kind = 1;
                it.P = random_good_reduction_morphism(rng, c.n, c.d, p, params.box);
            }
        } else {
            const PrimeInt p2(c.p2);
            Presentation base = random_morphism(rng, c.n, c.d, params.box);
            while (valuation_report(base, p).ord_R_phi != Valuation(0) ||
                   valuation_report(base, p2).ord_R_phi != Valuation(0))
                base = random_morphism(rng, c.n, c.d, params.box);
            it.P = primitive_integral(conjugate(base, leading_scaling(c.n + 1, p.value() * p2.value())));
        }
    }

    std::vector<Outcome> outcomes(count);
    parallel_for(count, workers, [&](std::size_t i) {
        try {
            const Item& it = items[i];
            if (suite == "prop22")
                outcomes[i] = check_prop22(it);
            else if (suite == "homss")
                outcomes[i] = check_homss(it);
            else if (suite == "theorem")
                outcomes[i] = check_theorem(it, params.bound);
            else
                outcomes[i] = check_globalize(it, params.bound);
        } catch (const std::exception& e) {
            outcomes[i] = fail(std::string("exception: ") + e.what());
        }
    });

    SuiteReport report;
    report.suite = suite;
    for (std::size_t i = 0; i < count; ++i) {
        if (outcomes[i].ok) {
            ++report.passed;
            continue;
        }
        ++report.failed;
        if (!report.counterexample) {
            MorphismDocument doc{.presentation = *items[i].P};
            doc.label = suite + " counterexample #" + std::to_string(i);
            doc.tags["reason"] = outcomes[i].reason;
            doc.tags["p"] = std::to_string(items[i].p);
            if (items[i].p2) doc.tags["p2"] = std::to_string(items[i].p2);
            if (items[i].gamma) doc.tags["gamma"] = matrix_text(*items[i].gamma);
            if (items[i].unimodular) doc.tags["U"] = matrix_text(*items[i].unimodular);
            if (suite == "prop22") doc.tags["k"] = std::to_string(items[i].k);
            report.counterexample = std::move(doc);
        }
    }
    if (suite == "theorem") {
        std::size_t bad = 0;
        for (const auto& it : items)
            if (it.kind == 0) ++bad;
        report.notes.push_back("semistable bad-reduction items: " + std::to_string(bad));
    }
    return report;
}

} // namespace dynred
