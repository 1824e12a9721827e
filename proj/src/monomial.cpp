#include "dynred/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "dynred/errors.hpp"

namespace dynred {

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

namespace {

void generate(std::size_t pos, int remaining, Exponents& cur, std::vector<Exponents>& out) {
    if (pos + 1 == cur.size()) {
        cur[pos] = remaining;
        out.push_back(cur);
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[pos] = e;
        generate(pos + 1, remaining - e, cur, out);
    }
}

} // namespace

MonomialTable::MonomialTable(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {
    if (nvars == 0) throw UsageError("monomial table needs at least one variable");
    Exponents cur(nvars, 0);
    generate(0, static_cast<int>(degree), cur, exps_);
    for (std::size_t i = 0; i < exps_.size(); ++i) index_.emplace(key(exps_[i]), i);
}

std::uint64_t MonomialTable::key(std::span<const int> e) const {
    std::uint64_t k = 0;
    for (std::size_t j = e.size(); j-- > 0;) k = k * (degree_ + 1) + static_cast<std::uint64_t>(e[j]);
    return k;
}

bool MonomialTable::contains(std::span<const int> e) const {
    if (e.size() != nvars_) return false;
    int total = 0;
    for (int x : e) {
        if (x < 0) return false;
        total += x;
    }
    return total == static_cast<int>(degree_);
}

std::size_t MonomialTable::index_of(std::span<const int> e) const {
    if (!contains(e)) throw UsageError("exponent vector is not a monomial of degree " + std::to_string(degree_));
    return index_.at(key(e));
}

const MonomialTable& monomial_table(std::size_t nvars, unsigned degree) {
    static std::mutex mu;
    static std::map<std::pair<std::size_t, unsigned>, std::unique_ptr<MonomialTable>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{nvars, degree}];
    if (!slot) slot = std::make_unique<MonomialTable>(nvars, degree);
    return *slot;
}

} // namespace dynred
