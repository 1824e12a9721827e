#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

namespace dynred {

using Exponents = std::vector<int>;

// C(n, k) for small arguments.
std::uint64_t binomial(unsigned n, unsigned k);

/// All monomials of a fixed degree in a fixed number of variables, listed in
/// descending lexicographic order of their exponent vectors. For two
/// variables and degree 2 the order is x^2, xy, y^2.
class MonomialTable {
public:
    MonomialTable(std::size_t nvars, unsigned degree);

    std::size_t nvars() const { return nvars_; }
    unsigned degree() const { return degree_; }
    std::size_t size() const { return exps_.size(); }

    const Exponents& exponents(std::size_t index) const { return exps_[index]; }
    // Throws UsageError if e is not a monomial of this table.
    std::size_t index_of(std::span<const int> e) const;
    bool contains(std::span<const int> e) const;

private:
    std::uint64_t key(std::span<const int> e) const;

    std::size_t nvars_;
    unsigned degree_;
    std::vector<Exponents> exps_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Shared, lazily built table. The returned reference stays valid for the
/// life of the process. Thread-safe.
const MonomialTable& monomial_table(std::size_t nvars, unsigned degree);

} // namespace dynred
