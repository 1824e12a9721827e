#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace dynred {

using IntVector = std::vector<std::int64_t>;

// Largest supported vector length (n+1) for the feasibility engine.
inline constexpr std::size_t kMaxConeDimension = 4;

/// Searches for an integer r with sum(r) = 0 satisfying <row, r> >= 1 for
/// every strict row and <row, r> >= 0 for every weak row. All rows must have
/// the same length m, 1 <= m <= kMaxConeDimension.
///
/// The constraint set is homogeneous, so any rational solution of the strict
/// (> 0) system scales to an integer one. Solved by Fourier-Motzkin
/// elimination over exact rationals after substituting
/// r_{m-1} = -(r_0 + ... + r_{m-2}).
///
/// With no rows at all the length is unknown and the result is nullopt.
std::optional<IntVector> cone_feasible(std::span<const IntVector> strict_rows, std::span<const IntVector> weak_rows);

/// cone_feasible with no weak rows.
std::optional<IntVector> strict_cone_feasible(std::span<const IntVector> rows);

} // namespace dynred
