#pragma once

/**
 * @file counting.hpp
 * @brief Prime counting from colide tuple counts and distinct composite levels.
 *
 * pi(x) = (#class-1 levels n >= 1 with 6n+1 <= x  - distinct class-1 composite levels)
 *       + (#class-5 levels n >= 0 with 6n+5 <= x  - distinct class-5 composite levels)
 *       + #{2, 3} <= x
 *
 * The two classes have their own level cutoffs, (x-1)/6 and (x-5)/6. A
 * level can be reached by several canonical tuples (325 = 13*25 = 5*65 puts
 * level 54 under both C11 and C55), so tuple counts overstate composites;
 * the distinct count is what enters pi.
 */

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hexile/colide.hpp"
#include "hexile/sieve.hpp"

namespace hexile {

enum class CountMethod {
    BitsetExact,      ///< popcount of the sieve's marked level set
    TupleEnumeration, ///< canonical tuple count minus multi-covered levels
};

/// Largest Q accepted by CountMethod::TupleEnumeration.
inline constexpr Level kMaxTupleEnumerationLevel = 2'000'000;

/**
 * Number of canonical in-domain tuples with cs(kind, m, n) <= Q: m <= n for
 * C11 and C55, every ordered pair for C15. O(sqrt(Q)).
 */
[[nodiscard]] std::uint64_t count_tuples(ColideKind kind, Level nucleus_bound);

/// Number of diagonal tuples (m, m) with cs(kind, m, m) <= Q; 0 for C15.
[[nodiscard]] std::uint64_t count_diagonal(ColideKind kind, Level nucleus_bound);

/// Distinct composite-occupied levels <= Q in class 1 or 5.
[[nodiscard]] std::uint64_t count_distinct_levels(HexileClass cls, Level nucleus_bound,
                                                  CountMethod method = CountMethod::BitsetExact,
                                                  const SieveOptions& options = {});

struct LevelBounds {
    Level n11;
    Level n55;
    Level n15;
};

/// max_level for the three kinds at Q = nucleus(x).
[[nodiscard]] LevelBounds max_levels_report(std::uint64_t x);

struct CountReport {
    std::uint64_t x = 0;
    Level Q = 0;
    std::uint64_t tuples_c11 = 0; ///< ordered tuples, class-1 cutoff
    std::uint64_t tuples_c55 = 0; ///< ordered tuples, class-1 cutoff
    std::uint64_t tuples_c15 = 0; ///< ordered tuples, class-5 cutoff
    std::uint64_t diag_c11 = 0;
    std::uint64_t diag_c55 = 0;
    std::uint64_t distinct_h1 = 0;
    std::uint64_t distinct_h5 = 0;
    std::uint64_t overlap_h1 = 0; ///< canonical C11 + C55 tuples minus distinct_h1
    std::uint64_t h1_elements = 0;
    std::uint64_t h5_elements = 0;
    std::uint64_t pi = 0;
    std::uint64_t two_q = 0;     ///< 2Q, the combined class population estimate
    std::int64_t naive_pi = 0;   ///< 2Q - canonical tuples at Q + 3

    friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Exact prime count for x >= 1 with a full breakdown. Throws DomainError
/// for x = 0 and CapacityError beyond the memory budget.
[[nodiscard]] CountReport pi(std::uint64_t x, const SieveOptions& options = {});

/// Field names and values in declaration order, for flat serialization.
[[nodiscard]] std::vector<std::pair<std::string_view, std::string>> fields(const CountReport& report);

} // namespace hexile
