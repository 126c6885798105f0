#pragma once

/**
 * @file colide.hpp
 * @brief Composite linear diophantine equations ("colides") over classes 1 and 5.
 *
 * A product of two integers coprime to 6 lands in class 1 or class 5, and its
 * nucleus is a bilinear function of the factors' levels:
 *
 *   C11: (6m+1)(6n+1) = 6 Q + 1,  Q = 6mn +  m +  n        m, n >= 1
 *   C55: (6m+5)(6n+5) = 6 Q + 1,  Q = 6mn + 5m + 5n + 4    m, n >= 0
 *   C15: (6m+1)(6n+5) = 6 Q + 5,  Q = 6mn + 5m +  n        m >= 1, n >= 0
 *
 * The forward direction (state functions cs11/cs55/cs15) generates composite
 * levels; the inverse direction (solve) recovers every factor pair of a
 * given nucleus, so an empty solution set identifies a prime.
 *
 * All evaluation is overflow-checked: a nucleus Q is only meaningful while
 * 6Q + r fits in 64 bits, r being the kind's residue.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hexile/hexile.hpp"

namespace hexile {

enum class ColideKind { C11, C55, C15 };

/// "c11", "c55" or "c15".
[[nodiscard]] std::string_view to_string(ColideKind kind) noexcept;

/// Parses "c11"/"C11"/"11" and friends.
[[nodiscard]] std::optional<ColideKind> parse_colide_kind(std::string_view text) noexcept;

/// Residue class (1 or 5) the kind's products fall into.
[[nodiscard]] constexpr unsigned residue_of(ColideKind kind) noexcept {
    return kind == ColideKind::C15 ? 5u : 1u;
}

/// Smallest admissible m for the kind (1, 0, 1).
[[nodiscard]] constexpr Level min_m(ColideKind kind) noexcept {
    return kind == ColideKind::C55 ? 0u : 1u;
}

/// Smallest admissible n for the kind (1, 0, 0).
[[nodiscard]] constexpr Level min_n(ColideKind kind) noexcept {
    return kind == ColideKind::C11 ? 1u : 0u;
}

/// Largest nucleus Q for which 6Q + residue_of(kind) fits in 64 bits.
[[nodiscard]] constexpr Level max_nucleus(ColideKind kind) noexcept {
    return (UINT64_MAX - residue_of(kind)) / 6;
}

/// One factorization recovered from a nucleus.
struct TupleSolution {
    ColideKind kind;
    Level m;
    Level n;
    std::uint64_t p; ///< first factor, 6m+1 (C11, C15) or 6m+5 (C55)
    std::uint64_t q; ///< second factor, 6n+1 (C11) or 6n+5 (C55, C15)

    friend bool operator==(const TupleSolution&, const TupleSolution&) = default;
};

// State functions. Each throws DomainError below its kind's domain and
// OverflowError when the nucleus exceeds max_nucleus(kind).
[[nodiscard]] Level cs11(Level m, Level n);
[[nodiscard]] Level cs55(Level m, Level n);
[[nodiscard]] Level cs15(Level m, Level n);
[[nodiscard]] Level cs(ColideKind kind, Level m, Level n);

/// cs11(m, m) = 6m^2 + 2m.
[[nodiscard]] Level diagonal11(Level m);
/// cs55(m, m) = 6m^2 + 10m + 4.
[[nodiscard]] Level diagonal55(Level m);

/// Upper bound on the co-variable when the other is pinned at 1:
/// floor((Q-1)/7), floor((Q-9)/11), floor((Q-5)/7), clamped at 0.
[[nodiscard]] Level max_level(ColideKind kind, Level nucleus_value) noexcept;

/// Builds the solution record for an in-domain (m, n), reconstructing factors.
[[nodiscard]] TupleSolution make_solution(ColideKind kind, Level m, Level n);

/**
 * Every in-domain (m, n) with cs(kind, m, n) == nucleus_value.
 *
 * C11 and C55 report each unordered pair once with m <= n. C15 pairs are
 * ordered (m indexes the class-1 factor), and every one is reported.
 * Solutions are sorted by m. Runs in O(sqrt(Q)).
 */
[[nodiscard]] std::vector<TupleSolution> solve(ColideKind kind, Level nucleus_value);

/// The integer a nucleus stands for under a kind: 6Q + residue_of(kind).
[[nodiscard]] std::uint64_t integer_of(ColideKind kind, Level nucleus_value);

enum class IntegerCategory {
    Unit,            ///< 1
    SmallPrime,      ///< 2 or 3
    EvenComposite,   ///< classes 0, 2, 4 above 2
    MultipleOfThree, ///< class 3 above 3
    Prime,           ///< class 1 or 5 with no colide solution
    Composite,       ///< class 1 or 5 with at least one colide solution
};

[[nodiscard]] std::string_view to_string(IntegerCategory category) noexcept;

struct IntegerVerdict {
    std::uint64_t x;
    IntegerCategory category;
    std::vector<TupleSolution> solutions; ///< populated for Composite only

    [[nodiscard]] bool is_prime() const noexcept {
        return category == IntegerCategory::Prime || category == IntegerCategory::SmallPrime;
    }
};

/// Classifies x by residue, and for classes 1 and 5 by colide inversion.
/// Throws DomainError for x = 0.
[[nodiscard]] IntegerVerdict classify_integer(std::uint64_t x);

} // namespace hexile
