#pragma once

/**
 * @file sieve.hpp
 * @brief Prime sieving by complementing colide-generated level sets.
 *
 * Class 1 composites occupy the levels reached by cs11 and cs55, class 5
 * composites the levels reached by cs15. Every row of a state function is an
 * arithmetic progression in its free variable, so marking a level window is
 * a matter of stepping each progression through it. The unmarked levels
 * (minus level 0 of class 1, which is the unit) are exactly the primes of
 * the class; 2 and 3 are added separately.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "hexile/hexile.hpp"
#include "hexile/level_set.hpp"

namespace hexile {

inline constexpr std::size_t kDefaultMemoryBudget = std::size_t{256} << 20;

struct SieveOptions {
    /// Upper bound on live bitset storage for a single call.
    std::size_t memory_budget_bytes = kDefaultMemoryBudget;
    /// Threads used by the segmented sieve; 1 runs inline.
    unsigned workers = 1;
};

/// Receives primes in strictly increasing order.
using PrimeSink = std::function<void(std::uint64_t)>;

/**
 * Composite-occupied levels of class 1 (cs11 and cs55 values) or class 5
 * (cs15 values) in [0, q_max]. Throws DomainError for other classes and
 * CapacityError if the bitset exceeds the budget.
 */
[[nodiscard]] LevelSet mark_levels(HexileClass cls, Level q_max, const SieveOptions& options = {});

/// Same marking restricted to the window [lo, hi).
[[nodiscard]] Segment mark_window(HexileClass cls, Level lo, Level hi);

/// Complement of mark_levels over [0, q_max]; class 1 level 0 is excluded.
[[nodiscard]] LevelSet prime_levels(HexileClass cls, Level q_max, const SieveOptions& options = {});

/// Streams every prime <= x through sink using two monolithic level sets.
void stream_primes_up_to(std::uint64_t x, const PrimeSink& sink, const SieveOptions& options = {});

[[nodiscard]] std::vector<std::uint64_t> primes_up_to(std::uint64_t x, const SieveOptions& options = {});

/**
 * Same output as stream_primes_up_to, computed window by window with
 * segment_levels levels per window. With options.workers > 1 windows are
 * sieved concurrently and emitted in order.
 */
void stream_primes_segmented(std::uint64_t x, Level segment_levels, const PrimeSink& sink,
                             const SieveOptions& options = {});

[[nodiscard]] std::vector<std::uint64_t> primes_segmented(std::uint64_t x, Level segment_levels,
                                                          const SieveOptions& options = {});

} // namespace hexile
