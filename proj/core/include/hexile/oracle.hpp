#pragma once

// Classical reference implementations. Nothing in hexile_core links these;
// they back the tests and the `verify` command.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hexile::oracle {

struct OracleResult {
    std::uint64_t limit = 0;
    std::vector<std::uint64_t> primes; ///< ascending, all primes <= limit

    /// Number of listed primes <= x (x may be anything up to limit).
    [[nodiscard]] std::size_t pi(std::uint64_t x) const;
};

/// Plain byte-per-integer sieve of Eratosthenes. Throws hexile::DomainError
/// for limit < 2 and hexile::CapacityError when the table would exceed
/// memory_budget_bytes.
[[nodiscard]] OracleResult eratosthenes(std::uint64_t limit,
                                        std::size_t memory_budget_bytes = std::size_t{1} << 30);

/// Divides by every d with d*d <= x.
[[nodiscard]] bool trial_division(std::uint64_t x) noexcept;

} // namespace hexile::oracle
