#include "hexile/oracle.hpp"

#include <algorithm>
#include <string>

#include "hexile/errors.hpp"

namespace hexile::oracle {

std::size_t OracleResult::pi(std::uint64_t x) const {
    return static_cast<std::size_t>(std::upper_bound(primes.begin(), primes.end(), x) - primes.begin());
}

OracleResult eratosthenes(std::uint64_t limit, std::size_t memory_budget_bytes) {
    if (limit < 2) {
        throw DomainError("eratosthenes: limit must be >= 2");
    }
    if (limit >= memory_budget_bytes) {
        throw CapacityError("eratosthenes: limit " + std::to_string(limit) + " exceeds memory budget");
    }
    std::vector<char> composite(static_cast<std::size_t>(limit) + 1, 0);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (!composite[i]) {
            for (std::uint64_t j = i * i; j <= limit; j += i) {
                composite[j] = 1;
            }
        }
    }
    OracleResult result;
    result.limit = limit;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i]) {
            result.primes.push_back(i);
        }
    }
    return result;
}

bool trial_division(std::uint64_t x) noexcept {
    if (x < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d <= x / d; ++d) {
        if (x % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace hexile::oracle
