#pragma once

/**
 * @file hexile.hpp
 * @brief The six residue classes of the naturals modulo 6.
 *
 * Every x >= 1 is addressed by a coordinate (class, level) with
 * class = x mod 6 and level = floor(x / 6), so x = 6 * level + class.
 * The level is also called the nucleus of x. Only classes 1 and 5 can
 * hold primes above 3.
 */

#include <compare>
#include <cstdint>

#include "hexile/errors.hpp"

namespace hexile {

/// Hexile level (row index); also the nucleus of an integer.
using Level = std::uint64_t;

/// Residue class modulo 6.
class HexileClass {
public:
    /// Throws DomainError if k > 5.
    constexpr explicit HexileClass(unsigned k) : k_(k) {
        if (k > 5) {
            throw DomainError("hexile class must be in 0..5");
        }
    }

    [[nodiscard]] constexpr unsigned value() const noexcept { return k_; }
    [[nodiscard]] constexpr bool is_prime_candidate() const noexcept { return k_ == 1 || k_ == 5; }

    friend constexpr auto operator<=>(HexileClass, HexileClass) = default;

private:
    unsigned k_;
};

/// The two classes that hold every prime above 3.
inline constexpr HexileClass kClass1{1};
inline constexpr HexileClass kClass5{5};

struct HexileCoordinate {
    HexileClass hclass;
    Level level;

    friend constexpr bool operator==(const HexileCoordinate&, const HexileCoordinate&) = default;
};

/// x mod 6. Throws DomainError for x = 0.
[[nodiscard]] HexileClass classify(std::uint64_t x);

/// floor(x / 6). Throws DomainError for x = 0.
[[nodiscard]] Level nucleus(std::uint64_t x);

/// Both of the above at once.
[[nodiscard]] HexileCoordinate coordinate(std::uint64_t x);

/// 6 * level + class. Throws DomainError for (0, 0) and OverflowError when
/// the result does not fit in 64 bits.
[[nodiscard]] std::uint64_t compose(HexileCoordinate coord);

/// True iff x mod 6 is 1 or 5. Throws DomainError for x = 0.
[[nodiscard]] bool is_prime_candidate(std::uint64_t x);

} // namespace hexile
