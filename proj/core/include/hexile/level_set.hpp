#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hexile/hexile.hpp"

namespace hexile {

/**
 * Dense bitset over a window [lo, hi) of hexile levels of one class.
 *
 * A monolithic set covers [0, q_max + 1); a segment covers any sub-window.
 * Bit n set means level n is occupied (composite after marking, prime after
 * complementing, depending on the producer).
 */
class LevelSet {
public:
    LevelSet(HexileClass cls, Level lo, Level hi);

    [[nodiscard]] HexileClass hclass() const noexcept { return class_; }
    [[nodiscard]] Level lo() const noexcept { return lo_; }
    [[nodiscard]] Level hi() const noexcept { return hi_; }
    /// Inclusive upper level; only meaningful for non-empty sets.
    [[nodiscard]] Level q_max() const noexcept { return hi_ - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(hi_ - lo_); }
    [[nodiscard]] bool empty() const noexcept { return hi_ == lo_; }
    [[nodiscard]] bool contains(Level n) const noexcept { return n >= lo_ && n < hi_; }

    /// Level n must lie in [lo, hi).
    [[nodiscard]] bool test(Level n) const noexcept {
        const auto i = n - lo_;
        return (words_[i / 64] >> (i % 64)) & 1u;
    }
    void set(Level n) noexcept {
        const auto i = n - lo_;
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    void reset(Level n) noexcept {
        const auto i = n - lo_;
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }
    void flip(Level n) noexcept {
        const auto i = n - lo_;
        words_[i / 64] ^= std::uint64_t{1} << (i % 64);
    }

    /// Inverts every bit inside the window.
    void complement() noexcept;

    /// Number of set bits (popcount).
    [[nodiscard]] std::size_t count() const noexcept;

    /// Set levels in ascending order.
    [[nodiscard]] std::vector<Level> levels() const;

    /// Raw storage: bit i of word w is level lo + 64 w + i; bits past hi are zero.
    [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Calls f(level) for every set level in ascending order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (auto bits = words_[w]; bits != 0; bits &= bits - 1) {
                f(lo_ + 64 * w + static_cast<Level>(std::countr_zero(bits)));
            }
        }
    }

    /// Bytes of bit storage a window of the given length needs.
    [[nodiscard]] static constexpr std::size_t storage_bytes(Level length) noexcept {
        return static_cast<std::size_t>((length + 63) / 64) * sizeof(std::uint64_t);
    }

    friend bool operator==(const LevelSet&, const LevelSet&) = default;

private:
    void clear_tail() noexcept;

    HexileClass class_;
    Level lo_;
    Level hi_;
    std::vector<std::uint64_t> words_;
};

/// A window of a level set produced by the segmented sieve.
using Segment = LevelSet;

} // namespace hexile
