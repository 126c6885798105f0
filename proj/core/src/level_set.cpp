#include "hexile/level_set.hpp"

#include "hexile/errors.hpp"

namespace hexile {

LevelSet::LevelSet(HexileClass cls, Level lo, Level hi) : class_(cls), lo_(lo), hi_(hi) {
    if (hi < lo) {
        throw DomainError("level window must satisfy lo <= hi");
    }
    words_.assign(static_cast<std::size_t>((hi - lo + 63) / 64), 0);
}

void LevelSet::clear_tail() noexcept {
    const auto used = (hi_ - lo_) % 64;
    if (used != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << used) - 1;
    }
}

void LevelSet::complement() noexcept {
    for (auto& w : words_) {
        w = ~w;
    }
    clear_tail();
}

std::size_t LevelSet::count() const noexcept {
    std::size_t total = 0;
    for (const auto w : words_) {
        total += static_cast<std::size_t>(std::popcount(w));
    }
    return total;
}

std::vector<Level> LevelSet::levels() const {
    std::vector<Level> out;
    out.reserve(count());
    for_each([&](Level n) { out.push_back(n); });
    return out;
}

} // namespace hexile
