#include "hexile/hexile.hpp"

#include <limits>
#include <string>

#include "hexile/errors.hpp"

namespace hexile {

namespace {

void require_positive(std::uint64_t x, const char* what) {
    if (x == 0) {
        throw DomainError(std::string(what) + ": x must be >= 1");
    }
}

} // namespace

HexileClass classify(std::uint64_t x) {
    require_positive(x, "classify");
    return HexileClass(static_cast<unsigned>(x % 6));
}

Level nucleus(std::uint64_t x) {
    require_positive(x, "nucleus");
    return x / 6;
}

HexileCoordinate coordinate(std::uint64_t x) {
    require_positive(x, "coordinate");
    return {HexileClass(static_cast<unsigned>(x % 6)), x / 6};
}

std::uint64_t compose(HexileCoordinate coord) {
    const auto k = coord.hclass.value();
    if (k == 0 && coord.level == 0) {
        throw DomainError("compose: (class 0, level 0) addresses 0, which is outside the domain");
    }
    if (coord.level > (std::numeric_limits<std::uint64_t>::max() - k) / 6) {
        throw OverflowError("compose: 6 * level + class exceeds 64 bits");
    }
    return 6 * coord.level + k;
}

bool is_prime_candidate(std::uint64_t x) {
    return classify(x).is_prime_candidate();
}

} // namespace hexile
