#include "hexile/counting.hpp"

#include <string>
#include <unordered_map>

#include "hexile/errors.hpp"

namespace hexile {

namespace {

__extension__ typedef unsigned __int128 u128;

u128 wide_cs(ColideKind kind, u128 m, u128 n) {
    switch (kind) {
    case ColideKind::C11: return 6 * m * n + m + n;
    case ColideKind::C55: return 6 * m * n + 5 * m + 5 * n + 4;
    case ColideKind::C15: return 6 * m * n + 5 * m + n;
    }
    return 0;
}

/// Calls f(level) once per canonical tuple with level <= q.
template <typename F>
void for_each_tuple_level(ColideKind kind, Level q, F&& f) {
    const u128 bound = q;
    switch (kind) {
    case ColideKind::C11:
        for (Level m = 1; wide_cs(kind, m, m) <= bound; ++m) {
            for (Level v = 6 * m * m + 2 * m; v <= q; v += 6 * m + 1) f(v);
        }
        break;
    case ColideKind::C55:
        for (Level m = 0; wide_cs(kind, m, m) <= bound; ++m) {
            for (Level v = 6 * m * m + 10 * m + 4; v <= q; v += 6 * m + 5) f(v);
        }
        break;
    case ColideKind::C15:
        for (Level m = 1; wide_cs(kind, m, m) <= bound; ++m) {
            for (Level v = 6 * m * m + 6 * m; v <= q; v += 6 * m + 1) f(v);
        }
        for (Level n = 0; wide_cs(kind, n + 1, n) <= bound; ++n) {
            for (Level v = 6 * n * n + 12 * n + 5; v <= q; v += 6 * n + 5) f(v);
        }
        break;
    }
}

std::uint64_t distinct_by_tuples(HexileClass cls, Level q) {
    if (q > kMaxTupleEnumerationLevel) {
        throw CapacityError("tuple enumeration is limited to Q <= " +
                            std::to_string(kMaxTupleEnumerationLevel) + "; use BitsetExact");
    }
    std::unordered_map<Level, std::uint32_t> covers;
    std::uint64_t tuples = 0;
    auto record = [&](Level v) { ++covers[v]; };
    if (cls.value() == 1) {
        for_each_tuple_level(ColideKind::C11, q, record);
        for_each_tuple_level(ColideKind::C55, q, record);
        tuples = count_tuples(ColideKind::C11, q) + count_tuples(ColideKind::C55, q);
    } else {
        for_each_tuple_level(ColideKind::C15, q, record);
        tuples = count_tuples(ColideKind::C15, q);
    }
    std::uint64_t multi_cover = 0;
    for (const auto& [level, c] : covers) {
        multi_cover += c - 1;
    }
    return tuples - multi_cover;
}

} // namespace

std::uint64_t count_tuples(ColideKind kind, Level q) {
    const u128 bound = q;
    std::uint64_t total = 0;
    // For each pinned m the admissible n form a contiguous range whose upper
    // end is a floor quotient of the linear rearrangement.
    switch (kind) {
    case ColideKind::C11:
        for (Level m = 1; wide_cs(kind, m, m) <= bound; ++m) {
            total += (q - m) / (6 * m + 1) - m + 1;
        }
        break;
    case ColideKind::C55:
        for (Level m = 0; wide_cs(kind, m, m) <= bound; ++m) {
            total += (q - 5 * m - 4) / (6 * m + 5) - m + 1;
        }
        break;
    case ColideKind::C15:
        for (Level m = 1; wide_cs(kind, m, m) <= bound; ++m) {
            total += (q - 5 * m) / (6 * m + 1) - m + 1;
        }
        for (Level n = 0; wide_cs(kind, n + 1, n) <= bound; ++n) {
            total += (q - n) / (6 * n + 5) - n;
        }
        break;
    }
    return total;
}

std::uint64_t count_diagonal(ColideKind kind, Level q) {
    if (kind == ColideKind::C15) {
        return 0;
    }
    std::uint64_t total = 0;
    for (Level m = min_m(kind); wide_cs(kind, m, m) <= q; ++m) {
        ++total;
    }
    return total;
}

std::uint64_t count_distinct_levels(HexileClass cls, Level q, CountMethod method,
                                    const SieveOptions& options) {
    if (!cls.is_prime_candidate()) {
        throw DomainError("distinct level counts exist only for classes 1 and 5");
    }
    if (method == CountMethod::TupleEnumeration) {
        return distinct_by_tuples(cls, q);
    }
    return mark_levels(cls, q, options).count();
}

LevelBounds max_levels_report(std::uint64_t x) {
    const Level q = nucleus(x);
    return {max_level(ColideKind::C11, q), max_level(ColideKind::C55, q),
            max_level(ColideKind::C15, q)};
}

CountReport pi(std::uint64_t x, const SieveOptions& options) {
    CountReport r;
    r.x = x;
    r.Q = nucleus(x);
    r.two_q = 2 * r.Q;

    // Class 1: levels 1..L1 with 6n+1 <= x. Level 0 is the unit and is never marked.
    const Level l1 = (x - 1) / 6;
    r.h1_elements = l1;
    const auto canon11 = count_tuples(ColideKind::C11, l1);
    const auto canon55 = count_tuples(ColideKind::C55, l1);
    r.diag_c11 = count_diagonal(ColideKind::C11, l1);
    r.diag_c55 = count_diagonal(ColideKind::C55, l1);
    r.tuples_c11 = 2 * canon11 - r.diag_c11;
    r.tuples_c55 = 2 * canon55 - r.diag_c55;
    r.distinct_h1 = count_distinct_levels(kClass1, l1, CountMethod::BitsetExact, options);
    r.overlap_h1 = canon11 + canon55 - r.distinct_h1;

    // Class 5: levels 0..L5 with 6n+5 <= x.
    if (x >= 5) {
        const Level l5 = (x - 5) / 6;
        r.h5_elements = l5 + 1;
        r.tuples_c15 = count_tuples(ColideKind::C15, l5);
        r.distinct_h5 = count_distinct_levels(kClass5, l5, CountMethod::BitsetExact, options);
    }

    r.pi = (r.h1_elements - r.distinct_h1) + (r.h5_elements - r.distinct_h5) + (x >= 3 ? 2 : x >= 2 ? 1 : 0);

    const auto canon_at_q = count_tuples(ColideKind::C11, r.Q) + count_tuples(ColideKind::C55, r.Q) +
                            count_tuples(ColideKind::C15, r.Q);
    r.naive_pi = static_cast<std::int64_t>(r.two_q) - static_cast<std::int64_t>(canon_at_q) + 3;
    return r;
}

std::vector<std::pair<std::string_view, std::string>> fields(const CountReport& r) {
    return {
        {"x", std::to_string(r.x)},
        {"Q", std::to_string(r.Q)},
        {"tuples_c11", std::to_string(r.tuples_c11)},
        {"tuples_c55", std::to_string(r.tuples_c55)},
        {"tuples_c15", std::to_string(r.tuples_c15)},
        {"diag_c11", std::to_string(r.diag_c11)},
        {"diag_c55", std::to_string(r.diag_c55)},
        {"distinct_h1", std::to_string(r.distinct_h1)},
        {"distinct_h5", std::to_string(r.distinct_h5)},
        {"overlap_h1", std::to_string(r.overlap_h1)},
        {"h1_elements", std::to_string(r.h1_elements)},
        {"h5_elements", std::to_string(r.h5_elements)},
        {"pi", std::to_string(r.pi)},
        {"two_q", std::to_string(r.two_q)},
        {"naive_pi", std::to_string(r.naive_pi)},
    };
}

} // namespace hexile
