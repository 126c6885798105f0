#include "hexile/colide.hpp"

#include <algorithm>
#include <string>

#include "hexile/errors.hpp"

namespace hexile {

namespace {

__extension__ typedef unsigned __int128 u128;

// Exact state-function value in 128 bits; every argument below 2^64 fits.
u128 wide_cs(ColideKind kind, u128 m, u128 n) {
    switch (kind) {
    case ColideKind::C11: return 6 * m * n + m + n;
    case ColideKind::C55: return 6 * m * n + 5 * m + 5 * n + 4;
    case ColideKind::C15: return 6 * m * n + 5 * m + n;
    }
    return 0;
}

void check_domain(ColideKind kind, Level m, Level n) {
    if (m < min_m(kind) || n < min_n(kind)) {
        throw DomainError(std::string(to_string(kind)) + ": (" + std::to_string(m) + ", " +
                          std::to_string(n) + ") is outside the domain");
    }
}

Level narrow_checked(ColideKind kind, u128 value) {
    if (value > max_nucleus(kind)) {
        throw OverflowError(std::string(to_string(kind)) + ": nucleus exceeds 64-bit range");
    }
    return static_cast<Level>(value);
}

void check_nucleus(ColideKind kind, Level q) {
    if (q > max_nucleus(kind)) {
        throw OverflowError(std::string(to_string(kind)) + ": nucleus " + std::to_string(q) +
                            " exceeds 64-bit range");
    }
}

} // namespace

std::string_view to_string(ColideKind kind) noexcept {
    switch (kind) {
    case ColideKind::C11: return "c11";
    case ColideKind::C55: return "c55";
    case ColideKind::C15: return "c15";
    }
    return "?";
}

std::optional<ColideKind> parse_colide_kind(std::string_view text) noexcept {
    if (!text.empty() && (text.front() == 'c' || text.front() == 'C')) {
        text.remove_prefix(1);
    }
    if (text == "11") return ColideKind::C11;
    if (text == "55") return ColideKind::C55;
    if (text == "15") return ColideKind::C15;
    return std::nullopt;
}

Level cs(ColideKind kind, Level m, Level n) {
    check_domain(kind, m, n);
    return narrow_checked(kind, wide_cs(kind, m, n));
}

Level cs11(Level m, Level n) { return cs(ColideKind::C11, m, n); }
Level cs55(Level m, Level n) { return cs(ColideKind::C55, m, n); }
Level cs15(Level m, Level n) { return cs(ColideKind::C15, m, n); }

Level diagonal11(Level m) {
    check_domain(ColideKind::C11, m, m);
    const u128 w = m;
    return narrow_checked(ColideKind::C11, 6 * w * w + 2 * w);
}

Level diagonal55(Level m) {
    const u128 w = m;
    return narrow_checked(ColideKind::C55, 6 * w * w + 10 * w + 4);
}

Level max_level(ColideKind kind, Level q) noexcept {
    switch (kind) {
    case ColideKind::C11: return q >= 1 ? (q - 1) / 7 : 0;
    case ColideKind::C55: return q >= 9 ? (q - 9) / 11 : 0;
    case ColideKind::C15: return q >= 5 ? (q - 5) / 7 : 0;
    }
    return 0;
}

std::uint64_t integer_of(ColideKind kind, Level q) {
    check_nucleus(kind, q);
    return 6 * q + residue_of(kind);
}

TupleSolution make_solution(ColideKind kind, Level m, Level n) {
    check_domain(kind, m, n);
    TupleSolution s{kind, m, n, 0, 0};
    switch (kind) {
    case ColideKind::C11:
        s.p = 6 * m + 1;
        s.q = 6 * n + 1;
        break;
    case ColideKind::C55:
        s.p = 6 * m + 5;
        s.q = 6 * n + 5;
        break;
    case ColideKind::C15:
        s.p = 6 * m + 1;
        s.q = 6 * n + 5;
        break;
    }
    return s;
}

std::vector<TupleSolution> solve(ColideKind kind, Level q) {
    check_nucleus(kind, q);
    std::vector<TupleSolution> out;
    const u128 target = q;

    switch (kind) {
    case ColideKind::C11:
        // Row m is the progression (6m+1) n + m; n >= m once the diagonal fits.
        for (Level m = 1; wide_cs(kind, m, m) <= target; ++m) {
            if ((q - m) % (6 * m + 1) == 0) {
                out.push_back(make_solution(kind, m, (q - m) / (6 * m + 1)));
            }
        }
        break;
    case ColideKind::C55:
        for (Level m = 0; wide_cs(kind, m, m) <= target; ++m) {
            if ((q - 5 * m - 4) % (6 * m + 5) == 0) {
                out.push_back(make_solution(kind, m, (q - 5 * m - 4) / (6 * m + 5)));
            }
        }
        break;
    case ColideKind::C15:
        // Ordered pairs split by which factor is smaller: n >= m scans rows
        // (6m+1) n + 5m, m > n scans columns (6n+5) m + n.
        for (Level m = 1; wide_cs(kind, m, m) <= target; ++m) {
            if ((q - 5 * m) % (6 * m + 1) == 0) {
                out.push_back(make_solution(kind, m, (q - 5 * m) / (6 * m + 1)));
            }
        }
        for (Level n = 0; wide_cs(kind, n + 1, n) <= target; ++n) {
            if ((q - n) % (6 * n + 5) == 0) {
                out.push_back(make_solution(kind, (q - n) / (6 * n + 5), n));
            }
        }
        std::sort(out.begin(), out.end(),
                  [](const TupleSolution& a, const TupleSolution& b) { return a.m < b.m; });
        break;
    }
    return out;
}

std::string_view to_string(IntegerCategory category) noexcept {
    switch (category) {
    case IntegerCategory::Unit: return "unit";
    case IntegerCategory::SmallPrime: return "small_prime";
    case IntegerCategory::EvenComposite: return "even_composite";
    case IntegerCategory::MultipleOfThree: return "multiple_of_three";
    case IntegerCategory::Prime: return "prime";
    case IntegerCategory::Composite: return "composite";
    }
    return "?";
}

IntegerVerdict classify_integer(std::uint64_t x) {
    const auto coord = coordinate(x);
    IntegerVerdict v{x, IntegerCategory::Prime, {}};
    if (x == 1) {
        v.category = IntegerCategory::Unit;
        return v;
    }
    if (x == 2 || x == 3) {
        v.category = IntegerCategory::SmallPrime;
        return v;
    }
    switch (coord.hclass.value()) {
    case 0:
    case 2:
    case 4:
        v.category = IntegerCategory::EvenComposite;
        return v;
    case 3:
        v.category = IntegerCategory::MultipleOfThree;
        return v;
    case 1:
        v.solutions = solve(ColideKind::C11, coord.level);
        for (auto& s : solve(ColideKind::C55, coord.level)) {
            v.solutions.push_back(s);
        }
        break;
    default:
        v.solutions = solve(ColideKind::C15, coord.level);
        break;
    }
    v.category = v.solutions.empty() ? IntegerCategory::Prime : IntegerCategory::Composite;
    return v;
}

} // namespace hexile
