#include <doctest.h>

#include <thread>
#include <vector>

#include "brute_force.hpp"
#include "hexile/errors.hpp"
#include "hexile/oracle.hpp"
#include "hexile/sieve.hpp"

using namespace hexile;

namespace {

std::vector<Level> levels(std::initializer_list<Level> l) { return l; }

} // namespace

TEST_CASE("LevelSet basics") {
    LevelSet s(kClass1, 0, 130);
    CHECK(s.size() == 130);
    CHECK(s.count() == 0);
    s.set(0);
    s.set(64);
    s.set(129);
    CHECK(s.count() == 3);
    CHECK(s.levels() == levels({0, 64, 129}));
    s.complement();
    CHECK(s.count() == 127);
    CHECK_FALSE(s.test(64));
    s.flip(64);
    CHECK(s.test(64));
    CHECK(LevelSet::storage_bytes(130) == 24);

    LevelSet window(kClass5, 100, 105);
    window.set(103);
    CHECK(window.levels() == levels({103}));
    CHECK_THROWS_AS(LevelSet(kClass1, 5, 4), DomainError);
}

TEST_CASE("mark_levels examples") {
    CHECK(mark_levels(kClass1, 10).levels() == levels({4, 8, 9}));
    CHECK(mark_levels(kClass5, 5).levels() == levels({5}));
    CHECK(mark_levels(kClass1, 0).count() == 0);
    CHECK_THROWS_AS((void)mark_levels(HexileClass(3), 10), DomainError);
}

TEST_CASE("prime_levels examples") {
    CHECK(prime_levels(kClass1, 10).levels() == levels({1, 2, 3, 5, 6, 7, 10}));
    CHECK(prime_levels(kClass5, 5).levels() == levels({0, 1, 2, 3, 4}));
    CHECK(prime_levels(kClass1, 0).count() == 0);
}

TEST_CASE("marked levels equal the product grid") {
    for (Level q : {0u, 1u, 4u, 5u, 54u, 55u, 1000u, 20'000u}) {
        for (unsigned cls : {1u, 5u}) {
            const auto grid = hexile::testing::grid_composite_levels(cls, q);
            const auto marked = mark_levels(HexileClass(cls), q).levels();
            REQUIRE(std::vector<Level>(grid.begin(), grid.end()) == marked);
        }
    }
}

TEST_CASE("mark and prime sets partition the levels") {
    for (unsigned cls : {1u, 5u}) {
        const Level q = 5000;
        const auto marked = mark_levels(HexileClass(cls), q);
        const auto primes = prime_levels(HexileClass(cls), q);
        for (Level n = 0; n <= q; ++n) {
            const bool unit = cls == 1 && n == 0;
            REQUIRE((marked.test(n) + primes.test(n) + unit) == 1);
            if (!unit) REQUIRE(primes.test(n) == oracle::trial_division(6 * n + cls));
        }
    }
}

TEST_CASE("union semantics: level 54 is covered twice") {
    const Level q = 54;
    const auto popcount = mark_levels(kClass1, q).count();
    const auto tuples = hexile::testing::grid_count_tuples(ColideKind::C11, q) +
                        hexile::testing::grid_count_tuples(ColideKind::C55, q);
    CHECK(popcount == 24);
    CHECK(tuples == 26);
    CHECK(popcount < tuples);
}

TEST_CASE("segments concatenate to the monolithic set") {
    const Level q = 3000;
    for (unsigned cls : {1u, 5u}) {
        const auto whole = mark_levels(HexileClass(cls), q);
        for (Level width : {1u, 7u, 64u, 100u, 4096u}) {
            for (Level lo = 0; lo <= q; lo += width) {
                const auto seg = mark_window(HexileClass(cls), lo, std::min(q + 1, lo + width));
                for (Level n = seg.lo(); n < seg.hi(); ++n) {
                    REQUIRE(seg.test(n) == whole.test(n));
                }
            }
        }
    }
}

TEST_CASE("primes_up_to examples") {
    using V = std::vector<std::uint64_t>;
    CHECK(primes_up_to(10) == V{2, 3, 5, 7});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(2) == V{2});
    CHECK(primes_up_to(3) == V{2, 3});
    CHECK(primes_up_to(4) == V{2, 3});
    CHECK(primes_up_to(5) == V{2, 3, 5});
    const auto p61 = primes_up_to(61);
    CHECK(p61 == oracle::eratosthenes(61).primes);
    CHECK(p61.back() == 61);
    CHECK(p61[p61.size() - 2] == 59);
    CHECK(primes_up_to(60).back() == 59);
}

TEST_CASE("primes_up_to equals the oracle for every limit up to 3000") {
    const auto ref = oracle::eratosthenes(3000);
    for (std::uint64_t x = 2; x <= 3000; ++x) {
        const auto got = primes_up_to(x);
        REQUIRE(got.size() == ref.pi(x));
        REQUIRE(std::equal(got.begin(), got.end(), ref.primes.begin()));
    }
}

TEST_CASE("primes_up_to matches the oracle at powers of ten") {
    for (std::uint64_t x : {1000u, 10'000u, 100'000u, 1'000'000u}) {
        REQUIRE(primes_up_to(x) == oracle::eratosthenes(x).primes);
    }
}

TEST_CASE("segmented output is independent of window size and worker count") {
    CHECK(primes_segmented(100, 4) == primes_up_to(100));
    CHECK(primes_segmented(10, 1) == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(primes_segmented(1, 1).empty());
    for (std::uint64_t x : {97u, 1000u, 65'537u}) {
        const auto ref = primes_up_to(x);
        for (Level width : {1u, 7u, 64u, 4096u}) {
            REQUIRE(primes_segmented(x, width) == ref);
        }
    }
    const auto ref = primes_up_to(1'000'000);
    for (unsigned workers : {1u, 2u, 4u}) {
        SieveOptions opts;
        opts.workers = workers;
        REQUIRE(primes_segmented(1'000'000, 1 << 16, opts) == ref);
        REQUIRE(primes_segmented(1'000'000, 7, opts) == ref);
    }
    CHECK_THROWS_AS((void)primes_segmented(100, 0), DomainError);
}

TEST_CASE("stream delivers strictly increasing primes") {
    std::uint64_t last = 0;
    std::size_t n = 0;
    SieveOptions opts;
    opts.workers = 3;
    stream_primes_segmented(200'000, 333, [&](std::uint64_t p) {
        REQUIRE(p > last);
        last = p;
        ++n;
    }, opts);
    CHECK(n == 17'984);
}

TEST_CASE("memory budget is enforced") {
    SieveOptions tight;
    tight.memory_budget_bytes = 1024;
    CHECK_NOTHROW((void)mark_levels(kClass1, 8000, tight));
    CHECK_THROWS_AS((void)mark_levels(kClass1, 9000, tight), CapacityError);
    CHECK_THROWS_AS((void)primes_up_to(60'000, tight), CapacityError);
    CHECK_NOTHROW((void)primes_segmented(60'000, 1024, tight));
    CHECK_THROWS_AS((void)primes_up_to(UINT64_MAX), OverflowError);
}
