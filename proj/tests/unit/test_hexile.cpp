#include <doctest.h>

#include "hexile/errors.hpp"
#include "hexile/hexile.hpp"
#include "hexile/oracle.hpp"

using namespace hexile;

TEST_CASE("classify returns the residue mod 6") {
    CHECK(classify(49).value() == 1);
    CHECK(classify(35).value() == 5);
    CHECK(classify(6).value() == 0);
    CHECK_THROWS_AS((void)classify(0), DomainError);
}

TEST_CASE("nucleus is floor(x / 6)") {
    CHECK(nucleus(49) == 8);
    CHECK(nucleus(1) == 0);
    CHECK(nucleus(25) == 4);
    CHECK_THROWS_AS((void)nucleus(0), DomainError);
}

TEST_CASE("compose rebuilds the integer") {
    CHECK(compose({HexileClass(1), 1}) == 7);
    CHECK(compose({HexileClass(5), 0}) == 5);
    CHECK(compose({HexileClass(3), 2}) == 15);
    CHECK_THROWS_AS((void)compose({HexileClass(0), 0}), DomainError);
    CHECK_THROWS_AS((void)compose({HexileClass(5), UINT64_MAX / 6}), OverflowError);
    CHECK(compose({HexileClass(3), UINT64_MAX / 6}) == UINT64_MAX);
}

TEST_CASE("class values outside 0..5 are rejected") {
    CHECK_THROWS_AS(HexileClass(6), DomainError);
    CHECK(kClass1.is_prime_candidate());
    CHECK(kClass5.is_prime_candidate());
    CHECK_FALSE(HexileClass(3).is_prime_candidate());
}

TEST_CASE("prime candidates are classes 1 and 5") {
    CHECK(is_prime_candidate(35));
    CHECK_FALSE(is_prime_candidate(9));
    CHECK(is_prime_candidate(7));
    CHECK_THROWS_AS((void)is_prime_candidate(0), DomainError);
}

TEST_CASE("round trip and partition over [1, 10^6]") {
    std::uint64_t per_class[6] = {};
    for (std::uint64_t x = 1; x <= 1'000'000; ++x) {
        const auto c = coordinate(x);
        REQUIRE(compose(c) == x);
        REQUIRE(c.hclass == classify(x));
        REQUIRE(c.level == nucleus(x));
        ++per_class[c.hclass.value()];
        const auto k = c.hclass.value();
        if (k == 0 || k == 2 || k == 4) REQUIRE(x % 2 == 0);
        if (k == 3) REQUIRE(x % 3 == 0);
    }
    std::uint64_t total = 0;
    for (auto n : per_class) total += n;
    CHECK(total == 1'000'000);
}

TEST_CASE("every prime >= 5 up to 10^6 is a candidate") {
    const auto primes = oracle::eratosthenes(1'000'000).primes;
    for (const auto p : primes) {
        if (p < 5) {
            CHECK_FALSE(is_prime_candidate(p));
        } else {
            REQUIRE(is_prime_candidate(p));
        }
    }
}
