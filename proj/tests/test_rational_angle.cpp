#include "abtv/rational_angle.hpp"

#include <doctest.h>

#include <random>

using namespace abtv;

TEST_CASE("angle_from reduces and canonicalizes into [0,1)") {
    CHECK(angle_from(3, 6) == angle_from(1, 2));
    CHECK(angle_from(3, 6).num() == 1);
    CHECK(angle_from(3, 6).den() == 2);

    CHECK(angle_from(7, 5) == angle_from(2, 5));
    CHECK(angle_from(-1, 5) == angle_from(4, 5));

    CHECK(angle_from(0, 17).is_zero());
    CHECK(angle_from(0, 17).den() == 1);

    CHECK_THROWS_AS(angle_from(1, 0), std::invalid_argument);
}

TEST_CASE("group law examples") {
    CHECK((angle_from(1, 2) + angle_from(1, 2)).is_zero());
    CHECK(angle_from(1, 3) + angle_from(1, 4) == angle_from(7, 12));
    CHECK(angle_from(1, 3) - angle_from(1, 4) == angle_from(1, 12));

    // scaling by the denominator kills any a/k
    for (long long k = 1; k <= 12; ++k)
        for (long long a = 0; a < k; ++a) CHECK((Int(k) * angle_from(a, k)).is_zero());
}

TEST_CASE("order of an element is its reduced denominator") {
    CHECK(angle_from(2, 6).order() == 3);
    CHECK(angle_from(0, 9).order() == 1);
    CHECK(angle_from(5, 7).order() == 7);
}

TEST_CASE("group axioms over random fractions") {
    std::mt19937_64 rng(20240901);
    std::uniform_int_distribution<long long> num(-40, 40);
    std::uniform_int_distribution<long long> den(1, 24);
    const RationalAngle zero;

    for (int trial = 0; trial < 500; ++trial) {
        const RationalAngle a = angle_from(num(rng), den(rng));
        const RationalAngle b = angle_from(num(rng), den(rng));
        const RationalAngle c = angle_from(num(rng), den(rng));

        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a + zero == a);
        CHECK((a + (-a)).is_zero());

        // canonical representative stays reduced and in range
        const RationalAngle s = a + b;
        CHECK(s.num() >= 0);
        CHECK(s.num() < s.den());
        CHECK(gcd(s.num(), s.den()) == 1);
    }
}

TEST_CASE("integer scaling is iterated addition") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> num(-30, 30);
    std::uniform_int_distribution<long long> den(1, 15);
    for (int trial = 0; trial < 100; ++trial) {
        const RationalAngle a = angle_from(num(rng), den(rng));
        RationalAngle sum;
        for (int i = 0; i < 11; ++i) sum += a;
        CHECK(Int(11) * a == sum);
        CHECK(Int(-3) * a == -(Int(3) * a));
        CHECK((Int(0) * a).is_zero());
    }
}

TEST_CASE("AngleMatrix stores and checks symmetry") {
    AngleMatrix m(2, 2);
    m(0, 0) = angle_from(1, 2);
    m(0, 1) = angle_from(1, 3);
    m(1, 0) = angle_from(1, 3);
    m(1, 1) = angle_from(2, 3);
    CHECK(m.is_symmetric());
    m(1, 0) = angle_from(2, 3);
    CHECK_FALSE(m.is_symmetric());
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
}
