#include "abtv/kirby.hpp"

#include "abtv/homology.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace abtv;

TEST_CASE("blow-up appends a framing block") {
    const IntMatrix plus = apply_kirby_move(IntMatrix(0, 0), KirbyMove::blow_up(+1));
    CHECK(plus == int_matrix({{1}}));

    const IntMatrix minus = apply_kirby_move(int_matrix({{0}}), KirbyMove::blow_up(-1));
    CHECK(minus == int_matrix({{0, 0}, {0, -1}}));

    CHECK_THROWS_AS(apply_kirby_move(IntMatrix(0, 0), KirbyMove::blow_up(2)),
                    std::invalid_argument);
}

TEST_CASE("handle slide is the expected congruence") {
    const IntMatrix slid =
        apply_kirby_move(int_matrix({{2, 0}, {0, 3}}), KirbyMove::handle_slide(0, 1));
    CHECK(slid == int_matrix({{2, 2}, {2, 5}}));

    CHECK_THROWS_AS(apply_kirby_move(int_matrix({{2}}), KirbyMove::handle_slide(0, 1)),
                    std::out_of_range);
    CHECK_THROWS_AS(apply_kirby_move(int_matrix({{2, 0}, {0, 3}}), KirbyMove::handle_slide(1, 1)),
                    std::invalid_argument);
}

TEST_CASE("moves preserve symmetry and grow only by blow-ups") {
    std::mt19937_64 rng(123);
    IntMatrix m = oracles::random_symmetric(2, -3, 3, rng);
    const auto moves = random_kirby_moves(m.rows(), 30, rng);
    int blow_ups = 0;
    for (const auto& move : moves) {
        m = apply_kirby_move(m, move);
        CHECK(m == m.transpose().eval());
        if (move.kind == KirbyMove::Kind::blow_up) ++blow_ups;
    }
    CHECK(m.rows() == 2 + blow_ups);
}

TEST_CASE("kernel counts survive random move sequences") {
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        const Index n = static_cast<Index>(rng() % 4);  // includes the empty link
        IntMatrix base = oracles::random_symmetric(n, -4, 4, rng);
        const IntMatrix moved = apply_kirby_moves(base, random_kirby_moves(n, 8, rng));
        for (long long k = 1; k <= 8; ++k)
            CHECK(kernel_count_mod_k(base, k) == kernel_count_mod_k(moved, k));
    }
}

TEST_CASE("move sequences are reproducible from the seed") {
    std::mt19937_64 a(99), b(99);
    const auto left = random_kirby_moves(3, 12, a);
    const auto right = random_kirby_moves(3, 12, b);
    REQUIRE(left.size() == right.size());
    for (size_t i = 0; i < left.size(); ++i) {
        CHECK(left[i].kind == right[i].kind);
        CHECK(left[i].sign == right[i].sign);
        CHECK(left[i].from == right[i].from);
        CHECK(left[i].onto == right[i].onto);
    }
}
