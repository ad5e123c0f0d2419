// Surgery moves on linking matrices: blow-ups and handle slides.
// Invariance under these is what makes the kernel-count formulas
// manifold invariants, and the test batteries exercise exactly that.

#pragma once

#include "abtv/numeric.hpp"

#include <random>
#include <vector>

namespace abtv {

struct KirbyMove {
    enum class Kind { blow_up, handle_slide };

    Kind kind = Kind::blow_up;
    int sign = +1;    // blow-up: framing of the appended unknot, +1 or -1
    Index from = 0;   // handle slide: component being slid over
    Index onto = 0;   // handle slide: component absorbing the slide

    static KirbyMove blow_up(int sign) { return {Kind::blow_up, sign, 0, 0}; }
    static KirbyMove handle_slide(Index from, Index onto) {
        return {Kind::handle_slide, +1, from, onto};
    }
};

/// Applies one move. Blow-up appends a diagonal (+-1) block; a handle slide
/// is the congruence L -> E^T L E with E = I + e_from e_onto^T.
inline IntMatrix apply_kirby_move(const IntMatrix& linking, const KirbyMove& move) {
    const Index m = linking.rows();
    switch (move.kind) {
        case KirbyMove::Kind::blow_up: {
            if (move.sign != 1 && move.sign != -1)
                throw std::invalid_argument("apply_kirby_move: blow-up framing must be +-1");
            IntMatrix out = IntMatrix::Zero(m + 1, m + 1);
            out.topLeftCorner(m, m) = linking;
            out(m, m) = move.sign;
            return out;
        }
        case KirbyMove::Kind::handle_slide: {
            if (move.from < 0 || move.from >= m || move.onto < 0 || move.onto >= m)
                throw std::out_of_range("apply_kirby_move: handle slide index out of range");
            if (move.from == move.onto)
                throw std::invalid_argument("apply_kirby_move: cannot slide a component over itself");
            IntMatrix e = IntMatrix::Identity(m, m);
            e(move.from, move.onto) = 1;
            return e.transpose() * linking * e;
        }
    }
    throw std::invalid_argument("apply_kirby_move: unknown move kind");
}

inline IntMatrix apply_kirby_moves(IntMatrix linking, const std::vector<KirbyMove>& moves) {
    for (const auto& move : moves) linking = apply_kirby_move(linking, move);
    return linking;
}

/// A deterministic random move sequence for invariance batteries. Slides
/// need at least two components, so small matrices get blown up first.
inline std::vector<KirbyMove> random_kirby_moves(Index components, int count,
                                                 std::mt19937_64& rng) {
    std::vector<KirbyMove> moves;
    moves.reserve(static_cast<size_t>(count));
    Index m = components;
    for (int step = 0; step < count; ++step) {
        const bool must_blow_up = m < 2;
        if (must_blow_up || rng() % 3 == 0) {
            moves.push_back(KirbyMove::blow_up(rng() % 2 == 0 ? +1 : -1));
            ++m;
        } else {
            const Index from = static_cast<Index>(rng() % static_cast<uint64_t>(m));
            Index onto = static_cast<Index>(rng() % static_cast<uint64_t>(m - 1));
            if (onto >= from) ++onto;
            moves.push_back(KirbyMove::handle_slide(from, onto));
        }
    }
    return moves;
}

}  // namespace abtv
