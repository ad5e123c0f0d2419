// Smith normal form over Z.
//
// Row/column reduction with pivoting on the minimum nonzero absolute value,
// in exact arbitrary-precision arithmetic. Matrices in scope are small
// (surgery links, incidence matrices), so the classical quadratic-growth
// algorithm is the right tool.

#pragma once

#include "abtv/numeric.hpp"

#include <vector>

namespace abtv {

/// U * M * V = D with U, V unimodular and D diagonal, d_i | d_{i+1} >= 0.
/// The inverse of U is tracked through the elimination: its columns present
/// the cokernel generators, which the linking form needs directly.
struct SmithDecomposition {
    IntMatrix u;          // m x m
    IntMatrix u_inverse;  // m x m, u * u_inverse = I
    IntMatrix v;          // n x n
    IntMatrix d;          // m x n diagonal

    IntVector diagonal() const {
        const Index r = std::min(d.rows(), d.cols());
        IntVector out(r);
        for (Index i = 0; i < r; ++i) out(i) = d(i, i);
        return out;
    }

    Index rank() const {
        Index r = 0;
        const Index nmin = std::min(d.rows(), d.cols());
        while (r < nmin && d(r, r) != 0) ++r;
        return r;
    }

    /// The nonzero diagonal entries d_1 | d_2 | ... | d_r.
    std::vector<Int> invariant_factors() const {
        std::vector<Int> out;
        const Index r = rank();
        out.reserve(static_cast<size_t>(r));
        for (Index i = 0; i < r; ++i) out.push_back(d(i, i));
        return out;
    }
};

namespace detail {

inline bool pivot_is_lone(const IntMatrix& d, Index t) {
    for (Index i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0) return false;
    for (Index j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0) return false;
    return true;
}

inline bool find_min_pivot(const IntMatrix& d, Index t, Index& pi, Index& pj) {
    bool found = false;
    Int best = 0;
    for (Index i = t; i < d.rows(); ++i) {
        for (Index j = t; j < d.cols(); ++j) {
            if (d(i, j) == 0) continue;
            Int a = abs(d(i, j));
            if (!found || a < best) {
                best = a;
                pi = i;
                pj = j;
                found = true;
            }
        }
    }
    return found;
}

}  // namespace detail

template <typename Derived>
SmithDecomposition smith_normal_form(const Eigen::MatrixBase<Derived>& matrix) {
    SmithDecomposition s;
    const Index m = matrix.rows();
    const Index n = matrix.cols();
    s.d = matrix.template cast<Int>();
    s.u = IntMatrix::Identity(m, m);
    s.u_inverse = IntMatrix::Identity(m, m);
    s.v = IntMatrix::Identity(n, n);

    IntMatrix& d = s.d;
    IntMatrix& u = s.u;
    IntMatrix& uinv = s.u_inverse;
    IntMatrix& v = s.v;

    // Elementary steps, each mirrored into the transform bookkeeping.
    // Row ops multiply U on the left, hence U^-1 on the right by the
    // inverse elementary matrix (a column op).
    auto swap_rows = [&](Index a, Index b) {
        if (a == b) return;
        d.row(a).swap(d.row(b));
        u.row(a).swap(u.row(b));
        uinv.col(a).swap(uinv.col(b));
    };
    auto swap_cols = [&](Index a, Index b) {
        if (a == b) return;
        d.col(a).swap(d.col(b));
        v.col(a).swap(v.col(b));
    };
    auto add_row = [&](Index target, Index source, const Int& factor) {
        d.row(target) += factor * d.row(source);
        u.row(target) += factor * u.row(source);
        uinv.col(source) -= factor * uinv.col(target);
    };
    auto add_col = [&](Index target, Index source, const Int& factor) {
        d.col(target) += factor * d.col(source);
        v.col(target) += factor * v.col(source);
    };
    auto negate_row = [&](Index a) {
        d.row(a) *= Int(-1);
        u.row(a) *= Int(-1);
        uinv.col(a) *= Int(-1);
    };

    const Index nmin = std::min(m, n);
    for (Index t = 0; t < nmin; ++t) {
        Index pi = t, pj = t;
        if (!detail::find_min_pivot(d, t, pi, pj)) break;  // remaining block is zero

        while (true) {
            detail::find_min_pivot(d, t, pi, pj);
            swap_rows(t, pi);
            swap_cols(t, pj);

            for (Index i = t + 1; i < m; ++i)
                if (d(i, t) != 0) add_row(i, t, -Int(d(i, t) / d(t, t)));
            for (Index j = t + 1; j < n; ++j)
                if (d(t, j) != 0) add_col(j, t, -Int(d(t, j) / d(t, t)));

            if (!detail::pivot_is_lone(d, t)) continue;  // remainders left, re-pivot

            // Pivot must divide the rest of the block for the chain to hold.
            bool divides_all = true;
            for (Index i = t + 1; i < m && divides_all; ++i)
                for (Index j = t + 1; j < n && divides_all; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(t, i, Int(1));
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (d(t, t) < 0) negate_row(t);
    }

    return s;
}

}  // namespace abtv
