// Exact evaluation of the bilinear character sums behind every invariant.
//
// The double sum  sum_{p in (Z_k)^m, u in (Z_k)^n} e^{2 pi i p^T B u / k}
// collapses by character orthogonality to  k^m * #{u : B u = 0 mod k},
// an integer. The solution count here is obtained by explicit enumeration
// over (Z_k)^n; homology.hpp derives the same count in closed form from
// Smith invariants, and the two routes cross-check each other.

#pragma once

#include "abtv/numeric.hpp"

#include <cstdint>
#include <vector>

namespace abtv {

/// sum_{x in Z_k} e^{2 pi i d x / k}: equals k when k | d, else 0.
inline Int character_orbit_sum(const Int& d, const Int& k) {
    if (k < 1) throw std::invalid_argument("character_orbit_sum: k must be >= 1");
    return mod_floor(d, k) == 0 ? k : Int(0);
}

/// sum over u in (Z_k)^n of e^{2 pi i d^T u / k}: k^n when d = 0 mod k, else 0.
inline Int linear_character_sum(const IntVector& d, const Int& k) {
    Int out = 1;
    for (Index i = 0; i < d.size(); ++i) out *= character_orbit_sum(d(i), k);
    return out;
}

/// #{u in (Z_k)^n : B u = 0 mod k}, counted by depth-first enumeration.
///
/// Entries are reduced mod k into machine integers; partial column sums are
/// maintained incrementally so a full pass is O(k^n * m / k) column updates.
/// budget == 0 means unlimited; otherwise k^n > budget raises BudgetExceeded.
template <typename Derived>
Int count_null_vectors_mod_k(const Eigen::MatrixBase<Derived>& B, long long k,
                             unsigned long long budget = 0) {
    if (k < 1) throw std::invalid_argument("count_null_vectors_mod_k: k must be >= 1");
    const Index m = B.rows();
    const Index n = B.cols();
    if (k == 1 || n == 0) return 1;

    if (budget != 0) {
        Int terms = pow_int(Int(k), static_cast<unsigned long>(n));
        if (terms > budget)
            throw BudgetExceeded("enumeration of (Z_k)^n exceeds budget: k^n = " + terms.str() +
                                     " > " + std::to_string(budget),
                                 terms, budget);
    }

    // Column-major reduced copy, skipping columns that vanish mod k.
    std::vector<std::vector<int64_t>> cols;
    cols.reserve(static_cast<size_t>(n));
    Int free_columns = 0;
    for (Index j = 0; j < n; ++j) {
        std::vector<int64_t> col(static_cast<size_t>(m));
        bool zero = true;
        for (Index i = 0; i < m; ++i) {
            col[static_cast<size_t>(i)] = mod_floor(B(i, j), k).template convert_to<int64_t>();
            if (col[static_cast<size_t>(i)] != 0) zero = false;
        }
        if (zero)
            ++free_columns;  // contributes a free factor of k
        else
            cols.push_back(std::move(col));
    }

    Int count = 0;
    if (cols.empty()) {
        count = 1;
    } else if (m == 0) {
        count = pow_int(Int(k), static_cast<unsigned long>(cols.size()));
    } else {
        const size_t active = cols.size();
        std::vector<int64_t> digit(active, 0);
        std::vector<int64_t> residual(static_cast<size_t>(m), 0);
        size_t nonzero = 0;
        auto add_column = [&](const std::vector<int64_t>& col) {
            for (size_t i = 0; i < residual.size(); ++i) {
                if (col[i] == 0) continue;
                if (residual[i] != 0) --nonzero;
                residual[i] += col[i];
                if (residual[i] >= k) residual[i] -= k;
                if (residual[i] != 0) ++nonzero;
            }
        };
        for (;;) {
            if (nonzero == 0) ++count;
            size_t pos = 0;
            while (pos < active) {
                add_column(cols[pos]);
                if (++digit[pos] == k) {
                    digit[pos] = 0;  // k additions wrap the residual back
                    ++pos;
                } else {
                    break;
                }
            }
            if (pos == active) break;
        }
    }

    return count * pow_int(Int(k), free_columns.convert_to<unsigned long>());
}

/// sum_{p in (Z_k)^m, u in (Z_k)^n} e^{2 pi i p^T B u / k}
///   = k^m * #{u in (Z_k)^n : B u = 0 mod k}.
/// Always a nonnegative integer; the sign of the exponent is immaterial.
template <typename Derived>
Int bilinear_character_sum(const Eigen::MatrixBase<Derived>& B, long long k,
                           unsigned long long budget = 0) {
    const Int inner = count_null_vectors_mod_k(B, k, budget);
    return pow_int(Int(k), static_cast<unsigned long>(B.rows())) * inner;
}

}  // namespace abtv
