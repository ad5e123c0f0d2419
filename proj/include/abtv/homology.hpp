// First homology of the presented manifold and its torsion linking form,
// both read off the Smith decomposition of a linking (or incidence) matrix.

#pragma once

#include "abtv/rational_angle.hpp"
#include "abtv/smith.hpp"

#include <iostream>
#include <vector>

namespace abtv {

/// |{u in (Z_k)^n : M u = 0 mod k}| in closed form from the Smith
/// invariants: prod_i gcd(k, d_i) * k^(n - rank).
template <typename Derived>
Int kernel_count_mod_k(const Eigen::MatrixBase<Derived>& matrix, long long k) {
    if (k < 1) throw std::invalid_argument("kernel_count_mod_k: k must be >= 1");
    const SmithDecomposition s = smith_normal_form(matrix);
    Int count = pow_int(Int(k), static_cast<unsigned long>(matrix.cols() - s.rank()));
    for (const Int& d : s.invariant_factors()) count *= gcd(Int(k), d);
    return count;
}

/// b_1 and the torsion coefficients p_1 | p_2 | ... | p_N (all >= 2)
/// of coker L, i.e. of H_1 of the surgered manifold.
struct HomologySummary {
    Index betti1 = 0;
    std::vector<Int> torsion;

    /// |T^2| = p_1 * ... * p_N.
    Int torsion_order() const {
        Int t = 1;
        for (const Int& p : torsion) t *= p;
        return t;
    }
};

template <typename Derived>
HomologySummary homology_from_linking_matrix(const Eigen::MatrixBase<Derived>& linking) {
    if (linking.rows() != linking.cols())
        throw std::invalid_argument("homology_from_linking_matrix: matrix must be square");
    if (!(linking == linking.transpose().eval()))
        std::cerr << "warning: homology_from_linking_matrix: matrix is not symmetric; "
                     "treating it as a generic presentation matrix\n";
    const SmithDecomposition s = smith_normal_form(linking);
    HomologySummary h;
    h.betti1 = linking.rows() - s.rank();
    for (const Int& d : s.invariant_factors())
        if (d > 1) h.torsion.push_back(d);
    return h;
}

/// The Q/Z-valued symmetric pairing on the torsion of H_1.
///
/// Generators g_i are the classes of U^-1 e_i for the invariant factors
/// d_i >= 2; with x_i = V e_i one has L x_i = d_i g_i, and
/// Q(g_i, g_j) = (x_i . g_j) / d_i mod 1. The sign inherited from the
/// U, V bookkeeping is left as produced: the partition-function sums run
/// over a range symmetric under negation, so a global sign never matters.
struct LinkingForm {
    std::vector<Int> generator_orders;  // the p_j >= 2, divisibility chain
    AngleMatrix gram;                   // gram(i,j) = Q(g_i, g_j)

    Index size() const { return static_cast<Index>(generator_orders.size()); }

    Int torsion_order() const {
        Int t = 1;
        for (const Int& p : generator_orders) t *= p;
        return t;
    }
};

template <typename Derived>
LinkingForm linking_form(const Eigen::MatrixBase<Derived>& linking) {
    if (linking.rows() != linking.cols() || !(linking == linking.transpose().eval()))
        throw std::invalid_argument("linking_form: matrix must be symmetric");

    const IntMatrix L = linking.template cast<Int>();
    const SmithDecomposition s = smith_normal_form(L);

    std::vector<Index> torsion_idx;
    for (Index i = 0; i < s.rank(); ++i)
        if (s.d(i, i) > 1) torsion_idx.push_back(i);

    LinkingForm form;
    form.gram = AngleMatrix(static_cast<Index>(torsion_idx.size()),
                            static_cast<Index>(torsion_idx.size()));
    for (Index idx : torsion_idx) form.generator_orders.push_back(s.d(idx, idx));

    // L (V e_i) = d_i (U^-1 e_i) holds by construction; a mismatch means the
    // transform bookkeeping is corrupt, not that the input is bad.
    for (size_t a = 0; a < torsion_idx.size(); ++a) {
        const Index i = torsion_idx[a];
        const IntVector xi = s.v.col(i);
        const IntVector gi = s.u_inverse.col(i);
        if (!((L * xi).eval() == (s.d(i, i) * gi).eval()))
            throw std::logic_error("linking_form: Smith bookkeeping check failed");
        for (size_t b = 0; b < torsion_idx.size(); ++b) {
            const Index j = torsion_idx[b];
            const Int pairing = xi.dot(s.u_inverse.col(j));
            form.gram(static_cast<Index>(a), static_cast<Index>(b)) =
                RationalAngle(pairing, s.d(i, i));
        }
    }
    return form;
}

}  // namespace abtv
