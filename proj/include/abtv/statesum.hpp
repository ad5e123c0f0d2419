// State-sum invariant on cellular decompositions: brute-force labeling
// enumeration, the closed cocycle-count form, and the character-sum
// middle expression of the reciprocity chain. Three distinct evaluation
// routes that must agree exactly.

#pragma once

#include "abtv/character_sum.hpp"
#include "abtv/homology.hpp"

#include <vector>

namespace abtv {

/// A cellular decomposition presented by counts and the signed face-edge
/// incidence matrix. The producer asserts connectedness and goodness
/// (cellular homology agreeing with the manifold); the engine can only
/// check the former, and the k^(V-1) normalization assumes it.
struct CellComplex {
    Index vertices = 1;
    Index edges = 0;
    Index faces = 0;
    IntMatrix incidence;  // faces x edges, entry = signed multiplicity
    bool connected = true;

    void validate() const {
        if (vertices < 1) throw std::invalid_argument("CellComplex: need at least one vertex");
        if (edges < 0 || faces < 0) throw std::invalid_argument("CellComplex: negative cell count");
        if (incidence.rows() != faces || incidence.cols() != edges)
            throw std::invalid_argument("CellComplex: incidence matrix must be faces x edges");
    }
};

/// Z_k labels on edges, in edge order.
using Labeling = std::vector<long long>;

/// The induced face label: the signed sum of the incident edge labels,
/// reduced mod k. Unsigned boundary words are the all-signs-+1 case.
inline long long face_sum(const CellComplex& complex, const Labeling& labels, Index face,
                          long long k) {
    complex.validate();
    if (k < 1) throw std::invalid_argument("face_sum: k must be >= 1");
    if (face < 0 || face >= complex.faces) throw std::out_of_range("face_sum: face index out of range");
    if (static_cast<Index>(labels.size()) != complex.edges)
        throw std::invalid_argument("face_sum: labeling length must equal edge count");
    Int acc = 0;
    for (Index e = 0; e < complex.edges; ++e) acc += complex.incidence(face, e) * Int(labels[static_cast<size_t>(e)]);
    return mod_floor(acc, k).convert_to<long long>();
}

namespace detail {

inline void require_connected(const CellComplex& complex, const char* who) {
    complex.validate();
    if (!complex.connected)
        throw std::invalid_argument(std::string(who) +
                                    ": complex must be connected (normalization assumes it)");
}

}  // namespace detail

/// Literal state sum: k^{-(V-1)} * #{labelings with every face label 0},
/// enumerated label by label through face_sum. Refuses when k^E exceeds
/// the term budget; the closed form tv_cocycle_count has no such limit.
inline Rational tv_bruteforce(const CellComplex& complex, long long k,
                              unsigned long long budget = 10'000'000) {
    detail::require_connected(complex, "tv_bruteforce");
    if (k < 1) throw std::invalid_argument("tv_bruteforce: k must be >= 1");

    const Int terms = pow_int(Int(k), static_cast<unsigned long>(complex.edges));
    if (budget != 0 && terms > budget)
        throw BudgetExceeded("tv_bruteforce: k^E = " + terms.str() + " labelings exceed budget " +
                                 std::to_string(budget) + "; use tv_cocycle_count instead",
                             terms, budget);

    Int admissible = 0;
    Labeling labels(static_cast<size_t>(complex.edges), 0);
    for (;;) {
        bool flat = true;
        for (Index f = 0; f < complex.faces && flat; ++f)
            flat = face_sum(complex, labels, f, k) == 0;
        if (flat) ++admissible;

        size_t pos = 0;
        while (pos < labels.size() && ++labels[pos] == k) labels[pos++] = 0;
        if (pos == labels.size()) break;
    }

    return Rational(admissible, pow_int(Int(k), static_cast<unsigned long>(complex.vertices - 1)));
}

/// Closed form of the same invariant: the admissible labelings are the
/// Z_k cocycles, counted from the Smith invariants of the incidence matrix.
inline Rational tv_cocycle_count(const CellComplex& complex, long long k) {
    detail::require_connected(complex, "tv_cocycle_count");
    return Rational(kernel_count_mod_k(complex.incidence, k),
                    pow_int(Int(k), static_cast<unsigned long>(complex.vertices - 1)));
}

/// Middle expression of the reciprocity chain:
/// k^{-(F+V-1)} * sum_{q in (Z_k)^F, v in (Z_k)^E} e^{2 pi i q^T D v / k},
/// evaluated exactly through the character-sum collapse.
inline Rational reciprocity_middle(const CellComplex& complex, long long k,
                                   unsigned long long budget = 0) {
    detail::require_connected(complex, "reciprocity_middle");
    const Int sum = bilinear_character_sum(complex.incidence, k, budget);
    return Rational(sum, pow_int(Int(k), static_cast<unsigned long>(complex.faces +
                                                                    complex.vertices - 1)));
}

/// Splits one edge into two (a new valence-two vertex). Each face that
/// traversed the edge now traverses both halves with the same sign; checks
/// that the invariant is blind to this kind of cellular refinement.
inline CellComplex subdivide_edge(const CellComplex& complex, Index edge) {
    complex.validate();
    if (edge < 0 || edge >= complex.edges)
        throw std::out_of_range("subdivide_edge: edge index out of range");
    CellComplex out;
    out.vertices = complex.vertices + 1;
    out.edges = complex.edges + 1;
    out.faces = complex.faces;
    out.connected = complex.connected;
    out.incidence = IntMatrix::Zero(out.faces, out.edges);
    out.incidence.leftCols(complex.edges) = complex.incidence;
    out.incidence.col(complex.edges) = complex.incidence.col(edge);
    return out;
}

}  // namespace abtv
