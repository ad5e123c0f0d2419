// Curated manifolds with known closed-form invariants: the worked examples
// plus standard extensions. Each entry carries a surgery presentation and,
// where a minimal good cell structure is available, a matching complex, so
// the verification suites can drive every identity end to end.

#pragma once

#include "abtv/invariants.hpp"

#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace abtv {

struct CatalogEntry {
    std::string name;
    SurgeryPresentation surgery;
    std::optional<CellComplex> complex;
    std::string expected_note;  // closed form of Upsilon_k, human-readable
    std::function<Int(long long)> expected_upsilon;  // closed-form oracle, may be empty
};

/// Coefficients of the continued fraction p/q = a1 - 1/(a2 - 1/(...)),
/// all a_i >= 2. Requires 0 < q < p and gcd(p, q) = 1.
inline std::vector<Int> lens_chain_coefficients(long long p, long long q) {
    if (p < 2 || q < 1 || q >= p || std::gcd(p, q) != 1)
        throw std::invalid_argument("lens_chain_coefficients: need 0 < q < p coprime");
    std::vector<Int> out;
    while (q > 0) {
        const long long a = (p + q - 1) / q;  // ceil(p/q)
        out.emplace_back(a);
        const long long next_q = a * q - p;
        p = q;
        q = next_q;
    }
    return out;
}

/// Tridiagonal chain linking matrix: diagonal a_i, off-diagonal -1.
/// |det| = p, so surgery on the chain gives the lens space L(p, q).
inline IntMatrix lens_chain_matrix(long long p, long long q) {
    const auto coeffs = lens_chain_coefficients(p, q);
    const Index n = static_cast<Index>(coeffs.size());
    IntMatrix out = IntMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        out(i, i) = coeffs[static_cast<size_t>(i)];
        if (i + 1 < n) {
            out(i, i + 1) = -1;
            out(i + 1, i) = -1;
        }
    }
    return out;
}

/// Minimal cell structure with one vertex, one edge, one face whose
/// boundary runs p times over the edge (p = 0 gives the product of a
/// circle and a sphere).
inline CellComplex one_relator_complex(long long p) {
    CellComplex c;
    c.vertices = 1;
    c.edges = 1;
    c.faces = 1;
    c.incidence = IntMatrix::Constant(1, 1, Int(p));
    return c;
}

inline CatalogEntry make_sphere() {
    CatalogEntry e;
    e.name = "S3";
    e.surgery = SurgeryPresentation::from_matrix(IntMatrix(0, 0));
    CellComplex c;
    c.vertices = 1;
    c.edges = 0;
    c.faces = 0;
    c.incidence = IntMatrix(0, 0);
    e.complex = c;
    e.expected_note = "Upsilon = 1";
    e.expected_upsilon = [](long long) { return Int(1); };
    return e;
}

inline CatalogEntry make_s1_x_s2() {
    CatalogEntry e;
    e.name = "S1xS2";
    e.surgery = SurgeryPresentation::from_matrix(int_matrix({{0}}));
    e.complex = one_relator_complex(0);
    e.expected_note = "Upsilon = k";
    e.expected_upsilon = [](long long k) { return Int(k); };
    return e;
}

/// L(p, q): single p-framed unknot when q = 1, otherwise the chain from
/// the continued-fraction expansion. The minimal cell structure is the
/// one-relator complex with attaching degree p either way.
inline CatalogEntry make_lens(long long p, long long q) {
    CatalogEntry e;
    e.name = "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
    if (q == 1) {
        e.surgery = SurgeryPresentation::from_matrix(int_matrix({{p}}));
    } else {
        e.surgery = SurgeryPresentation::from_matrix(lens_chain_matrix(p, q));
    }
    e.complex = one_relator_complex(p);
    e.expected_note = "Upsilon = gcd(k," + std::to_string(p) + ")";
    e.expected_upsilon = [p](long long k) { return gcd(Int(k), Int(p)); };
    return e;
}

/// The E8 plumbing matrix: diagonal 2, off-diagonal -1 along the E8 tree
/// (legs of lengths 4, 2, 1 around the branch node). Unimodular, so the
/// surgered manifold is a homology sphere.
inline IntMatrix e8_matrix() {
    IntMatrix m = IntMatrix::Zero(8, 8);
    for (Index i = 0; i < 8; ++i) m(i, i) = 2;
    const std::pair<Index, Index> edges[] = {{0, 1}, {1, 2}, {2, 3}, {3, 4},
                                             {4, 5}, {5, 6}, {4, 7}};
    for (auto [a, b] : edges) {
        m(a, b) = -1;
        m(b, a) = -1;
    }
    return m;
}

inline CatalogEntry make_poincare_sphere() {
    CatalogEntry e;
    e.name = "PoincareSphere";
    e.surgery = SurgeryPresentation::from_matrix(e8_matrix());
    e.expected_note = "Upsilon = 1";
    e.expected_upsilon = [](long long) { return Int(1); };
    return e;
}

/// The 3-torus: zero-framed surgery on the Borromean rings (zero linking
/// matrix); the standard cell structure has one vertex, three edges,
/// three faces with vanishing signed incidence.
inline CatalogEntry make_three_torus() {
    CatalogEntry e;
    e.name = "T3";
    e.surgery = SurgeryPresentation::from_matrix(IntMatrix::Zero(3, 3));
    CellComplex c;
    c.vertices = 1;
    c.edges = 3;
    c.faces = 3;
    c.incidence = IntMatrix::Zero(3, 3);
    e.complex = c;
    e.expected_note = "Upsilon = k^3";
    e.expected_upsilon = [](long long k) { return pow_int(Int(k), 3); };
    return e;
}

inline std::vector<CatalogEntry> catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back(make_sphere());
    entries.push_back(make_s1_x_s2());
    entries.push_back(make_lens(2, 1));
    entries.push_back(make_lens(3, 1));
    entries.push_back(make_lens(5, 1));
    entries.push_back(make_lens(7, 1));
    entries.push_back(make_lens(12, 1));
    entries.push_back(make_lens(5, 2));
    entries.push_back(make_lens(7, 3));
    entries.push_back(make_lens(8, 3));
    entries.push_back(make_poincare_sphere());
    entries.push_back(make_three_torus());
    return entries;
}

}  // namespace abtv
