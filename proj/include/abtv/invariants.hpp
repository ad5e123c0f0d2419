// Manifold invariants from surgery data, all in exact arithmetic:
// the normalized state-sum invariant Upsilon, its 1/k-normalized twin tau,
// the surgery invariant of the center category (closed form and literal
// Gauss sum), the BF partition function (torsion closed form and linking
// form sum), surgery expectations, link surgery invariants, and the
// verifier that ties every identity between them together.

#pragma once

#include "abtv/character_sum.hpp"
#include "abtv/homology.hpp"
#include "abtv/kirby.hpp"
#include "abtv/statesum.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace abtv {

struct ExternalLink {
    IntVector lambda;  // linking numbers with each surgery component
    Int framing = 0;   // self-linking of the external loop
};

/// A framed surgery link, reduced to what the abelian invariants see:
/// its symmetric linking matrix (framings on the diagonal), plus the
/// linking data of an optional external loop.
struct SurgeryPresentation {
    IntMatrix linking;  // m x m symmetric
    std::optional<ExternalLink> external;

    Index components() const { return linking.rows(); }

    void validate() const {
        if (linking.rows() != linking.cols())
            throw std::invalid_argument("SurgeryPresentation: linking matrix must be square");
        if (!(linking == linking.transpose().eval()))
            throw std::invalid_argument("SurgeryPresentation: linking matrix must be symmetric");
        if (external && external->lambda.size() != linking.rows())
            throw std::invalid_argument(
                "SurgeryPresentation: external linking vector length must equal component count");
    }

    static SurgeryPresentation from_matrix(IntMatrix linking) {
        SurgeryPresentation s{std::move(linking), std::nullopt};
        s.validate();
        return s;
    }
};

/// Upsilon_k = |H^1(M, Z_k)| = k^b1 * prod_j gcd(k, p_j).
inline Int upsilon(const HomologySummary& homology, long long k) {
    if (k < 1) throw std::invalid_argument("upsilon: k must be >= 1");
    Int out = pow_int(Int(k), static_cast<unsigned long>(homology.betti1));
    for (const Int& p : homology.torsion) out *= gcd(Int(k), p);
    return out;
}

/// BF partition function in closed form: prod_j gcd(k, p_j) * p_j over the
/// torsion coefficients. The Betti number plays no role.
inline Int bf_partition(const HomologySummary& homology, long long k) {
    if (k < 1) throw std::invalid_argument("bf_partition: k must be >= 1");
    Int out = 1;
    for (const Int& p : homology.torsion) out *= gcd(Int(k), p) * p;
    return out;
}

/// BF partition function evaluated from the linking form itself:
/// sum over kappa, tau in T^2 of e^{-2 pi i k Q(kappa, tau)}. The tau-sum
/// collapses, leaving |T^2| times the count of kappa annihilated by k*Q.
inline Int bf_partition_via_linking_form(const LinkingForm& form, long long k) {
    if (k < 1) throw std::invalid_argument("bf_partition_via_linking_form: k must be >= 1");
    const Index n = form.size();
    if (n == 0) return 1;

    // Walk kappa = sum_i a_i g_i over prod Z_{p_i} with an odometer,
    // keeping the row of angles k * Q(kappa, g_j) updated incrementally.
    std::vector<Int> digits(static_cast<size_t>(n), 0);
    std::vector<RationalAngle> pairing_row(static_cast<size_t>(n));
    std::vector<std::vector<RationalAngle>> step(static_cast<size_t>(n),
                                                 std::vector<RationalAngle>(static_cast<size_t>(n)));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            step[static_cast<size_t>(i)][static_cast<size_t>(j)] = Int(k) * form.gram(i, j);

    Int annihilated = 0;
    for (;;) {
        bool all_zero = true;
        for (Index j = 0; j < n && all_zero; ++j)
            all_zero = pairing_row[static_cast<size_t>(j)].is_zero();
        if (all_zero) ++annihilated;

        size_t pos = 0;
        while (pos < digits.size()) {
            for (Index j = 0; j < n; ++j)
                pairing_row[static_cast<size_t>(j)] += step[pos][static_cast<size_t>(j)];
            if (++digits[pos] == form.generator_orders[pos]) {
                digits[pos] = 0;  // p_pos steps add p_pos * k * Q(g,.) = 0
                ++pos;
            } else {
                break;
            }
        }
        if (pos == digits.size()) break;
    }

    return form.torsion_order() * annihilated;
}

/// Surgery invariant of the center category, closed form:
/// (1/k) |ker L^[k]| = (1/k) |H^1(M, Z_k)|.
template <typename Derived>
Rational rt_center_closed(const Eigen::MatrixBase<Derived>& linking, long long k) {
    if (k < 1) throw std::invalid_argument("rt_center_closed: k must be >= 1");
    return Rational(kernel_count_mod_k(linking, k), Int(k));
}

/// The same invariant as the literal Gauss sum over (Z_k x Z_k)^m,
/// normalized by k^{m+1}. Must agree with rt_center_closed exactly.
template <typename Derived>
Rational rt_center_bruteforce(const Eigen::MatrixBase<Derived>& linking, long long k,
                              unsigned long long budget = 0) {
    if (k < 1) throw std::invalid_argument("rt_center_bruteforce: k must be >= 1");
    const Int sum = bilinear_character_sum(linking, k, budget);
    return Rational(sum, pow_int(Int(k), static_cast<unsigned long>(linking.rows()) + 1));
}

/// Expectation of the surgery function: the full charge sum
/// sum_{p,u in (Z_k)^m} e^{-2 pi i p^T L u / k} = k^m |ker L^[k]|,
/// evaluated through the enumeration route.
inline Int surgery_expectation(const SurgeryPresentation& surgery, long long k,
                               unsigned long long budget = 0) {
    surgery.validate();
    if (surgery.external)
        throw std::invalid_argument("surgery_expectation: external link not allowed here");
    return bilinear_character_sum(surgery.linking, k, budget);
}

/// Surgery formula for the state-sum invariant: Upsilon = k^{-m} <W>.
/// Cross-checks the expectation against the homology route before returning.
inline Int upsilon_via_surgery(const SurgeryPresentation& surgery, long long k,
                               unsigned long long budget = 0) {
    const Int expectation = surgery_expectation(surgery, k, budget);
    const Int km = pow_int(Int(k), static_cast<unsigned long>(surgery.components()));
    const Int from_surgery = expectation / km;
    if (from_surgery * km != expectation ||
        from_surgery != upsilon(homology_from_linking_matrix(surgery.linking), k))
        throw std::logic_error("upsilon_via_surgery: surgery formula disagrees with homology");
    return from_surgery;
}

/// An exact value n * e^{2 pi i theta} with n a nonnegative integer.
struct PhasedInt {
    Int magnitude = 0;
    RationalAngle phase;

    bool is_zero() const { return magnitude == 0; }

    friend bool operator==(const PhasedInt& a, const PhasedInt& b) {
        if (a.magnitude == 0 && b.magnitude == 0) return true;
        return a.magnitude == b.magnitude && a.phase == b.phase;
    }

    std::string str() const {
        if (magnitude == 0) return "0";
        if (phase.is_zero()) return magnitude.str();
        return magnitude.str() + " * e^(2*pi*i * " + phase.str() + ")";
    }
};

/// Same with a rational magnitude, for expectation ratios.
struct PhasedRational {
    Rational magnitude = 0;
    RationalAngle phase;

    bool is_zero() const { return magnitude == 0; }

    friend bool operator==(const PhasedRational& a, const PhasedRational& b) {
        if (a.magnitude == 0 && b.magnitude == 0) return true;
        return a.magnitude == b.magnitude && a.phase == b.phase;
    }

    std::string str() const {
        if (magnitude == 0) return "0";
        if (phase.is_zero()) return to_string(magnitude);
        return to_string(magnitude) + " * e^(2*pi*i * " + phase.str() + ")";
    }
};

/// Surgery invariant of an external link L in M:
/// (1/k^m) sum_{p,u} e^{-(2 pi i / k)(p^T L u + p^T lambda + lambda^T u + f)}.
///
/// The p-sum collapses onto the solution coset {u : L u + lambda = 0 mod k};
/// on that coset the remaining character is either constant (giving
/// |coset| times a k-th root of unity) or nonconstant (summing to zero by
/// orthogonality). Either way the value is exact and float-free.
inline PhasedInt upsilon_link(const SurgeryPresentation& surgery, long long k,
                              unsigned long long budget = 0) {
    surgery.validate();
    if (k < 1) throw std::invalid_argument("upsilon_link: k must be >= 1");
    if (!surgery.external)
        throw std::invalid_argument("upsilon_link: surgery presentation has no external link");

    const IntMatrix& L = surgery.linking;
    const IntVector& lambda = surgery.external->lambda;
    const Int& framing = surgery.external->framing;
    const Index m = surgery.components();

    if (budget != 0) {
        Int terms = pow_int(Int(k), static_cast<unsigned long>(m));
        if (terms > budget)
            throw BudgetExceeded("upsilon_link: k^m = " + terms.str() + " exceeds budget " +
                                     std::to_string(budget),
                                 terms, budget);
    }

    // Enumerate u over (Z_k)^m; on solutions of L u = -lambda record the
    // residue lambda^T u mod k. chi is constant on the coset iff the
    // residue is; otherwise the coset sum vanishes.
    Int solutions = 0;
    Int residue = 0;
    bool constant = true;
    std::vector<Int> u(static_cast<size_t>(m), 0);
    IntVector uvec = IntVector::Zero(m);
    for (;;) {
        bool solves = true;
        for (Index i = 0; i < m && solves; ++i)
            solves = mod_floor(L.row(i).dot(uvec) + lambda(i), k) == 0;
        if (solves) {
            const Int r = mod_floor(lambda.dot(uvec), k);
            if (solutions == 0)
                residue = r;
            else if (r != residue)
                constant = false;
            ++solutions;
        }
        size_t pos = 0;
        while (pos < u.size()) {
            uvec(static_cast<Index>(pos)) = ++u[pos];
            if (u[pos] == k) {
                u[pos] = 0;
                uvec(static_cast<Index>(pos)) = 0;
                ++pos;
            } else {
                break;
            }
        }
        if (pos == u.size()) break;
    }

    if (solutions == 0 || !constant) return PhasedInt{};
    return PhasedInt{solutions, angle_from(-(residue + framing), Int(k))};
}

/// BF expectation of the external link's holonomies in M:
/// Upsilon_k(M; L) / Upsilon_k(M).
inline PhasedRational expectation_ratio(const SurgeryPresentation& surgery, long long k,
                                        unsigned long long budget = 0) {
    const PhasedInt numerator = upsilon_link(surgery, k, budget);
    const Int denominator = upsilon(homology_from_linking_matrix(surgery.linking), k);
    return PhasedRational{Rational(numerator.magnitude, denominator), numerator.phase};
}

struct IdentityCheck {
    enum class Status { passed, failed, skipped };

    std::string name;
    Status status = Status::passed;
    std::string lhs, rhs;  // both sides, exact, for failure reports
    std::string note;

    bool failed() const { return status == Status::failed; }
};

/// Everything the verifier establishes about one (manifold, k) pair.
struct InvariantReport {
    long long k = 1;
    HomologySummary homology;
    Int upsilon = 1;
    Rational tau = 1;        // = upsilon / k
    Rational rt_center = 1;  // = tau when both are computed
    Int z_bf = 1;
    std::vector<IdentityCheck> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.failed()) return false;
        return true;
    }
};

struct VerifyOptions {
    unsigned long long enumeration_budget = 100'000'000;  // terms per brute-force sum
    unsigned long long statesum_budget = 10'000'000;      // labelings for tv_bruteforce
    int kirby_sequences = 20;
    int kirby_moves_per_sequence = 6;
    uint64_t seed = 1;
};

namespace detail {

template <typename Value>
IdentityCheck make_check(const std::string& name, const Value& lhs, const Value& rhs,
                         const std::string& note = "") {
    IdentityCheck c;
    c.name = name;
    c.status = lhs == rhs ? IdentityCheck::Status::passed : IdentityCheck::Status::failed;
    using abtv::to_string;
    using std::to_string;
    c.lhs = to_string(lhs);
    c.rhs = to_string(rhs);
    c.note = note;
    return c;
}

inline IdentityCheck skipped_check(const std::string& name, const std::string& why) {
    IdentityCheck c;
    c.name = name;
    c.status = IdentityCheck::Status::skipped;
    c.note = why;
    return c;
}

}  // namespace detail

/// Runs every identity the library knows for one surgery presentation
/// (and optionally a cell complex presenting the same manifold) at one k.
/// Failed checks are data in the report, never exceptions.
inline InvariantReport verify_identities(const SurgeryPresentation& surgery,
                                         const std::optional<CellComplex>& complex, long long k,
                                         const VerifyOptions& options = {}) {
    surgery.validate();
    if (k < 1) throw std::invalid_argument("verify_identities: k must be >= 1");

    const IntMatrix& L = surgery.linking;
    InvariantReport report;
    report.k = k;
    report.homology = homology_from_linking_matrix(L);
    report.upsilon = upsilon(report.homology, k);
    report.tau = Rational(report.upsilon, Int(k));
    report.rt_center = rt_center_closed(L, k);
    report.z_bf = bf_partition(report.homology, k);

    // (a) closed kernel count against the literal Gauss sum
    try {
        report.checks.push_back(detail::make_check(
            "rt_closed_vs_bruteforce", report.rt_center,
            rt_center_bruteforce(L, k, options.enumeration_budget)));
    } catch (const BudgetExceeded& e) {
        report.checks.push_back(detail::skipped_check("rt_closed_vs_bruteforce", e.what()));
    }

    // (b) the center invariant reproduces the normalized state-sum invariant
    report.checks.push_back(
        detail::make_check("turaev_virelizier_rt_equals_tau", report.rt_center, report.tau));
    report.checks.push_back(detail::make_check("upsilon_equals_k_tau", Rational(report.upsilon),
                                               Rational(Int(k)) * report.tau));

    // (c) Upsilon = (k^b1 / prod p_j) * Z_BF, cross-multiplied to integers
    report.checks.push_back(detail::make_check(
        "upsilon_vs_bf_partition", report.upsilon * report.homology.torsion_order(),
        pow_int(Int(k), static_cast<unsigned long>(report.homology.betti1)) * report.z_bf));

    // (d) BF closed form against the linking-form character sum
    report.checks.push_back(detail::make_check(
        "bf_closed_vs_linking_form", report.z_bf,
        bf_partition_via_linking_form(linking_form(L), k)));

    // (e) the reciprocity chain, when a cell complex is supplied
    if (complex) {
        report.checks.push_back(detail::make_check(
            "complex_cocycles_vs_upsilon", tv_cocycle_count(*complex, k),
            Rational(report.upsilon)));

        try {
            const Rational left = Rational(
                bilinear_character_sum(L, k, options.enumeration_budget),
                pow_int(Int(k), static_cast<unsigned long>(surgery.components())));
            const Rational middle = reciprocity_middle(*complex, k, options.enumeration_budget);
            report.checks.push_back(
                detail::make_check("reciprocity_surgery_vs_complex", left, middle));
            const Rational right =
                Rational(pow_int(Int(k), static_cast<unsigned long>(report.homology.betti1)) *
                             bf_partition_via_linking_form(linking_form(L), k),
                         report.homology.torsion_order());
            report.checks.push_back(
                detail::make_check("reciprocity_complex_vs_torsion", middle, right));
        } catch (const BudgetExceeded& e) {
            report.checks.push_back(detail::skipped_check("reciprocity_chain", e.what()));
        }

        try {
            report.checks.push_back(detail::make_check(
                "statesum_bruteforce_vs_cocycles", tv_bruteforce(*complex, k, options.statesum_budget),
                tv_cocycle_count(*complex, k)));
        } catch (const BudgetExceeded& e) {
            report.checks.push_back(detail::skipped_check("statesum_bruteforce_vs_cocycles", e.what()));
        }
    }

    // (f) invariance under random surgery moves, all four invariants
    {
        std::mt19937_64 rng(options.seed);
        IdentityCheck kirby;
        kirby.name = "kirby_move_invariance";
        kirby.status = IdentityCheck::Status::passed;
        for (int seq = 0; seq < options.kirby_sequences && !kirby.failed(); ++seq) {
            const auto moves =
                random_kirby_moves(surgery.components(), options.kirby_moves_per_sequence, rng);
            const IntMatrix moved = apply_kirby_moves(L, moves);
            const HomologySummary h2 = homology_from_linking_matrix(moved);
            const Int u2 = upsilon(h2, k);
            const Rational rt2 = rt_center_closed(moved, k);
            const Int z2 = bf_partition(h2, k);
            if (u2 != report.upsilon || rt2 != report.rt_center || z2 != report.z_bf) {
                kirby.status = IdentityCheck::Status::failed;
                kirby.lhs = report.upsilon.str() + ", " + to_string(report.rt_center) + ", " +
                            report.z_bf.str();
                kirby.rhs = u2.str() + ", " + to_string(rt2) + ", " + z2.str();
                kirby.note = "sequence " + std::to_string(seq);
            }
        }
        report.checks.push_back(std::move(kirby));
    }

    return report;
}

}  // namespace abtv
