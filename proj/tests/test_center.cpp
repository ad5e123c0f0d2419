#include "abtv/center.hpp"

#include "abtv/phase_oracle.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <complex>

using namespace abtv;

TEST_CASE("hom dimensions are deltas") {
    const CenterCategory c5(5);
    CHECK(c5.hom_dim(BaseObject{2}, BaseObject{2}) == 1);
    CHECK(c5.hom_dim(BaseObject{2}, BaseObject{3}) == 0);

    const CenterCategory c3(3);
    CHECK(c3.hom_dim(CenterObject{1, 2}, CenterObject{1, 2}) == 1);
    CHECK(c3.hom_dim(CenterObject{1, 2}, CenterObject{1, 0}) == 0);
    CHECK(c3.hom_dim(CenterObject{0, 0}, CenterObject{0, 0}) == 1);

    const CenterCategory c1(1);
    CHECK(c1.hom_dim(BaseObject{0}, BaseObject{0}) == 1);
    CHECK_THROWS_AS(CenterCategory(0), std::invalid_argument);
}

TEST_CASE("fusion and duals are componentwise mod k") {
    const CenterCategory c3(3);
    CHECK(c3.fuse(CenterObject{1, 2}, CenterObject{2, 2}) == CenterObject{0, 1});

    const CenterCategory c5(5);
    CHECK(c5.dual(CenterObject{1, 2}) == CenterObject{4, 3});
    CHECK(c5.dual(CenterObject{0, 0}) == CenterObject{0, 0});
}

TEST_CASE("braiding and twist exponents") {
    const CenterCategory c4(4);
    CHECK(c4.braiding(CenterObject{1, 1}, CenterObject{1, 1}) == angle_from(1, 4));

    const CenterCategory c6(6);
    CHECK(c6.braiding(CenterObject{2, 0}, CenterObject{0, 3}).is_zero());  // 2*3 = 0 mod 6
    for (long long u = 0; u < 6; ++u) CHECK(c6.twist(CenterObject{0, u}).is_zero());
}

TEST_CASE("s-matrix entries") {
    CHECK(CenterCategory(1).s_matrix().rows() == 1);
    CHECK(CenterCategory(1).s_matrix()(0, 0).is_zero());

    const CenterCategory c2(2);
    CHECK(c2.s_exponent(CenterObject{1, 1}, CenterObject{1, 1}).is_zero());  // (1+1)/2

    const CenterCategory c3(3);
    CHECK(c3.s_exponent(CenterObject{1, 0}, CenterObject{0, 1}) == angle_from(1, 3));

    const AngleMatrix s = c3.s_matrix();
    CHECK(s.rows() == 9);
    CHECK(s.is_symmetric());
}

TEST_CASE("axioms verify exhaustively for small k") {
    for (long long k = 1; k <= 6; ++k) {
        const AxiomReport report = verify_center_axioms(k);
        CHECK(report.all_passed());
        for (const auto& check : report.checks) {
            INFO(check.name, " k=", k, " counterexample=", check.counterexample);
            CHECK(check.passed);
        }
    }
    CHECK(verify_center_axioms(12).all_passed());
}

TEST_CASE("double braiding reproduces the s-exponent") {
    for (long long k = 1; k <= 6; ++k) {
        const CenterCategory cat(k);
        for (long long i = 0; i < cat.object_count(); ++i)
            for (long long j = 0; j < cat.object_count(); ++j) {
                const CenterObject a = cat.object_at(i), b = cat.object_at(j);
                CHECK(cat.braiding(a, b) + cat.braiding(b, a) == cat.s_exponent(a, b));
            }
    }
}

TEST_CASE("twist of a product expands into braidings and twists") {
    for (long long k = 1; k <= 6; ++k) {
        const CenterCategory cat(k);
        for (long long i = 0; i < cat.object_count(); ++i)
            for (long long j = 0; j < cat.object_count(); ++j) {
                const CenterObject a = cat.object_at(i), b = cat.object_at(j);
                CHECK(cat.twist(cat.fuse(a, b)) ==
                      cat.braiding(a, b) + cat.braiding(b, a) + cat.twist(a) + cat.twist(b));
            }
    }
}

TEST_CASE("exact unitarity of the center s-matrix") {
    for (long long k = 1; k <= 10; ++k) {
        CHECK(center_modularity_check(k));
        const IntMatrix gram = s_matrix_gram(k);
        const Int k2 = Int(k) * k;
        for (Index i = 0; i < gram.rows(); ++i)
            for (Index j = 0; j < gram.cols(); ++j)
                CHECK(gram(i, j) == (i == j ? k2 : Int(0)));
    }
}

TEST_CASE("unitarity collapse matches the numeric product for k = 3") {
    const long long k = 3;
    const CenterCategory cat(k);
    const long long n = cat.object_count();
    const IntMatrix gram = s_matrix_gram(k);
    for (long long i = 0; i < n; ++i) {
        for (long long j = 0; j < n; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (long long c = 0; c < n; ++c) {
                const auto sa = unit_phase(cat.s_exponent(cat.object_at(i), cat.object_at(c)));
                const auto sb = unit_phase(cat.s_exponent(cat.object_at(j), cat.object_at(c)));
                acc += sa * std::conj(sb);
            }
            CHECK(std::abs(acc.real() - gram(i, j).convert_to<double>()) < 1e-9);
            CHECK(std::abs(acc.imag()) < 1e-9);
        }
    }
}

TEST_CASE("base category is modular exactly for odd k") {
    for (long long k = 1; k <= 50; ++k) CHECK(base_modularity_check(k) == (k % 2 == 1));

    const AngleMatrix s4 = s_matrix_base(4);
    CHECK(s4(1, 1) == angle_from(2, 4));  // exponent 2mn/k
    CHECK(s4(1, 3) == angle_from(6, 4));
    CHECK(s4.is_symmetric());
}

TEST_CASE("quantum dimensions are trivial and the normalizations agree") {
    for (long long k = 1; k <= 12; ++k) {
        const QuantumDims q = quantum_dims(k);
        CHECK(q.dims.size() == static_cast<size_t>(k * k));
        for (const Int& d : q.dims) CHECK(d == 1);
        CHECK(q.global_dim == k);
        CHECK(q.rt_normalization == k);
    }
}

TEST_CASE("rt normalization sum collapses, numeric cross-check for k = 6") {
    std::vector<RationalAngle> angles;
    for (long long p = 0; p < 6; ++p)
        for (long long u = 0; u < 6; ++u) angles.push_back(angle_from(p * u, 6));
    const auto z = phase_sum_numeric(angles);
    CHECK(std::abs(z.real() - 6.0) < 1e-9);
    CHECK(std::abs(z.imag()) < 1e-9);
}
