// Shared scalar and dense-matrix types for exact integer computations.
//
// Everything downstream works over arbitrary-precision integers: Smith
// pivots and determinants of even small linking matrices can overflow
// 64 bits, so the scalar is mpz_int throughout and floating point never
// enters an invariant pipeline.

#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <initializer_list>
#include <stdexcept>
#include <string>

namespace abtv {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

using boost::multiprecision::abs;
using boost::multiprecision::denominator;
using boost::multiprecision::gcd;
using boost::multiprecision::numerator;

/// Canonical representative of a mod m in [0, m). Requires m >= 1.
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;  // truncated, may be negative
    if (r < 0) r += m;
    return r;
}

/// base^exp for a nonnegative integer exponent.
inline Int pow_int(const Int& base, unsigned long exp) {
    Int result = 1;
    Int b = base;
    while (exp != 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

inline IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
    const Index m = static_cast<Index>(rows.size());
    Index n = 0;
    if (m > 0) n = static_cast<Index>(rows.begin()->size());
    IntMatrix out(m, n);
    Index i = 0;
    for (const auto& row : rows) {
        if (static_cast<Index>(row.size()) != n)
            throw std::invalid_argument("int_matrix: ragged rows");
        Index j = 0;
        for (long long v : row) out(i, j++) = v;
        ++i;
    }
    return out;
}

inline IntVector int_vector(std::initializer_list<long long> values) {
    IntVector out(static_cast<Index>(values.size()));
    Index i = 0;
    for (long long v : values) out(i++) = v;
    return out;
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
    if (denominator(x) == 1) return numerator(x).str();
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Raised when a brute-force enumeration would exceed its term budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what, const Int& required, unsigned long long budget)
        : std::runtime_error(what), required_terms(required), budget_terms(budget) {}

    Int required_terms;
    unsigned long long budget_terms;
};

}  // namespace abtv
