// Exact elements of Q/Z.
//
// Every phase in the invariant formulas is e^{2*pi*i*theta} with theta
// rational, so the angle theta mod 1 is the whole datum. RationalAngle
// stores the reduced canonical representative in [0,1), which makes
// equality in Q/Z decidable and keeps all phase bookkeeping exact.

#pragma once

#include "abtv/numeric.hpp"

#include <ostream>
#include <vector>

namespace abtv {

class RationalAngle {
public:
    /// The zero angle 0/1.
    RationalAngle() : value_(0) {}

    /// The class of num/den in Q/Z. Requires den != 0.
    RationalAngle(const Int& num, const Int& den) {
        if (den == 0) throw std::invalid_argument("RationalAngle: zero denominator");
        value_ = wrap(Rational(num, den));
    }

    explicit RationalAngle(const Rational& value) : value_(wrap(value)) {}

    Int num() const { return numerator(value_); }
    Int den() const { return denominator(value_); }

    /// Order of the element in Q/Z (the reduced denominator).
    Int order() const { return denominator(value_); }

    bool is_zero() const { return numerator(value_) == 0; }

    /// Representative in [0,1) as an exact rational.
    const Rational& value() const { return value_; }

    RationalAngle operator-() const { return RationalAngle(-value_); }

    RationalAngle& operator+=(const RationalAngle& other) {
        value_ = wrap(value_ + other.value_);
        return *this;
    }

    RationalAngle& operator-=(const RationalAngle& other) {
        value_ = wrap(value_ - other.value_);
        return *this;
    }

    friend RationalAngle operator+(RationalAngle a, const RationalAngle& b) { return a += b; }
    friend RationalAngle operator-(RationalAngle a, const RationalAngle& b) { return a -= b; }

    /// n-fold sum n*a in Q/Z.
    friend RationalAngle operator*(const Int& n, const RationalAngle& a) {
        return RationalAngle(n * a.value_);
    }

    friend bool operator==(const RationalAngle& a, const RationalAngle& b) {
        return a.value_ == b.value_;
    }
    friend bool operator!=(const RationalAngle& a, const RationalAngle& b) {
        return !(a == b);
    }
    friend bool operator<(const RationalAngle& a, const RationalAngle& b) {
        return a.value_ < b.value_;
    }

    std::string str() const { return num().str() + "/" + den().str(); }

    friend std::ostream& operator<<(std::ostream& os, const RationalAngle& a) {
        return os << a.str();
    }

private:
    static Rational wrap(const Rational& x) {
        Int n = numerator(x);
        Int d = denominator(x);  // mpq keeps d > 0 and gcd(n,d) = 1
        return Rational(mod_floor(n, d), d);
    }

    Rational value_;  // canonical: in [0,1), reduced
};

/// The class of a/k in Q/Z. Requires k >= 1.
inline RationalAngle angle_from(const Int& a, const Int& k) {
    if (k < 1) throw std::invalid_argument("angle_from: modulus must be >= 1");
    return RationalAngle(a, k);
}

inline RationalAngle angle_from(long long a, long long k) {
    return angle_from(Int(a), Int(k));
}

/// Dense table of angles, row-major. Used for Gram matrices of linking
/// forms and for S-matrices, where "multiplication" of phases is addition
/// of angles and an Eigen matrix would suggest the wrong algebra.
class AngleMatrix {
public:
    AngleMatrix() : rows_(0), cols_(0) {}
    AngleMatrix(Index rows, Index cols)
        : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows * cols)) {}

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }

    RationalAngle& operator()(Index i, Index j) { return entries_[flat(i, j)]; }
    const RationalAngle& operator()(Index i, Index j) const { return entries_[flat(i, j)]; }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (Index i = 0; i < rows_; ++i)
            for (Index j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

private:
    size_t flat(Index i, Index j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("AngleMatrix: index out of range");
        return static_cast<size_t>(i * cols_ + j);
    }

    Index rows_, cols_;
    std::vector<RationalAngle> entries_;
};

}  // namespace abtv
