/**
 * Exact integer and rational linear algebra primitives.
 *
 * Integers are overflow-checked 64-bit values: any product or sum that
 * would wrap throws OverflowError instead. Rationals are GMP-backed and
 * always stored reduced with a positive denominator.
 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace toric4 {

using Int = long long;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class NotPrimitiveError : public Error {
public:
    using Error::Error;
};

class DependentBasisError : public Error {
public:
    using Error::Error;
};

class BadIndexError : public Error {
public:
    using Error::Error;
};

Int checked_add(Int x, Int y);
Int checked_sub(Int x, Int y);
Int checked_mul(Int x, Int y);
Int checked_neg(Int x);

struct IntVec2 {
    Int a = 0;
    Int b = 0;
    bool operator==(const IntVec2&) const = default;
};

/// gcd(|a|,|b|) = 1; the zero vector is not primitive.
bool is_primitive(IntVec2 v);

struct ExtGcd {
    Int g;  // gcd(|a|,|b|), nonnegative
    Int x;
    Int y;  // a*x + b*y == g
};

ExtGcd ext_gcd(Int a, Int b);

/// gcd of absolute values; 0 for an empty or all-zero list.
Int gcd_all(std::span<const Int> values);

/// v.a*w.b - w.a*v.b
Int det2(IntVec2 v, IntVec2 w);

class UnimodularMatrix2 {
public:
    UnimodularMatrix2(Int e00, Int e01, Int e10, Int e11);
    static UnimodularMatrix2 identity();

    Int entry(int r, int c) const { return e_[r][c]; }
    Int det() const;
    IntVec2 apply(IntVec2 v) const;
    UnimodularMatrix2 inverse() const;
    UnimodularMatrix2 operator*(const UnimodularMatrix2& rhs) const;
    bool operator==(const UnimodularMatrix2&) const = default;

private:
    Int e_[2][2];
};

/// U with U*v = (1,0)^T and det U = 1. Convention: first row from
/// ext_gcd(a,b), second row (-b, a). Requires v primitive.
UnimodularMatrix2 complete_to_unimodular(IntVec2 v);

/// Reduced fraction with positive denominator, arbitrary precision.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(Int n) : v_(static_cast<long>(n)) {}
    Rational(Int n, Int d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& r) const { return Rational(mpq_class(v_ + r.v_)); }
    Rational operator-(const Rational& r) const { return Rational(mpq_class(v_ - r.v_)); }
    Rational operator*(const Rational& r) const { return Rational(mpq_class(v_ * r.v_)); }
    Rational operator/(const Rational& r) const;
    Rational& operator+=(const Rational& r);
    Rational& operator-=(const Rational& r);
    Rational& operator*=(const Rational& r);

    bool operator==(const Rational& r) const { return v_ == r.v_; }
    bool operator!=(const Rational& r) const { return v_ != r.v_; }
    bool operator<(const Rational& r) const { return v_ < r.v_; }

    /// "p" or "p/q"
    std::string str() const;

private:
    mpq_class v_;
};

struct QMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    QMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const QMatrix&) const = default;
};

struct RrefResult {
    QMatrix mat;
    int rank = 0;
    std::vector<int> pivot_cols;
};

/// Row-reduced echelon form, exact, deterministic pivoting
/// (leftmost column, then topmost unused row).
RrefResult rref_rational(const QMatrix& m);

/// Exact determinant of a square rational matrix.
Rational det_rational(const QMatrix& m);

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    Int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    bool operator==(const IntMatrix&) const = default;
};

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);

/// The unique integer coefficients c with sum c_l * basis_l == target,
/// or nullopt when the rational solution is not integral.
/// Basis holds 1 or 2 vectors, independent over Q (DependentBasisError else).
std::optional<std::vector<Int>> solve_int_combination(IntVec2 target,
                                                      std::span<const IntVec2> basis);

}  // namespace toric4
