#include "toric4/intlinalg.hpp"

#include <cstdlib>

namespace toric4 {

Int checked_add(Int x, Int y) {
    Int r;
    if (__builtin_add_overflow(x, y, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

Int checked_sub(Int x, Int y) {
    Int r;
    if (__builtin_sub_overflow(x, y, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int x, Int y) {
    Int r;
    if (__builtin_mul_overflow(x, y, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

Int checked_neg(Int x) { return checked_sub(0, x); }

bool is_primitive(IntVec2 v) { return ext_gcd(v.a, v.b).g == 1; }

ExtGcd ext_gcd(Int a, Int b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    Int old_r = a, r = b;
    Int old_x = 1, x = 0;
    Int old_y = 0, y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = checked_sub(old_r, checked_mul(q, r)); old_r = r; r = t;
        t = checked_sub(old_x, checked_mul(q, x)); old_x = x; x = t;
        t = checked_sub(old_y, checked_mul(q, y)); old_y = y; y = t;
    }
    if (old_r < 0) {
        old_r = checked_neg(old_r);
        old_x = checked_neg(old_x);
        old_y = checked_neg(old_y);
    }
    return {old_r, old_x, old_y};
}

Int gcd_all(std::span<const Int> values) {
    Int g = 0;
    for (Int v : values) {
        g = ext_gcd(g, v).g;
        if (g == 1) return 1;
    }
    return g;
}

Int det2(IntVec2 v, IntVec2 w) { return checked_sub(checked_mul(v.a, w.b), checked_mul(w.a, v.b)); }

UnimodularMatrix2::UnimodularMatrix2(Int e00, Int e01, Int e10, Int e11) {
    e_[0][0] = e00;
    e_[0][1] = e01;
    e_[1][0] = e10;
    e_[1][1] = e11;
    Int d = det();
    if (d != 1 && d != -1) throw Error("matrix is not unimodular");
}

UnimodularMatrix2 UnimodularMatrix2::identity() { return {1, 0, 0, 1}; }

Int UnimodularMatrix2::det() const {
    return checked_sub(checked_mul(e_[0][0], e_[1][1]), checked_mul(e_[0][1], e_[1][0]));
}

IntVec2 UnimodularMatrix2::apply(IntVec2 v) const {
    return {checked_add(checked_mul(e_[0][0], v.a), checked_mul(e_[0][1], v.b)),
            checked_add(checked_mul(e_[1][0], v.a), checked_mul(e_[1][1], v.b))};
}

UnimodularMatrix2 UnimodularMatrix2::inverse() const {
    Int d = det();
    // adjugate over det; det is +-1 so entries stay integral
    return {checked_mul(d, e_[1][1]), checked_mul(d, checked_neg(e_[0][1])),
            checked_mul(d, checked_neg(e_[1][0])), checked_mul(d, e_[0][0])};
}

UnimodularMatrix2 UnimodularMatrix2::operator*(const UnimodularMatrix2& rhs) const {
    auto cell = [&](int r, int c) {
        return checked_add(checked_mul(e_[r][0], rhs.e_[0][c]), checked_mul(e_[r][1], rhs.e_[1][c]));
    };
    return {cell(0, 0), cell(0, 1), cell(1, 0), cell(1, 1)};
}

UnimodularMatrix2 complete_to_unimodular(IntVec2 v) {
    auto [g, x, y] = ext_gcd(v.a, v.b);
    if (g != 1) throw NotPrimitiveError("vector is not primitive");
    // (x y; -b a): det = xa + yb = 1, U*v = (1,0)^T
    return {x, y, checked_neg(v.b), v.a};
}

Rational::Rational(Int n, Int d) : v_(mpq_class(static_cast<long>(n), static_cast<long>(d))) {
    if (d == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) : v_(mpq_class(n, d)) {
    if (d == 0) throw Error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::operator/(const Rational& r) const {
    if (r.is_zero()) throw Error("rational division by zero");
    return Rational(mpq_class(v_ / r.v_));
}

Rational& Rational::operator+=(const Rational& r) {
    v_ += r.v_;
    return *this;
}

Rational& Rational::operator-=(const Rational& r) {
    v_ -= r.v_;
    return *this;
}

Rational& Rational::operator*=(const Rational& r) {
    v_ *= r.v_;
    return *this;
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

RrefResult rref_rational(const QMatrix& m) {
    RrefResult res;
    res.mat = m;
    QMatrix& a = res.mat;
    int lead = 0;
    for (int col = 0; col < a.cols && lead < a.rows; ++col) {
        int piv = -1;
        for (int r = lead; r < a.rows; ++r) {
            if (!a.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        if (piv != lead) {
            for (int c = 0; c < a.cols; ++c) std::swap(a.at(piv, c), a.at(lead, c));
        }
        Rational inv = Rational(1) / a.at(lead, col);
        for (int c = 0; c < a.cols; ++c) a.at(lead, c) *= inv;
        for (int r = 0; r < a.rows; ++r) {
            if (r == lead || a.at(r, col).is_zero()) continue;
            Rational f = a.at(r, col);
            for (int c = 0; c < a.cols; ++c) a.at(r, c) -= f * a.at(lead, c);
        }
        res.pivot_cols.push_back(col);
        ++lead;
    }
    res.rank = static_cast<int>(res.pivot_cols.size());
    return res;
}

Rational det_rational(const QMatrix& m) {
    if (m.rows != m.cols) throw Error("determinant of a non-square matrix");
    QMatrix a = m;
    int n = a.rows;
    Rational det(1);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!a.at(r, k).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return Rational(0);
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(a.at(piv, c), a.at(k, c));
            det = -det;
        }
        det *= a.at(k, k);
        Rational inv = Rational(1) / a.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            if (a.at(r, k).is_zero()) continue;
            Rational f = a.at(r, k) * inv;
            for (int c = k; c < n; ++c) a.at(r, c) -= f * a.at(k, c);
        }
    }
    return det;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw Error("matrix dimension mismatch");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            Int acc = 0;
            for (int k = 0; k < x.cols; ++k)
                acc = checked_add(acc, checked_mul(x.at(i, k), y.at(k, j)));
            r.at(i, j) = acc;
        }
    return r;
}

std::optional<std::vector<Int>> solve_int_combination(IntVec2 target,
                                                      std::span<const IntVec2> basis) {
    if (basis.size() == 1) {
        IntVec2 w = basis[0];
        if (w.a == 0 && w.b == 0) throw DependentBasisError("zero basis vector");
        // target = c*w with rational c; c integral required
        if (det2(target, w) != 0) return std::nullopt;
        Int c;
        if (w.a != 0) {
            if (target.a % w.a != 0) return std::nullopt;
            c = target.a / w.a;
        } else {
            if (target.b % w.b != 0) return std::nullopt;
            c = target.b / w.b;
        }
        if (checked_mul(c, w.a) != target.a || checked_mul(c, w.b) != target.b) return std::nullopt;
        return std::vector<Int>{c};
    }
    if (basis.size() == 2) {
        IntVec2 u = basis[0], w = basis[1];
        Int d = det2(u, w);
        if (d == 0) throw DependentBasisError("basis vectors are linearly dependent");
        // Cramer: c1 = det(target,w)/d, c2 = det(u,target)/d
        Int n1 = det2(target, w);
        Int n2 = det2(u, target);
        if (n1 % d != 0 || n2 % d != 0) return std::nullopt;
        return std::vector<Int>{n1 / d, n2 / d};
    }
    throw Error("solve_int_combination expects a basis of 1 or 2 vectors");
}

}  // namespace toric4
