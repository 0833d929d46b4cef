#include "toric4/srengine.hpp"

#include <algorithm>
#include <sstream>

namespace toric4 {

Deg2Class unit_class(int m, int i) {
    Deg2Class c(m);
    c.coeff(i) = Rational(1);
    return c;
}

bool monomial_allowed(int m, int i, int j) {
    if (i == j) return true;
    int lo = std::min(i, j), hi = std::max(i, j);
    return hi - lo == 1 || (lo == 1 && hi == m);
}

Monomial canon_monomial(int i, int j) { return {std::min(i, j), std::max(i, j)}; }

Deg4Class deg4_monomial(int m, int i, int j) {
    Deg4Class c;
    if (monomial_allowed(m, i, j)) c.terms[canon_monomial(i, j)] = Rational(1);
    return c;
}

Deg4Class multiply(int m, const Deg2Class& c1, const Deg2Class& c2) {
    if (c1.m() != m || c2.m() != m) throw Error("degree-2 class size mismatch");
    Deg4Class out;
    for (int i = 1; i <= m; ++i) {
        if (c1.coeff(i).is_zero()) continue;
        for (int j = 1; j <= m; ++j) {
            if (c2.coeff(j).is_zero()) continue;
            if (!monomial_allowed(m, i, j)) continue;
            Rational t = c1.coeff(i) * c2.coeff(j);
            auto key = canon_monomial(i, j);
            auto it = out.terms.find(key);
            if (it == out.terms.end())
                out.terms.emplace(key, t);
            else {
                it->second += t;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

LinearRelations linear_relations(const DegenerateCharacteristicPair& p) {
    int m = p.m();
    LinearRelations r{Deg2Class(m), Deg2Class(m)};
    for (int i = 1; i <= m; ++i) {
        r.l1.coeff(i) = Rational(p.vec(i).a);
        r.l2.coeff(i) = Rational(p.vec(i).b);
    }
    return r;
}

namespace {

std::vector<Monomial> monomial_order(int m) {
    std::vector<Monomial> mono;
    for (int i = 1; i <= m; ++i) mono.push_back({i, i});
    for (int i = 1; i <= m; ++i) {
        Monomial key = canon_monomial(i, i % m + 1);
        if (std::find(mono.begin(), mono.end(), key) == mono.end()) mono.push_back(key);
    }
    return mono;
}

}  // namespace

Deg4Quotient Deg4Quotient::build(const CharacteristicPair& p) {
    Deg4Quotient q;
    q.m_ = p.m();
    q.monomials_ = monomial_order(q.m_);
    for (int c = 0; c < static_cast<int>(q.monomials_.size()); ++c)
        q.col_of_[q.monomials_[static_cast<size_t>(c)]] = c;

    auto rel = linear_relations(p);
    int cols = static_cast<int>(q.monomials_.size());
    QMatrix rows(2 * q.m_, cols);
    for (int t = 1; t <= q.m_; ++t) {
        Deg4Class r1 = multiply(q.m_, rel.l1, unit_class(q.m_, t));
        Deg4Class r2 = multiply(q.m_, rel.l2, unit_class(q.m_, t));
        for (const auto& [key, val] : r1.terms) rows.at(2 * (t - 1), q.col_of_.at(key)) = val;
        for (const auto& [key, val] : r2.terms) rows.at(2 * (t - 1) + 1, q.col_of_.at(key)) = val;
    }
    q.rel_ = rref_rational(rows);
    q.dim_ = cols - q.rel_.rank;
    if (q.dim_ != 1)
        throw DegenerateQuotientError("degree-4 quotient has dimension " + std::to_string(q.dim_));
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : q.rel_.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[static_cast<size_t>(c)]) q.free_col_ = c;

    auto gen_res = q.residual(deg4_monomial(q.m_, q.m_ - 1, q.m_));
    q.gen_value_ = gen_res[static_cast<size_t>(q.free_col_)];
    if (q.gen_value_.is_zero())
        throw DegenerateQuotientError("distinguished generator vanishes in the quotient");
    return q;
}

Monomial Deg4Quotient::generator() const { return {m_ - 1, m_}; }

std::vector<Rational> Deg4Quotient::residual(const Deg4Class& c) const {
    std::vector<Rational> v(monomials_.size());
    for (const auto& [key, val] : c.terms) {
        auto it = col_of_.find(key);
        if (it == col_of_.end()) throw Error("monomial outside the admissible set");
        v[static_cast<size_t>(it->second)] = val;
    }
    for (int r = 0; r < rel_.rank; ++r) {
        int pc = rel_.pivot_cols[static_cast<size_t>(r)];
        Rational f = v[static_cast<size_t>(pc)];
        if (f.is_zero()) continue;
        for (int col = 0; col < rel_.mat.cols; ++col)
            v[static_cast<size_t>(col)] -= f * rel_.mat.at(r, col);
    }
    return v;
}

Rational Deg4Quotient::reduce_to_generator(const Deg4Class& c) const {
    auto v = residual(c);
    return v[static_cast<size_t>(free_col_)] / gen_value_;
}

bool Deg4Quotient::classes_equal(const Deg4Class& x, const Deg4Class& y) const {
    auto vx = residual(x);
    auto vy = residual(y);
    return vx == vy;
}

Deg2Class representative_z(const CharacteristicPair& p, int i) {
    if (!in_smooth_form(p)) throw NotNormalizedError("pair is not in smooth form");
    int n = p.n();
    if (i < 1 || i > n) throw BadIndexError("index out of range");
    Int ai = p.vec(i).a, bi = p.vec(i).b;
    if (checked_mul(ai, bi) == 0)
        throw ZeroProductError("a_i*b_i = 0 at index " + std::to_string(i));
    Deg2Class z(p.m());
    for (int k = 1; k < i; ++k) z.coeff(k) = Rational(checked_mul(p.vec(k).a, bi));
    z.coeff(i) = Rational(checked_mul(ai, bi));
    for (int k = i + 1; k <= n; ++k) z.coeff(k) = Rational(checked_mul(ai, p.vec(k).b));
    return z;
}

QMatrix oracle_cup_matrix_smooth(const CharacteristicPair& p) {
    if (!in_smooth_form(p)) throw NotNormalizedError("pair is not in smooth form");
    int n = p.n();
    auto q = Deg4Quotient::build(p);
    std::vector<Deg2Class> z;
    z.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) z.push_back(representative_z(p, i));
    QMatrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            Rational v = q.reduce_to_generator(
                multiply(p.m(), z[static_cast<size_t>(i)], z[static_cast<size_t>(j)]));
            out.at(i, j) = v;
            out.at(j, i) = v;
        }
    return out;
}

GramResult gram_matrix_natural(const CharacteristicPair& p) {
    int n = p.n();
    if (det2(p.vec(n + 1), p.vec(n + 2)) == 0)
        throw Error("positions n+1, n+2 are dependent");  // unreachable for valid pairs
    auto q = Deg4Quotient::build(p);
    QMatrix g(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Rational v =
                q.reduce_to_generator(multiply(p.m(), unit_class(p.m(), i), unit_class(p.m(), j)));
            g.at(i - 1, j - 1) = v;
            g.at(j - 1, i - 1) = v;
        }
    std::ostringstream desc;
    desc << "classes [y_1..y_" << n << "] with y_" << n + 1 << ", y_" << n + 2
         << " eliminated via the two linear relations; values against [y_" << n + 1 << " y_"
         << n + 2 << "]";
    return {g, desc.str()};
}

CongruenceInvariants congruence_invariants(const QMatrix& m) {
    if (m.rows != m.cols) throw Error("matrix is not square");
    int n = m.rows;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (!(m.at(i, j) == m.at(j, i))) throw Error("matrix is not symmetric");

    QMatrix a = m;
    auto swap_sym = [&](int i, int j) {
        if (i == j) return;
        for (int c = 0; c < n; ++c) std::swap(a.at(i, c), a.at(j, c));
        for (int r = 0; r < n; ++r) std::swap(a.at(r, i), a.at(r, j));
    };
    auto add_sym = [&](int dst, int src, const Rational& f) {
        for (int c = 0; c < n; ++c) a.at(dst, c) += f * a.at(src, c);
        for (int r = 0; r < n; ++r) a.at(r, dst) += f * a.at(r, src);
    };

    for (int k = 0; k < n; ++k) {
        if (a.at(k, k).is_zero()) {
            int dpiv = -1;
            for (int l = k + 1; l < n; ++l)
                if (!a.at(l, l).is_zero()) {
                    dpiv = l;
                    break;
                }
            if (dpiv >= 0) {
                swap_sym(k, dpiv);
            } else {
                int oi = -1, oj = -1;
                for (int i = k; i < n && oi < 0; ++i)
                    for (int j = i + 1; j < n; ++j)
                        if (!a.at(i, j).is_zero()) {
                            oi = i;
                            oj = j;
                            break;
                        }
                if (oi < 0) break;  // remaining block is zero
                add_sym(oi, oj, Rational(1));  // diagonal entry becomes 2*a(oi,oj)
                swap_sym(k, oi);
            }
        }
        for (int r = k + 1; r < n; ++r) {
            if (a.at(r, k).is_zero()) continue;
            Rational f = Rational(0) - a.at(r, k) / a.at(k, k);
            add_sym(r, k, f);
        }
    }

    CongruenceInvariants inv;
    Rational det(1);
    bool zero_det = false;
    for (int k = 0; k < n; ++k) {
        int s = a.at(k, k).sign();
        if (s > 0) ++inv.rank, ++inv.signature;
        if (s < 0) ++inv.rank, --inv.signature;
        if (s == 0) zero_det = true;
        det *= a.at(k, k);
    }
    if (n == 0) zero_det = false;
    if (!zero_det) {
        mpz_class num = det.num(), den = det.den();
        mpz_class sf_num = squarefree_part(abs(num));
        mpz_class sf_den = squarefree_part(den);
        if (sgn(num) < 0) sf_num = -sf_num;
        inv.det_square_class = Rational(sf_num, sf_den);
    }
    return inv;
}

bool is_rational_square(const Rational& q) {
    if (q.sign() <= 0) return false;
    mpz_class num = q.num(), den = q.den();
    return mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t());
}

namespace {

void factor_into(mpz_class x, std::map<mpz_class, int>& f);

mpz_class pollard_rho(const mpz_class& x) {
    // Brent's cycle variant; x is odd, composite, not a perfect power of a
    // found factor. Deterministic start values keep runs reproducible.
    for (unsigned c = 1;; ++c) {
        mpz_class y = 2, r = 1, q = 1, g = 1, ys = 0, xs = 0;
        while (g == 1) {
            xs = y;
            for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % x;
            mpz_class k = 0;
            while (k < r && g == 1) {
                ys = y;
                mpz_class lim = r - k;
                if (lim > 128) lim = 128;
                for (mpz_class i = 0; i < lim; ++i) {
                    y = (y * y + c) % x;
                    q = q * abs(y - xs) % x;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), x.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == x) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % x;
                mpz_class d = abs(ys - xs);
                mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), x.get_mpz_t());
            }
        }
        if (g != x) return g;
    }
}

void factor_into(mpz_class x, std::map<mpz_class, int>& f) {
    if (x <= 1) return;
    if (mpz_probab_prime_p(x.get_mpz_t(), 40)) {
        ++f[x];
        return;
    }
    mpz_class d = pollard_rho(x);
    factor_into(d, f);
    factor_into(x / d, f);
}

}  // namespace

mpz_class squarefree_part(const mpz_class& x) {
    if (x == 0) return 0;
    mpz_class r = abs(x);
    std::map<mpz_class, int> f;
    for (mpz_class p = 2; p * p <= r && p < 100000; p == 2 ? p = 3 : p += 2) {
        while (r % p == 0) {
            ++f[p];
            r /= p;
        }
    }
    factor_into(r, f);
    mpz_class sf = 1;
    for (const auto& [p, e] : f)
        if (e % 2 == 1) sf *= p;
    return sf;
}

bool deg2_equal_mod_linear(const DegenerateCharacteristicPair& p, const Deg2Class& x,
                           const Deg2Class& y) {
    int m = p.m();
    if (x.m() != m || y.m() != m) throw Error("degree-2 class size mismatch");
    QMatrix rows(3, m);
    for (int i = 1; i <= m; ++i) {
        rows.at(0, i - 1) = Rational(p.vec(i).a);
        rows.at(1, i - 1) = Rational(p.vec(i).b);
        rows.at(2, i - 1) = x.coeff(i) - y.coeff(i);
    }
    QMatrix two(2, m);
    for (int i = 0; i < m; ++i) {
        two.at(0, i) = rows.at(0, i);
        two.at(1, i) = rows.at(1, i);
    }
    return rref_rational(rows).rank == rref_rational(two).rank;
}

}  // namespace toric4
