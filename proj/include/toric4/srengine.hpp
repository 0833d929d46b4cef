/**
 * Brute-force oracle over exact rationals: the graded quotient of the
 * polygon's face ring by its two linear relations, in degrees 2 and 4.
 *
 * A degree-2 class is a coefficient vector over the edge generators y_i.
 * A degree-4 class is supported on the admissible quadratic monomials
 * {y_i^2} and {y_i y_{i+1 mod m}}; products of non-adjacent edges vanish.
 * The degree-4 quotient by span{l1*y_t, l2*y_t} is one-dimensional for
 * every valid pair, with distinguished generator [y_{n+1} y_{n+2}].
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "toric4/charpair.hpp"
#include "toric4/intlinalg.hpp"

namespace toric4 {

class ZeroProductError : public Error {
public:
    using Error::Error;
};

class DegenerateQuotientError : public Error {
public:
    using Error::Error;
};

struct Deg2Class {
    std::vector<Rational> c;  // index i-1 holds the coefficient of y_i

    explicit Deg2Class(int m) : c(static_cast<size_t>(m)) {}
    int m() const { return static_cast<int>(c.size()); }
    Rational& coeff(int i) { return c[static_cast<size_t>(i - 1)]; }
    const Rational& coeff(int i) const { return c[static_cast<size_t>(i - 1)]; }
    bool operator==(const Deg2Class&) const = default;
};

Deg2Class unit_class(int m, int i);

using Monomial = std::pair<int, int>;  // 1-based, first <= second

bool monomial_allowed(int m, int i, int j);
Monomial canon_monomial(int i, int j);

struct Deg4Class {
    std::map<Monomial, Rational> terms;
    bool operator==(const Deg4Class&) const = default;
};

Deg4Class deg4_monomial(int m, int i, int j);

/// Distributed product; non-adjacent cross monomials are dropped.
Deg4Class multiply(int m, const Deg2Class& c1, const Deg2Class& c2);

struct LinearRelations {
    Deg2Class l1, l2;  // sum a_i y_i and sum b_i y_i
};

LinearRelations linear_relations(const DegenerateCharacteristicPair& p);

class Deg4Quotient {
public:
    static Deg4Quotient build(const CharacteristicPair& p);

    int m() const { return m_; }
    int dimension() const { return dim_; }
    Monomial generator() const;

    /// Coordinates of c after eliminating all pivot monomials; supported on
    /// the single free monomial column.
    std::vector<Rational> residual(const Deg4Class& c) const;

    /// The unique r with [c] = r * [y_{n+1} y_{n+2}].
    Rational reduce_to_generator(const Deg4Class& c) const;

    bool classes_equal(const Deg4Class& x, const Deg4Class& y) const;

private:
    Deg4Quotient() = default;
    int m_ = 0;
    int dim_ = 0;
    int free_col_ = -1;
    std::vector<Monomial> monomials_;
    std::map<Monomial, int> col_of_;
    RrefResult rel_;
    Rational gen_value_;  // residual of the generator at the free column
};

/// Image of the scaled degree-2 basis class with index i under the
/// edge-contraction pullback, as a polynomial in the y_k (smooth form,
/// a_i*b_i != 0): sum_{k<i} a_k b_i y_k + a_i b_i y_i + sum_{k>i} a_i b_k y_k.
Deg2Class representative_z(const CharacteristicPair& smooth_form_pair, int i);

/// n x n matrix with entry(i,j) = [z_i z_j] / [y_{n+1} y_{n+2}], computed by
/// elimination only. Requires smooth form with a_i*b_i != 0 for all i <= n.
QMatrix oracle_cup_matrix_smooth(const CharacteristicPair& smooth_form_pair);

struct GramResult {
    QMatrix g;
    std::string basis;
};

/// Pairing matrix of [y_1..y_n] against the generator [y_{n+1} y_{n+2}],
/// with y_{n+1}, y_{n+2} eliminated from the two linear relations.
GramResult gram_matrix_natural(const CharacteristicPair& p);

struct CongruenceInvariants {
    int rank = 0;
    int signature = 0;
    /// squarefree(num)/squarefree(den) with the determinant's sign;
    /// empty when the determinant is zero.
    std::optional<Rational> det_square_class;
};

CongruenceInvariants congruence_invariants(const QMatrix& symmetric);

bool is_rational_square(const Rational& q);
mpz_class squarefree_part(const mpz_class& x);

/// Equality of degree-2 classes modulo the span of the two linear relations.
bool deg2_equal_mod_linear(const DegenerateCharacteristicPair& p, const Deg2Class& x,
                           const Deg2Class& y);

}  // namespace toric4
