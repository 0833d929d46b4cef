/**
 * Closed-form cohomology groups and cup-product matrices of the
 * 4-dimensional toric orbifold attached to a characteristic pair, over
 * the integers, the rationals and Z/m.
 *
 * Three formula regimes, by normalization:
 *   smooth   - pair normalized with ends (1,0),(0,1): integral matrix
 *              entry(i,j) = a_i*b_j, basis pinned (no sign freedom);
 *   triangle - m=3 in half form over Z: single coefficient
 *              c = b_1*b_3*(a_1*b_3 - a_3*b_1)/k^2, one free global sign;
 *   pid      - half form over a ring where b_{n+2}/k is a unit:
 *              entry(i,j) = b_j*(a_i*b_{n+2} - a_{n+2}*b_i)/b_{n+2},
 *              one free global sign.
 */
#pragma once

#include <array>
#include <string>
#include <vector>

#include "toric4/charpair.hpp"
#include "toric4/intlinalg.hpp"

namespace toric4 {

class IntegralityViolationError : public Error {
public:
    using Error::Error;
};

class NotInvertibleError : public Error {
public:
    using Error::Error;
};

struct RingSpec {
    enum class Kind { Integers, Rationals, IntegersMod };
    Kind kind = Kind::Integers;
    Int modulus = 0;  // >= 2 for IntegersMod

    static RingSpec Z() { return {Kind::Integers, 0}; }
    static RingSpec Q() { return {Kind::Rationals, 0}; }
    static RingSpec Zmod(Int m);
    bool operator==(const RingSpec&) const = default;
    std::string str() const;
};

/// Element of Z, Q or Z/m; residues stored canonically in [0, m).
class RingElem {
public:
    static RingElem integer(Int v);
    static RingElem rational(Rational v);
    static RingElem residue(Int v, Int m);

    const RingSpec& ring() const { return ring_; }
    Int int_value() const { return z_; }        // Integers / IntegersMod
    const Rational& rat_value() const { return q_; }  // Rationals
    bool operator==(const RingElem&) const = default;
    std::string str() const;

private:
    RingSpec ring_;
    Rational q_;
    Int z_ = 0;
};

struct GroupSummand {
    Int free_rank = 0;            // number of copies of the coefficient ring
    std::vector<Int> torsion;     // orders of cyclic summands, each >= 2
    bool operator==(const GroupSummand&) const = default;
};

struct CohomologyGroups {
    std::array<GroupSummand, 5> degree;  // degrees 0..4
};

CohomologyGroups groups_over_Z(const CharacteristicPair& p);
CohomologyGroups groups_over_R(const CharacteristicPair& p, const RingSpec& ring);

enum class BasisTag { Smooth, Triangle, Pid };

struct CupMatrix {
    int n = 0;
    RingSpec ring;
    BasisTag tag = BasisTag::Smooth;
    bool sign_freedom = false;
    std::vector<RingElem> entries;  // row-major n x n, symmetric

    const RingElem& at(int i, int j) const {
        return entries[static_cast<size_t>(i) * n + j];
    }
};

/// entry(i,j) = a_i*b_j for i <= j, mirrored. Requires Smooth flavor.
CupMatrix cup_matrix_smooth(const NormalizedPair& np);

struct TriangleCup {
    Int c = 0;
    Int k = 1;
    bool sign_freedom = true;
};

/// m = 3 in half form: k = gcd(|b_1|,|b_3|),
/// c = b_1*b_3*(a_1*b_3 - a_3*b_1)/k^2 (division checked exact).
TriangleCup cup_triangle(const NormalizedPair& np);

/// entry(i,j) = b_j * ((a_i*b_{n+2} - a_{n+2}*b_i)/k) * inverse(b_{n+2}/k)
/// computed in the ring; requires that unit to exist.
CupMatrix cup_matrix_pid(const NormalizedPair& np, const RingSpec& ring);

struct SmoothCompanion {
    NormalizedPair companion;   // basis_change records the diagonal sign fix
    std::vector<Int> g;         // g_i = gcd(|a_i*b_{n+2}|, |a_{n+2}*b_i|)
};

/// Smooth-form companion pair with vectors
/// ((a_i*b_{n+2} - a_{n+2}*b_i)/g_i, a_{n+2}*b_i/g_i), sign-fixed so that
/// positions n+1, n+2 hold exactly (1,0), (0,1).
SmoothCompanion smooth_companion(const NormalizedPair& np);

}  // namespace toric4
