/**
 * Combinatorial toric-morphism calculus: compatible pairs, lifting
 * existence/uniqueness, pushforward characteristic functions, rescaling /
 * edge-contraction / edge-bending constructors, induced substitution maps
 * on face-ring classes, and index-level cellular-basis maps.
 *
 * Edge maps are pure index functions; no geometric realization is kept.
 */
#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toric4/charpair.hpp"
#include "toric4/intlinalg.hpp"
#include "toric4/srengine.hpp"

namespace toric4 {

class IndexOutOfRangeError : public Error {
public:
    using Error::Error;
};

class LabelingMismatchError : public Error {
public:
    using Error::Error;
};

class DegenerateTargetError : public Error {
public:
    using Error::Error;
};

/// Order-preserving surjection {1..m} -> {1..m'} with values[1]=1 and
/// values[m]=m'. Edge j maps onto target edge values[j] when j is the
/// largest element of its fiber, and contracts to target vertex
/// v'_{values[j]} otherwise.
struct OrderSurjection {
    int m = 0;
    int m_target = 0;
    std::vector<int> values;  // 1-based target indices, index j-1 for edge j

    static OrderSurjection make(std::vector<int> values);
    int value(int j) const { return values[static_cast<size_t>(j - 1)]; }
    /// s_k: the unique source edge mapping onto target edge k.
    int fiber_max(int k) const;
    bool onto_edge(int j) const { return j == fiber_max(value(j)); }
    bool operator==(const OrderSurjection&) const = default;
};

/// Splits edge i into the two target edges i, i+1; all later edges shift up.
struct BendMap {
    int m = 0;
    int i = 0;
    int m_target() const { return m + 1; }
    bool operator==(const BendMap&) const = default;
};

using EdgeMap = std::variant<OrderSurjection, BendMap>;

struct TorusHom2 {
    Int e[2][2] = {{1, 0}, {0, 1}};

    static TorusHom2 identity() { return {}; }
    static TorusHom2 diag(Int x, Int y) { return {{{x, 0}, {0, y}}}; }
    IntVec2 apply(IntVec2 v) const;
    bool operator==(const TorusHom2& o) const;
};

struct CompatiblePair {
    EdgeMap map;
    TorusHom2 psi;
    DegenerateCharacteristicPair source;
    DegenerateCharacteristicPair target;
};

struct CompatViolation {
    int edge = 0;
    std::string what;
};

struct CompatibilityReport {
    bool ok = true;
    std::vector<CompatViolation> violations;
    /// contracted edges whose target vertex has parallel edge vectors, where
    /// the span test degrades to a line test (degenerate targets only)
    std::vector<int> line_test_edges;
};

CompatibilityReport validate_compatible(const CompatiblePair& cp);

struct Lifting {
    IntMatrix psi_tilde;  // m' x m
};

struct NoLifting {
    int column = 0;
    std::string reason;
};

/// Unique integral lifting of a compatible pair, or the first column where
/// the integral solve fails. Requires an order-surjection edge map and a
/// characteristic (non-degenerate) target.
std::variant<Lifting, NoLifting> solve_lifting(const CompatiblePair& cp);

struct PushforwardResult {
    DegenerateCharacteristicPair target;
    bool characteristic = false;
};

PushforwardResult pushforward(const OrderSurjection& rho, const DegenerateCharacteristicPair& p);

/// Ring-map data of a lifting: target generator x_t substitutes to the
/// degree-2 source polynomial given by row t of the lifted matrix.
struct SubstitutionMap {
    int m_source = 0;
    int m_target = 0;
    std::vector<Deg2Class> rows;  // rows[t-1] = image of x_t

    const Deg2Class& deg2_image(int t) const { return rows[static_cast<size_t>(t - 1)]; }
    Deg2Class apply_deg2(const Deg2Class& target_class) const;
    Deg4Class apply_deg4(const Deg4Class& target_class) const;
};

SubstitutionMap induced_substitution(const Lifting& l);

struct RescaleResult {
    CharacteristicPair target;
    TorusHom2 sigma;
    Lifting lifting;
};

/// New pair with vec(i) = (1,1) and vec(j) = (a_j b_i/g_ij, a_i b_j/g_ij),
/// g_ij = gcd(|a_j b_i|, |a_i b_j|); torus map diag(b_i, a_i); diagonal
/// lifting (g_i1, .., a_i b_i, .., g_in, b_i, a_i) in smooth form.
RescaleResult rescale(const CharacteristicPair& p, int i);

struct ContractionResult {
    OrderSurjection rho;
    PushforwardResult push;
};

/// rho_i: contracts every edge except i, n+1, n+2 (1 <= i <= n).
ContractionResult contract_keep(const CharacteristicPair& p, int i);

/// rho_ij: contracts onto a square keeping edges i < j <= n plus the ends.
ContractionResult contract_keep2(const CharacteristicPair& p, int i, int j);

/// rho with fibers {j} for j < i, {i, i+1}, {j+1} for j > i: the
/// order-surjection {1..m} -> {1..m-1} undoing a bend at i.
OrderSurjection undo_bend_surjection(int m, int i);

struct BendResult {
    BendMap map;
    DegenerateCharacteristicPair target;
};

/// Duplicate vec(i) at positions i, i+1; target has m+1 edges and is
/// always degenerate.
BendResult bend(const DegenerateCharacteristicPair& p, int i);

/// Index-level pullback on cellular basis labels {u_1..u_n; v} for maps
/// between smooth-form labelings; v always maps to v.
struct CellularIndexMap {
    std::vector<int> u_image;  // u'_k pulls back to u_{u_image[k-1]}
};

CellularIndexMap cellular_index_map(const EdgeMap& em);

}  // namespace toric4
