/**
 * Characteristic pairs on polygons: validation, smooth-vertex detection,
 * torsion order and label/basis normalizations.
 *
 * Edges are 1-based and cyclic; edge E_i joins vertices v_i and v_{i+1}.
 * Smoothness is indexed by the adjacent-edge pair (E_i, E_{i+1}).
 */
#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "toric4/intlinalg.hpp"

namespace toric4 {

class NoSmoothVertexError : public Error {
public:
    using Error::Error;
};

class ShearRejectedError : public Error {
public:
    using Error::Error;
};

class NotNormalizedError : public Error {
public:
    using Error::Error;
};

enum class ViolationKind { TooFewEdges, NonPrimitive, AdjacentDependent };

struct Violation {
    ViolationKind kind;
    int i = 0;  // 1-based edge index
    int j = 0;  // second edge for AdjacentDependent
    bool operator==(const Violation&) const = default;
};

/// Primitive vectors only; adjacent independence not required.
class DegenerateCharacteristicPair {
public:
    static std::variant<DegenerateCharacteristicPair, std::vector<Violation>> validate(
        std::vector<IntVec2> vectors);

    int m() const { return static_cast<int>(vecs_.size()); }
    int n() const { return m() - 2; }
    const IntVec2& vec(int i) const { return vecs_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<IntVec2>& vectors() const { return vecs_; }
    bool operator==(const DegenerateCharacteristicPair&) const = default;

protected:
    explicit DegenerateCharacteristicPair(std::vector<IntVec2> v) : vecs_(std::move(v)) {}
    std::vector<IntVec2> vecs_;
};

/// Primitive vectors with every cyclically adjacent pair independent.
class CharacteristicPair : public DegenerateCharacteristicPair {
public:
    static std::variant<CharacteristicPair, std::vector<Violation>> validate(
        std::vector<IntVec2> vectors);

private:
    explicit CharacteristicPair(std::vector<IntVec2> v)
        : DegenerateCharacteristicPair(std::move(v)) {}
};

std::vector<Violation> check_pair(const std::vector<IntVec2>& vectors, bool degenerate);

/// Throwing convenience: validates or raises Error with a description.
CharacteristicPair make_pair_or_throw(std::vector<IntVec2> vectors);

/// All 1-based i with |det2(vec(i), vec(i+1 cyc))| = 1.
std::vector<int> smooth_edge_pairs(const CharacteristicPair& p);

/// gcd over all pairs i<j of |det2(vec(i), vec(j))|; >= 1 for a valid pair.
Int torsion_order(const CharacteristicPair& p);

enum class Flavor { Smooth, Half };

/// A pair together with the relabeling + basis change that produced it.
/// Applying `rotation` then `basis_change` to the original pair gives `pair`:
/// pair.vec(l) = basis_change * original.vec((l-1+rotation) mod m + 1).
struct NormalizedPair {
    CharacteristicPair pair;
    UnimodularMatrix2 basis_change;
    int rotation = 0;
    Flavor flavor = Flavor::Smooth;
};

/// Rotate labels so the chosen smooth pair sits at (n+1, n+2), then change
/// basis so those vectors become (1,0), (0,1). Default index: smallest
/// element of smooth_edge_pairs.
NormalizedPair normalize_smooth(const CharacteristicPair& p, std::optional<int> chosen_index = {});

/// Rotate the chosen edge to position n+1, map it to (1,0), then shear
/// [[1,s],[0,1]] with minimal |s| (ties: positive s) so a_{n+2} != 0.
/// Auto edge choice: minimize |b_{n+2}|/k over rotations, ties by smallest
/// rotation. A supplied shear is used verbatim (ShearRejected if a_{n+2}=0).
NormalizedPair normalize_half(const CharacteristicPair& p, std::optional<int> chosen_index = {},
                              std::optional<Int> shear = {});

CharacteristicPair apply_basis_change(const CharacteristicPair& p, const UnimodularMatrix2& u);
DegenerateCharacteristicPair apply_basis_change(const DegenerateCharacteristicPair& p,
                                                const UnimodularMatrix2& u);

/// New labels: result.vec(l) = p.vec((l-1+r) mod m + 1).
CharacteristicPair rotate_labels(const CharacteristicPair& p, int r);

/// True when positions n+1, n+2 hold (1,0), (0,1).
bool in_smooth_form(const DegenerateCharacteristicPair& p);

/// True when position n+1 holds (1,0) and a_{n+2}*b_{n+2} != 0.
bool in_half_form(const DegenerateCharacteristicPair& p);

}  // namespace toric4
