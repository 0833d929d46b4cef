#include "toric4/charpair.hpp"

#include <algorithm>
#include <limits>

namespace toric4 {

std::vector<Violation> check_pair(const std::vector<IntVec2>& vectors, bool degenerate) {
    std::vector<Violation> out;
    int m = static_cast<int>(vectors.size());
    if (m < 3) {
        out.push_back({ViolationKind::TooFewEdges, m, 0});
        return out;
    }
    for (int i = 1; i <= m; ++i) {
        if (!is_primitive(vectors[static_cast<size_t>(i - 1)]))
            out.push_back({ViolationKind::NonPrimitive, i, 0});
    }
    if (!degenerate) {
        for (int i = 1; i <= m; ++i) {
            int j = i % m + 1;
            if (det2(vectors[static_cast<size_t>(i - 1)], vectors[static_cast<size_t>(j - 1)]) == 0)
                out.push_back({ViolationKind::AdjacentDependent, i, j});
        }
    }
    return out;
}

std::variant<DegenerateCharacteristicPair, std::vector<Violation>>
DegenerateCharacteristicPair::validate(std::vector<IntVec2> vectors) {
    auto v = check_pair(vectors, true);
    if (!v.empty()) return v;
    return DegenerateCharacteristicPair(std::move(vectors));
}

std::variant<CharacteristicPair, std::vector<Violation>> CharacteristicPair::validate(
    std::vector<IntVec2> vectors) {
    auto v = check_pair(vectors, false);
    if (!v.empty()) return v;
    return CharacteristicPair(std::move(vectors));
}

CharacteristicPair make_pair_or_throw(std::vector<IntVec2> vectors) {
    auto r = CharacteristicPair::validate(std::move(vectors));
    if (auto* p = std::get_if<CharacteristicPair>(&r)) return *p;
    throw Error("vector list is not a characteristic pair");
}

std::vector<int> smooth_edge_pairs(const CharacteristicPair& p) {
    std::vector<int> out;
    int m = p.m();
    for (int i = 1; i <= m; ++i) {
        Int d = det2(p.vec(i), p.vec(i % m + 1));
        if (d == 1 || d == -1) out.push_back(i);
    }
    return out;
}

Int torsion_order(const CharacteristicPair& p) {
    std::vector<Int> minors;
    int m = p.m();
    minors.reserve(static_cast<size_t>(m) * (m - 1) / 2);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) minors.push_back(det2(p.vec(i), p.vec(j)));
    return gcd_all(minors);
}

CharacteristicPair rotate_labels(const CharacteristicPair& p, int r) {
    int m = p.m();
    r = ((r % m) + m) % m;
    std::vector<IntVec2> v(static_cast<size_t>(m));
    for (int l = 1; l <= m; ++l) v[static_cast<size_t>(l - 1)] = p.vec((l - 1 + r) % m + 1);
    return make_pair_or_throw(std::move(v));
}

CharacteristicPair apply_basis_change(const CharacteristicPair& p, const UnimodularMatrix2& u) {
    std::vector<IntVec2> v;
    v.reserve(static_cast<size_t>(p.m()));
    for (const IntVec2& w : p.vectors()) v.push_back(u.apply(w));
    return make_pair_or_throw(std::move(v));
}

DegenerateCharacteristicPair apply_basis_change(const DegenerateCharacteristicPair& p,
                                                const UnimodularMatrix2& u) {
    std::vector<IntVec2> v;
    v.reserve(static_cast<size_t>(p.m()));
    for (const IntVec2& w : p.vectors()) v.push_back(u.apply(w));
    auto r = DegenerateCharacteristicPair::validate(std::move(v));
    return std::get<DegenerateCharacteristicPair>(r);
}

bool in_smooth_form(const DegenerateCharacteristicPair& p) {
    return p.vec(p.n() + 1) == IntVec2{1, 0} && p.vec(p.n() + 2) == IntVec2{0, 1};
}

bool in_half_form(const DegenerateCharacteristicPair& p) {
    const IntVec2& w = p.vec(p.n() + 2);
    return p.vec(p.n() + 1) == IntVec2{1, 0} && w.a != 0 && w.b != 0;
}

namespace {

// rotation that brings edge `index` to position n+1
int rotation_for(int index, int m) { return ((index - (m - 1)) % m + m) % m; }

}  // namespace

NormalizedPair normalize_smooth(const CharacteristicPair& p, std::optional<int> chosen_index) {
    auto smooth = smooth_edge_pairs(p);
    if (smooth.empty()) throw NoSmoothVertexError("pair has no smooth adjacent-edge pair");
    int idx;
    if (chosen_index) {
        idx = *chosen_index;
        if (std::find(smooth.begin(), smooth.end(), idx) == smooth.end())
            throw BadIndexError("chosen index is not a smooth adjacent-edge pair");
    } else {
        idx = smooth.front();
    }
    int m = p.m();
    int r = rotation_for(idx, m);
    CharacteristicPair rotated = rotate_labels(p, r);
    IntVec2 v1 = rotated.vec(m - 1), v2 = rotated.vec(m);
    // U = [v1 | v2]^{-1}
    UnimodularMatrix2 cols(v1.a, v2.a, v1.b, v2.b);
    UnimodularMatrix2 u = cols.inverse();
    CharacteristicPair out = apply_basis_change(rotated, u);
    return {out, u, r, Flavor::Smooth};
}

namespace {

NormalizedPair normalize_half_at(const CharacteristicPair& p, int index,
                                 std::optional<Int> shear) {
    int m = p.m();
    int r = rotation_for(index, m);
    CharacteristicPair rotated = rotate_labels(p, r);
    UnimodularMatrix2 u0 = complete_to_unimodular(rotated.vec(m - 1));
    CharacteristicPair mapped = apply_basis_change(rotated, u0);
    IntVec2 w = mapped.vec(m);  // b != 0 by adjacent independence
    Int s;
    if (shear) {
        s = *shear;
        if (checked_add(w.a, checked_mul(s, w.b)) == 0)
            throw ShearRejectedError("supplied shear leaves a_{n+2} = 0");
    } else {
        // a + s*b vanishes for at most one s, so s=0 works unless a=0;
        // then |s|=1 is minimal and the tie-break prefers positive s.
        s = (w.a == 0) ? 1 : 0;
    }
    UnimodularMatrix2 sh(1, s, 0, 1);
    CharacteristicPair out = apply_basis_change(mapped, sh);
    return {out, sh * u0, r, Flavor::Half};
}

}  // namespace

NormalizedPair normalize_half(const CharacteristicPair& p, std::optional<int> chosen_index,
                              std::optional<Int> shear) {
    int m = p.m();
    if (chosen_index) {
        if (*chosen_index < 1 || *chosen_index > m) throw BadIndexError("edge index out of range");
        return normalize_half_at(p, *chosen_index, shear);
    }
    // auto mode: minimize |b_{n+2}| (equivalently |b_{n+2}|/k) over rotations,
    // ties broken by smallest rotation
    Int best = std::numeric_limits<Int>::max();
    int best_index = 1;
    for (int r = 0; r < m; ++r) {
        int e = (m - 2 + r) % m + 1;  // edge landing at position n+1 under rotation r
        Int d = det2(p.vec(e), p.vec(e % m + 1));
        Int ad = d < 0 ? checked_neg(d) : d;
        if (ad < best) {
            best = ad;
            best_index = e;
        }
    }
    return normalize_half_at(p, best_index, shear);
}

}  // namespace toric4
