#include "toric4/generate.hpp"

#include "toric4/morphisms.hpp"

namespace toric4 {

Int Rng::uniform(Int lo, Int hi) {
    if (hi < lo) throw Error("empty range");
    uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<Int>(raw() % span);
}

uint64_t mix_seed(uint64_t seed, uint64_t stream, uint64_t index) {
    uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1) + 0xbf58476d1ce4e5b9ull * (index + 1);
    z ^= z >> 30;
    z *= 0xbf58476d1ce4e5b9ull;
    z ^= z >> 27;
    z *= 0x94d049bb133111ebull;
    z ^= z >> 31;
    return z;
}

IntVec2 random_primitive(Rng& rng, Int bound, bool nonzero_entries) {
    for (;;) {
        IntVec2 v{rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
        if (v.a == 0 && v.b == 0) continue;
        if (nonzero_entries && (v.a == 0 || v.b == 0)) continue;
        Int g = ext_gcd(v.a, v.b).g;
        return {v.a / g, v.b / g};
    }
}

CharacteristicPair random_smooth_form_pair(Rng& rng, int n, Int bound, bool nonzero_products) {
    for (;;) {
        std::vector<IntVec2> v(static_cast<size_t>(n + 2));
        v[static_cast<size_t>(n)] = {1, 0};
        v[static_cast<size_t>(n + 1)] = {0, 1};
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            bool found = false;
            for (int attempt = 0; attempt < 64; ++attempt) {
                IntVec2 cand = random_primitive(rng, bound, nonzero_products);
                if (i == 0 && cand.a == 0) continue;                       // adjacent to (0,1)
                if (i > 0 && det2(v[static_cast<size_t>(i - 1)], cand) == 0) continue;
                if (i == n - 1 && cand.b == 0) continue;                   // adjacent to (1,0)
                v[static_cast<size_t>(i)] = cand;
                found = true;
                break;
            }
            ok = found;
        }
        if (!ok) continue;
        auto res = CharacteristicPair::validate(std::move(v));
        if (auto* p = std::get_if<CharacteristicPair>(&res)) return *p;
    }
}

CharacteristicPair random_valid_pair(Rng& rng, int m, Int bound) {
    for (;;) {
        std::vector<IntVec2> v(static_cast<size_t>(m));
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) {
            bool found = false;
            for (int attempt = 0; attempt < 64; ++attempt) {
                IntVec2 cand = random_primitive(rng, bound, false);
                if (i > 0 && det2(v[static_cast<size_t>(i - 1)], cand) == 0) continue;
                if (i == m - 1 && det2(cand, v[0]) == 0) continue;
                v[static_cast<size_t>(i)] = cand;
                found = true;
                break;
            }
            ok = found;
        }
        if (!ok) continue;
        auto res = CharacteristicPair::validate(std::move(v));
        if (auto* p = std::get_if<CharacteristicPair>(&res)) return *p;
    }
}

NormalizedPair random_half_triangle(Rng& rng, Int bound) {
    for (;;) {
        IntVec2 v1 = random_primitive(rng, bound, false);
        IntVec2 v3 = random_primitive(rng, bound, true);
        if (v1.b == 0) continue;
        if (det2(v3, v1) == 0) continue;
        auto res = CharacteristicPair::validate({v1, {1, 0}, v3});
        if (auto* p = std::get_if<CharacteristicPair>(&res))
            return {*p, UnimodularMatrix2::identity(), 0, Flavor::Half};
    }
}

NormalizedPair random_half_pair(Rng& rng, int n, Int bound) {
    CharacteristicPair p = random_valid_pair(rng, n + 2, bound);
    return normalize_half(p);
}

ContractionInstance random_liftable_contraction(Rng& rng) {
    for (;;) {
        int n = static_cast<int>(rng.uniform(2, 3));
        int i = static_cast<int>(rng.uniform(1, n - 1));
        int j = static_cast<int>(rng.uniform(i + 1, n));
        std::vector<IntVec2> v(static_cast<size_t>(n + 2));
        v[static_cast<size_t>(n)] = {1, 0};
        v[static_cast<size_t>(n + 1)] = {0, 1};

        IntVec2 vi = random_primitive(rng, 3, true);
        v[static_cast<size_t>(i - 1)] = vi;
        // b_i | b_j and independence from v_i
        IntVec2 vj{0, 0};
        bool found = false;
        for (int attempt = 0; attempt < 64 && !found; ++attempt) {
            Int r = rng.uniform(1, 3) * (rng.coin() ? 1 : -1);
            IntVec2 cand{rng.uniform(-6, 6), checked_mul(vi.b, r)};
            if (!is_primitive(cand) || det2(vi, cand) == 0 || cand.a == 0) continue;
            vj = cand;
            found = true;
        }
        if (!found) continue;
        v[static_cast<size_t>(j - 1)] = vj;

        bool ok = true;
        for (int k = 1; k <= n && ok; ++k) {
            if (k == i || k == j) continue;
            bool got = false;
            for (int attempt = 0; attempt < 64 && !got; ++attempt) {
                IntVec2 cand{0, 0};
                if (k < i) {
                    // a_i | a_k
                    cand = {checked_mul(vi.a, rng.uniform(-3, 3)), rng.uniform(-6, 6)};
                } else if (k > i && k < j) {
                    // integral combination of v_i and v_j
                    cand.a = checked_add(checked_mul(rng.uniform(-2, 2), vi.a),
                                         checked_mul(rng.uniform(-2, 2), vj.a));
                    cand.b = checked_add(checked_mul(rng.uniform(-2, 2), vi.b),
                                         checked_mul(rng.uniform(-2, 2), vj.b));
                } else {
                    // b_j | b_k
                    cand = {rng.uniform(-6, 6), checked_mul(vj.b, rng.uniform(-3, 3))};
                }
                if (!is_primitive(cand)) continue;
                if (k > 1 && !(v[static_cast<size_t>(k - 2)] == IntVec2{0, 0}) &&
                    det2(v[static_cast<size_t>(k - 2)], cand) == 0)
                    continue;
                if (k < n && !(v[static_cast<size_t>(k)] == IntVec2{0, 0}) &&
                    det2(cand, v[static_cast<size_t>(k)]) == 0)
                    continue;
                v[static_cast<size_t>(k - 1)] = cand;
                got = true;
            }
            ok = got;
        }
        if (!ok) continue;

        auto res = CharacteristicPair::validate(v);
        auto* p = std::get_if<CharacteristicPair>(&res);
        if (!p) continue;

        // the square target must itself be a characteristic pair
        auto square = CharacteristicPair::validate({vi, vj, {1, 0}, {0, 1}});
        if (!std::holds_alternative<CharacteristicPair>(square)) continue;

        // reject anything the integral solver still cannot lift
        auto lift_ok = [&](const ContractionResult& c) {
            if (!c.push.characteristic) return false;
            CompatiblePair cp{EdgeMap{c.rho}, TorusHom2::identity(), *p, c.push.target};
            return std::holds_alternative<Lifting>(solve_lifting(cp));
        };
        auto ri = contract_keep(*p, i);
        auto rij = contract_keep2(*p, i, j);
        if (!lift_ok(ri) || !lift_ok(rij)) continue;
        auto& sq = std::get<CharacteristicPair>(square);
        auto rij_i = contract_keep(sq, 1);
        CompatiblePair cp{EdgeMap{rij_i.rho}, TorusHom2::identity(), sq, rij_i.push.target};
        if (!rij_i.push.characteristic || !std::holds_alternative<Lifting>(solve_lifting(cp)))
            continue;
        return {*p, i, j};
    }
}

}  // namespace toric4
