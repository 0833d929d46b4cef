#include "toric4/cohomology.hpp"

namespace toric4 {

RingSpec RingSpec::Zmod(Int m) {
    if (m < 2) throw Error("modulus must be >= 2");
    return {Kind::IntegersMod, m};
}

std::string RingSpec::str() const {
    switch (kind) {
        case Kind::Integers: return "Z";
        case Kind::Rationals: return "Q";
        case Kind::IntegersMod: return "Z/" + std::to_string(modulus);
    }
    return {};
}

RingElem RingElem::integer(Int v) {
    RingElem e;
    e.ring_ = RingSpec::Z();
    e.z_ = v;
    return e;
}

RingElem RingElem::rational(Rational v) {
    RingElem e;
    e.ring_ = RingSpec::Q();
    e.q_ = std::move(v);
    return e;
}

RingElem RingElem::residue(Int v, Int m) {
    RingElem e;
    e.ring_ = RingSpec::Zmod(m);
    e.z_ = ((v % m) + m) % m;
    return e;
}

std::string RingElem::str() const {
    if (ring_.kind == RingSpec::Kind::Rationals) return q_.str();
    return std::to_string(z_);
}

CohomologyGroups groups_over_Z(const CharacteristicPair& p) {
    CohomologyGroups g;
    g.degree[0].free_rank = 1;
    g.degree[2].free_rank = p.n();
    g.degree[4].free_rank = 1;
    Int k = torsion_order(p);
    if (k >= 2) g.degree[3].torsion.push_back(k);
    return g;
}

CohomologyGroups groups_over_R(const CharacteristicPair& p, const RingSpec& ring) {
    if (ring.kind == RingSpec::Kind::Integers) return groups_over_Z(p);
    CohomologyGroups g;
    g.degree[0].free_rank = 1;
    g.degree[2].free_rank = p.n();
    g.degree[4].free_rank = 1;
    if (ring.kind == RingSpec::Kind::IntegersMod) {
        // R/kR for R = Z/m is cyclic of order gcd(k, m)
        Int d = ext_gcd(torsion_order(p), ring.modulus).g;
        if (d >= 2) g.degree[3].torsion.push_back(d);
    }
    return g;
}

CupMatrix cup_matrix_smooth(const NormalizedPair& np) {
    if (np.flavor != Flavor::Smooth || !in_smooth_form(np.pair))
        throw NotNormalizedError("pair is not smooth-normalized");
    const CharacteristicPair& p = np.pair;
    int n = p.n();
    CupMatrix m;
    m.n = n;
    m.ring = RingSpec::Z();
    m.tag = BasisTag::Smooth;
    m.sign_freedom = false;
    m.entries.assign(static_cast<size_t>(n) * n, RingElem::integer(0));
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Int v = checked_mul(p.vec(i).a, p.vec(j).b);
            m.entries[static_cast<size_t>(i - 1) * n + (j - 1)] = RingElem::integer(v);
            m.entries[static_cast<size_t>(j - 1) * n + (i - 1)] = RingElem::integer(v);
        }
    return m;
}

TriangleCup cup_triangle(const NormalizedPair& np) {
    const CharacteristicPair& p = np.pair;
    if (p.m() != 3) throw Error("cup_triangle expects a triangle");
    if (!(p.vec(2) == IntVec2{1, 0}))
        throw NotNormalizedError("triangle must carry (1,0) on its middle edge");
    Int a1 = p.vec(1).a, b1 = p.vec(1).b;
    Int a3 = p.vec(3).a, b3 = p.vec(3).b;
    Int k = ext_gcd(b1, b3).g;
    Int minor = checked_sub(checked_mul(a1, b3), checked_mul(a3, b1));
    Int num = checked_mul(checked_mul(b1, b3), minor);
    Int k2 = checked_mul(k, k);
    if (num % k2 != 0) throw IntegralityViolationError("k^2 does not divide b_1 b_3 (a_1 b_3 - a_3 b_1)");
    return {num / k2, k, true};
}

namespace {

Int mod_canon(Int v, Int m) { return ((v % m) + m) % m; }

Int mod_inverse(Int v, Int m) {
    auto [g, x, y] = ext_gcd(v, m);
    if (g != 1) throw NotInvertibleError(std::to_string(v) + " is not a unit mod " + std::to_string(m));
    (void)y;  // v*x + m*y = 1, so x inverts v mod m
    return mod_canon(x, m);
}

}  // namespace

CupMatrix cup_matrix_pid(const NormalizedPair& np, const RingSpec& ring) {
    const CharacteristicPair& p = np.pair;
    if (np.flavor != Flavor::Half || !in_half_form(p))
        throw NotNormalizedError("pair is not half-normalized");
    int n = p.n();
    Int a_last = p.vec(n + 2).a, b_last = p.vec(n + 2).b;
    Int k = torsion_order(p);
    if (b_last % k != 0) throw Error("torsion order does not divide b_{n+2}");  // unreachable
    Int unit = b_last / k;

    // scaled minors (a_i b_{n+2} - a_{n+2} b_i)/k, exact by construction
    std::vector<Int> t(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Int minor = checked_sub(checked_mul(p.vec(i).a, b_last), checked_mul(a_last, p.vec(i).b));
        if (minor % k != 0) throw Error("torsion order does not divide a minor");  // unreachable
        t[static_cast<size_t>(i - 1)] = minor / k;
    }

    CupMatrix m;
    m.n = n;
    m.ring = ring;
    m.tag = BasisTag::Pid;
    m.sign_freedom = true;
    m.entries.assign(static_cast<size_t>(n) * n, RingElem::integer(0));
    auto set = [&](int i, int j, RingElem e) {
        m.entries[static_cast<size_t>(i - 1) * n + (j - 1)] = e;
        m.entries[static_cast<size_t>(j - 1) * n + (i - 1)] = std::move(e);
    };

    switch (ring.kind) {
        case RingSpec::Kind::Rationals:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    set(i, j, RingElem::rational(Rational(checked_mul(p.vec(j).b,
                                                                      t[static_cast<size_t>(i - 1)]),
                                                          unit)));
            break;
        case RingSpec::Kind::IntegersMod: {
            Int mod = ring.modulus;
            if (ext_gcd(unit, mod).g != 1)
                throw NotInvertibleError("b_{n+2}/k = " + std::to_string(unit) +
                                         " is not a unit mod " + std::to_string(mod));
            Int uinv = mod_inverse(mod_canon(unit, mod), mod);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    Int v = mod_canon(p.vec(j).b, mod);
                    v = mod_canon(checked_mul(v, mod_canon(t[static_cast<size_t>(i - 1)], mod)), mod);
                    v = mod_canon(checked_mul(v, uinv), mod);
                    set(i, j, RingElem::residue(v, mod));
                }
            break;
        }
        case RingSpec::Kind::Integers:
            if (unit != 1 && unit != -1)
                throw NotInvertibleError("b_{n+2}/k = " + std::to_string(unit) +
                                         " is not a unit in Z");
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j)
                    set(i, j, RingElem::integer(checked_mul(
                                  checked_mul(p.vec(j).b, t[static_cast<size_t>(i - 1)]), unit)));
            break;
    }
    return m;
}

SmoothCompanion smooth_companion(const NormalizedPair& np) {
    const CharacteristicPair& p = np.pair;
    if (np.flavor != Flavor::Half || !in_half_form(p))
        throw NotNormalizedError("pair is not half-normalized");
    int m = p.m();
    Int a_last = p.vec(p.n() + 2).a, b_last = p.vec(p.n() + 2).b;
    std::vector<Int> g(static_cast<size_t>(m));
    std::vector<IntVec2> bar(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        Int x = checked_mul(p.vec(i).a, b_last);
        Int y = checked_mul(a_last, p.vec(i).b);
        Int gi = ext_gcd(x, y).g;  // nonzero: x = y = 0 would need a_i = b_i = 0
        g[static_cast<size_t>(i - 1)] = gi;
        bar[static_cast<size_t>(i - 1)] = {checked_sub(x, y) / gi, y / gi};
    }
    // raw ends are (sign(b_{n+2}),0) and (0,sign(a_{n+2} b_{n+2})); fix both
    Int e1 = b_last > 0 ? 1 : -1;
    Int e2 = checked_mul(a_last, b_last) > 0 ? 1 : -1;
    UnimodularMatrix2 fix(e1, 0, 0, e2);
    for (auto& v : bar) v = fix.apply(v);
    CharacteristicPair out = make_pair_or_throw(std::move(bar));
    if (!in_smooth_form(out)) throw Error("companion failed to reach smooth form");
    return {NormalizedPair{out, fix, 0, Flavor::Smooth}, g};
}

}  // namespace toric4
