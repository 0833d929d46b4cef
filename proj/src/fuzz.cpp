#include "toric4/fuzz.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "toric4/cohomology.hpp"
#include "toric4/generate.hpp"
#include "toric4/morphisms.hpp"
#include "toric4/srengine.hpp"

namespace toric4 {

namespace {

std::string edges_str(const DegenerateCharacteristicPair& p) {
    std::ostringstream os;
    os << "[";
    for (int i = 1; i <= p.m(); ++i) {
        if (i > 1) os << ",";
        os << "[" << p.vec(i).a << "," << p.vec(i).b << "]";
    }
    os << "]";
    return os.str();
}

using PropFn = std::function<std::optional<std::string>(uint64_t)>;

PropertyReport run_property(const std::string& name, int instances, uint64_t seed, uint64_t stream,
                            const PropFn& fn) {
    std::vector<std::optional<std::string>> fails(static_cast<size_t>(instances));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < instances; ++i) {
        try {
            fails[static_cast<size_t>(i)] = fn(mix_seed(seed, stream, static_cast<uint64_t>(i)));
        } catch (const Error& e) {
            fails[static_cast<size_t>(i)] = std::string("unexpected error: ") + e.what();
        }
    }
    PropertyReport rep{name, instances, 0, ""};
    for (const auto& f : fails) {
        if (!f) continue;
        ++rep.failures;
        if (rep.first_counterexample.empty()) rep.first_counterexample = *f;
    }
    return rep;
}

QMatrix cup_to_qmatrix(const CupMatrix& m) {
    QMatrix q(m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) {
            if (m.ring.kind == RingSpec::Kind::Rationals)
                q.at(i, j) = m.at(i, j).rat_value();
            else
                q.at(i, j) = Rational(m.at(i, j).int_value());
        }
    return q;
}

Rational rational_pow(const Rational& x, int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= x;
    return r;
}

std::optional<std::string> check_scaled_congruence(const NormalizedPair& np) {
    const CharacteristicPair& p = np.pair;
    int n = p.n();
    QMatrix m = cup_to_qmatrix(cup_matrix_pid(np, RingSpec::Q()));
    QMatrix g = gram_matrix_natural(p).g;
    auto im = congruence_invariants(m);
    auto ig = congruence_invariants(g);
    if (im.rank != n || ig.rank != n)
        return "rank defect: formula " + std::to_string(im.rank) + ", oracle " +
               std::to_string(ig.rank) + " on " + edges_str(p);
    Rational dm = det_rational(m), dg = det_rational(g);
    Int b = p.vec(n + 2).b;
    Rational babs(b < 0 ? checked_neg(b) : b);
    for (int e : {1, -1}) {
        if (im.signature != e * ig.signature) continue;
        Rational scale = rational_pow(e < 0 ? -babs : babs, n);
        Rational ratio = dm * scale / dg;
        if (is_rational_square(ratio)) return std::nullopt;
    }
    return "no global sign matches signature and scaled determinant on " + edges_str(p);
}

}  // namespace

bool FuzzReport::all_passed() const {
    for (const auto& p : properties)
        if (p.failures > 0) return false;
    return true;
}

FuzzReport run_fuzz(uint64_t seed, int count) {
    FuzzReport rep;
    rep.seed = seed;
    rep.count = count;

    rep.properties.push_back(run_property(
        "smooth-oracle-agreement", count, seed, 1, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int n = static_cast<int>(rng.uniform(1, 6));
            CharacteristicPair p = random_smooth_form_pair(rng, n, 9, true);
            QMatrix oracle = oracle_cup_matrix_smooth(p);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    Rational expect(checked_mul(p.vec(i).a, p.vec(j).b));
                    if (!(oracle.at(i - 1, j - 1) == expect))
                        return "oracle entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") = " + oracle.at(i - 1, j - 1).str() + ", formula " +
                               expect.str() + " on " + edges_str(p);
                }
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "triangle-integrality", count, seed, 2, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            NormalizedPair np = random_half_triangle(rng, 9);
            try {
                TriangleCup t = cup_triangle(np);
                if (t.k != torsion_order(np.pair))
                    return "k mismatch on " + edges_str(np.pair);
            } catch (const IntegralityViolationError& e) {
                return std::string(e.what()) + " on " + edges_str(np.pair);
            }
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "gl2-equivariance", count, seed, 3, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int n = static_cast<int>(rng.uniform(1, 4));
            NormalizedPair np = random_half_pair(rng, n, 6);
            Int b = np.pair.vec(n + 2).b, a = np.pair.vec(n + 2).a;
            Int sh = 0, eps = rng.coin() ? 1 : -1;
            for (int attempt = 0; attempt < 16; ++attempt) {
                sh = rng.uniform(-5, 5);
                if (checked_add(a, checked_mul(sh, b)) != 0) break;
            }
            if (checked_add(a, checked_mul(sh, b)) == 0) return std::nullopt;  // skip
            UnimodularMatrix2 u(1, sh, 0, eps);
            NormalizedPair np2{apply_basis_change(np.pair, u), u * np.basis_change, np.rotation,
                               Flavor::Half};
            QMatrix m1 = cup_to_qmatrix(cup_matrix_pid(np, RingSpec::Q()));
            QMatrix m2 = cup_to_qmatrix(cup_matrix_pid(np2, RingSpec::Q()));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!(m2.at(i, j) == Rational(eps) * m1.at(i, j)))
                        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                               ") breaks equivariance (s=" + std::to_string(sh) +
                               ", eps=" + std::to_string(eps) + ") on " + edges_str(np.pair);
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "coefficient-ring-torsion", count, seed, 4, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int m = static_cast<int>(rng.uniform(3, 8));
            CharacteristicPair p = random_valid_pair(rng, m, 9);
            Int mod = rng.uniform(2, 30);
            Int k = torsion_order(p);
            auto groups = groups_over_R(p, RingSpec::Zmod(mod));
            Int order = groups.degree[3].torsion.empty() ? 1 : groups.degree[3].torsion[0];
            if (order != ext_gcd(k, mod).g)
                return "degree-3 order " + std::to_string(order) + " != gcd(" + std::to_string(k) +
                       "," + std::to_string(mod) + ") on " + edges_str(p);
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "scaled-congruence", count, seed, 5, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int n = static_cast<int>(rng.uniform(1, 4));
            return check_scaled_congruence(random_half_pair(rng, n, 6));
        }));

    rep.properties.push_back(run_property(
        "validate-crosscheck", count, seed, 6, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int m = static_cast<int>(rng.uniform(3, 8));
            std::vector<IntVec2> v;
            for (int i = 0; i < m; ++i) v.push_back({rng.uniform(-4, 4), rng.uniform(-4, 4)});
            bool expect = true;
            for (int i = 0; i < m && expect; ++i) {
                IntVec2 x = v[static_cast<size_t>(i)];
                if (ext_gcd(x.a, x.b).g != 1) expect = false;
            }
            for (int i = 0; i < m && expect; ++i) {
                IntVec2 x = v[static_cast<size_t>(i)], y = v[static_cast<size_t>((i + 1) % m)];
                if (x.a * y.b - y.a * x.b == 0) expect = false;
            }
            bool got = std::holds_alternative<CharacteristicPair>(CharacteristicPair::validate(v));
            if (got != expect) {
                std::ostringstream os;
                os << "validate disagrees with the direct check on [";
                for (const auto& x : v) os << "[" << x.a << "," << x.b << "]";
                os << "]";
                return os.str();
            }
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "quotient-dimension", count, seed, 7, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int m = static_cast<int>(rng.uniform(3, 10));
            CharacteristicPair p = random_valid_pair(rng, m, 9);
            try {
                Deg4Quotient::build(p);
            } catch (const DegenerateQuotientError& e) {
                return std::string(e.what()) + " on " + edges_str(p);
            }
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "torsion-invariance", count, seed, 8, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int m = static_cast<int>(rng.uniform(3, 8));
            CharacteristicPair p = random_valid_pair(rng, m, 9);
            Int k = torsion_order(p);
            int r = static_cast<int>(rng.uniform(0, m - 1));
            if (torsion_order(rotate_labels(p, r)) != k)
                return "rotation changes the torsion order on " + edges_str(p);
            UnimodularMatrix2 u =
                UnimodularMatrix2(1, rng.uniform(-3, 3), 0, 1) *
                UnimodularMatrix2(1, 0, rng.uniform(-3, 3), 1) *
                (rng.coin() ? UnimodularMatrix2(0, 1, 1, 0) : UnimodularMatrix2::identity());
            if (torsion_order(apply_basis_change(p, u)) != k)
                return "basis change alters the torsion order on " + edges_str(p);
            int idx = static_cast<int>(rng.uniform(1, m));
            std::vector<IntVec2> v = p.vectors();
            v[static_cast<size_t>(idx - 1)] = {checked_neg(v[static_cast<size_t>(idx - 1)].a),
                                               checked_neg(v[static_cast<size_t>(idx - 1)].b)};
            auto res = CharacteristicPair::validate(std::move(v));
            if (torsion_order(std::get<CharacteristicPair>(res)) != k)
                return "negating one vector alters the torsion order on " + edges_str(p);
            return std::nullopt;
        }));

    rep.properties.push_back(run_property(
        "normalize-roundtrip", count, seed, 9, [](uint64_t s) -> std::optional<std::string> {
            Rng rng(s);
            int m = static_cast<int>(rng.uniform(3, 8));
            CharacteristicPair p = random_valid_pair(rng, m, 9);
            NormalizedPair h = normalize_half(p);
            if (!in_half_form(h.pair)) return "half form invariant broken on " + edges_str(p);
            Int k = torsion_order(p);
            if (h.pair.vec(m).b % k != 0)
                return "b_{n+2} not divisible by the torsion order on " + edges_str(p);
            CharacteristicPair undone =
                rotate_labels(apply_basis_change(h.pair, h.basis_change.inverse()), -h.rotation);
            if (!(undone == p)) return "half normalization does not undo on " + edges_str(p);
            auto smooth = smooth_edge_pairs(p);
            if (!smooth.empty()) {
                NormalizedPair sm = normalize_smooth(p);
                if (!in_smooth_form(sm.pair) || torsion_order(sm.pair) != 1)
                    return "smooth form invariant broken on " + edges_str(p);
                CharacteristicPair back = rotate_labels(
                    apply_basis_change(sm.pair, sm.basis_change.inverse()), -sm.rotation);
                if (!(back == p)) return "smooth normalization does not undo on " + edges_str(p);
            }
            return std::nullopt;
        }));

    return rep;
}

}  // namespace toric4
