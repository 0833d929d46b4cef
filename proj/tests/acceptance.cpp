// Acceptance suite: one pass/fail line per criterion, exit code equal to
// the number of failed criteria. Every tolerance here is exact equality;
// the two timed criteria use wall-clock budgets.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "toric4/cohomology.hpp"
#include "toric4/generate.hpp"
#include "toric4/morphisms.hpp"
#include "toric4/srengine.hpp"

using namespace toric4;

namespace {

struct Checker {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    " << what << "\n";
        }
    }
};

int g_failures = 0;

void criterion(int id, const std::string& label, const std::function<void(Checker&)>& body) {
    Checker c;
    try {
        body(c);
    } catch (const Error& e) {
        c.require(false, std::string("unexpected error: ") + e.what());
    }
    std::cout << "criterion " << id << ": " << (c.ok ? "PASS" : "FAIL") << " - " << label << "\n";
    if (!c.ok) {
        std::cout << c.detail.str();
        ++g_failures;
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Deg4Class scale_deg4(const Deg4Class& c, const Rational& f) {
    Deg4Class out;
    for (const auto& [key, val] : c.terms) out.terms.emplace(key, val * f);
    return out;
}

}  // namespace

int main() {
    criterion(1, "standard triangle: groups, cup matrix and oracle all equal 1", [](Checker& c) {
        auto start = std::chrono::steady_clock::now();
        auto p = make_pair_or_throw({{1, 1}, {1, 0}, {0, 1}});
        auto g = groups_over_Z(p);
        c.require(g.degree[0].free_rank == 1 && g.degree[1].free_rank == 0 &&
                      g.degree[2].free_rank == 1 && g.degree[3].free_rank == 0 &&
                      g.degree[4].free_rank == 1,
                  "free ranks differ from (1,0,1,0,1)");
        for (int d = 0; d <= 4; ++d)
            c.require(g.degree[static_cast<size_t>(d)].torsion.empty(), "unexpected torsion");
        auto np = normalize_smooth(p, 2);
        auto cup = cup_matrix_smooth(np);
        c.require(cup.n == 1 && cup.at(0, 0).int_value() == 1, "cup matrix is not (1)");
        auto oracle = oracle_cup_matrix_smooth(np.pair);
        c.require(oracle.at(0, 0) == Rational(1), "oracle matrix is not (1)");
        c.require(seconds_since(start) < 0.1, "took 0.1 s or longer");
    });

    criterion(2, "oracle sweep: 200 smooth pairs match a_i*b_j entrywise", [](Checker& c) {
        auto start = std::chrono::steady_clock::now();
        for (int t = 0; t < 200; ++t) {
            Rng rng(mix_seed(20240801, 2, static_cast<uint64_t>(t)));
            int n = static_cast<int>(rng.uniform(1, 6));
            CharacteristicPair p = random_smooth_form_pair(rng, n, 9, true);
            QMatrix oracle = oracle_cup_matrix_smooth(p);
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    Rational expect(checked_mul(p.vec(i).a, p.vec(j).b));
                    if (!(oracle.at(i - 1, j - 1) == expect && oracle.at(j - 1, i - 1) == expect)) {
                        c.require(false, "mismatch at instance " + std::to_string(t) + " entry (" +
                                             std::to_string(i) + "," + std::to_string(j) + ")");
                        return;
                    }
                }
        }
        c.require(seconds_since(start) < 10.0, "took 10 s or longer");
    });

    criterion(3, "product square: cup matrix [[0,1],[1,0]] and trivial degree 3", [](Checker& c) {
        auto p = make_pair_or_throw({{1, 0}, {0, 1}, {1, 0}, {0, 1}});
        auto np = normalize_smooth(p, 3);
        auto cup = cup_matrix_smooth(np);
        c.require(cup.n == 2, "wrong size");
        c.require(cup.at(0, 0).int_value() == 0 && cup.at(1, 1).int_value() == 0 &&
                      cup.at(0, 1).int_value() == 1 && cup.at(1, 0).int_value() == 1,
                  "cup matrix is not [[0,1],[1,0]]");
        auto g = groups_over_Z(p);
        c.require(g.degree[3].free_rank == 0 && g.degree[3].torsion.empty(),
                  "degree-3 group is not trivial");
    });

    criterion(4, "documented contraction has no lifting, failing at column 1", [](Checker& c) {
        auto p = make_pair_or_throw({{2, 1}, {-3, -2}, {1, 0}, {0, 1}});
        auto r = contract_keep(p, 2);
        c.require(r.push.characteristic, "pushforward target is not characteristic");
        c.require(r.push.target.vectors() == std::vector<IntVec2>{{-3, -2}, {1, 0}, {0, 1}},
                  "pushforward target differs");
        CompatiblePair cp{EdgeMap{r.rho}, TorusHom2::identity(), p, r.push.target};
        c.require(validate_compatible(cp).ok, "compatibility check failed");
        auto res = solve_lifting(cp);
        if (!std::holds_alternative<NoLifting>(res)) {
            c.require(false, "a lifting was found");
            return;
        }
        c.require(std::get<NoLifting>(res).column == 1, "wrong failing column");
    });

    criterion(5, "rescaling sends the generators to 6*y_1 and 6*y_2y_3", [](Checker& c) {
        auto p = make_pair_or_throw({{2, 3}, {1, 0}, {0, 1}});
        auto rs = rescale(p, 1);
        SubstitutionMap s = induced_substitution(rs.lifting);
        Deg2Class img1 = s.apply_deg2(unit_class(3, 1));
        Deg2Class want1(3);
        want1.coeff(1) = Rational(6);
        c.require(deg2_equal_mod_linear(p, img1, want1), "[x_1] does not map to [6 y_1]");
        Deg4Class img23 = s.apply_deg4(deg4_monomial(3, 2, 3));
        auto q = Deg4Quotient::build(p);
        c.require(q.classes_equal(img23, scale_deg4(deg4_monomial(3, 2, 3), Rational(6))),
                  "[x_2 x_3] does not map to [6 y_2 y_3]");
    });

    criterion(6, "torsion triangle: k, degree-3 group, c = 4, and the square law", [](Checker& c) {
        auto start = std::chrono::steady_clock::now();
        auto p = make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}});
        c.require(torsion_order(p) == 2, "k != 2");
        auto g = groups_over_Z(p);
        c.require(g.degree[3].torsion == std::vector<Int>{2}, "degree-3 group is not Z/2");
        NormalizedPair np = normalize_half(p, 2);
        auto t = cup_triangle(np);
        c.require(t.k == 2, "formula k != 2");
        c.require(t.c == 4, "c != 4");
        Rational gram = gram_matrix_natural(np.pair).g.at(0, 0);
        c.require(!gram.is_zero(), "gram entry vanishes");
        Rational ratio = Rational(t.c) / gram;
        c.require(is_rational_square(ratio),
                  "c/g = " + ratio.str() + " is not a rational square");
        c.require(seconds_since(start) < 0.1, "took 0.1 s or longer");
    });

    criterion(7, "500 half triangles: k^2 divides b_1 b_3 (a_1 b_3 - a_3 b_1)", [](Checker& c) {
        for (int t = 0; t < 500; ++t) {
            Rng rng(mix_seed(20240801, 7, static_cast<uint64_t>(t)));
            NormalizedPair np = random_half_triangle(rng, 9);
            Int b1 = np.pair.vec(1).b, b3 = np.pair.vec(3).b;
            Int a1 = np.pair.vec(1).a, a3 = np.pair.vec(3).a;
            Int k = ext_gcd(b1, b3).g;
            Int num = checked_mul(checked_mul(b1, b3),
                                  checked_sub(checked_mul(a1, b3), checked_mul(a3, b1)));
            if (num % checked_mul(k, k) != 0) {
                c.require(false, "divisibility fails at instance " + std::to_string(t));
                return;
            }
            try {
                cup_triangle(np);
            } catch (const IntegralityViolationError&) {
                c.require(false, "integrality violation at instance " + std::to_string(t));
                return;
            }
        }
    });

    criterion(8, "100 half pairs: rank/signature match and square det ratio", [](Checker& c) {
        int bad = 0;
        std::string first;
        for (int t = 0; t < 100; ++t) {
            Rng rng(mix_seed(20240801, 8, static_cast<uint64_t>(t)));
            int n = static_cast<int>(rng.uniform(1, 4));
            NormalizedPair np = random_half_pair(rng, n, 6);
            CupMatrix cm = cup_matrix_pid(np, RingSpec::Q());
            QMatrix m(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m.at(i, j) = cm.at(i, j).rat_value();
            QMatrix g = gram_matrix_natural(np.pair).g;
            auto im = congruence_invariants(m);
            auto ig = congruence_invariants(g);
            bool inst_ok = im.rank == ig.rank && im.signature == ig.signature;
            if (inst_ok) {
                Rational ratio = det_rational(m) / det_rational(g);
                inst_ok = is_rational_square(ratio);
            }
            if (!inst_ok) {
                ++bad;
                if (first.empty()) {
                    std::ostringstream os;
                    os << "instance " << t << ": rank " << im.rank << "/" << ig.rank
                       << ", signature " << im.signature << "/" << ig.signature << ", det ratio "
                       << (det_rational(m) / det_rational(g)).str();
                    first = os.str();
                }
            }
        }
        c.require(bad == 0,
                  std::to_string(bad) + " of 100 instances fail; first: " + first);
    });

    criterion(9, "100 shears: the pid matrix transforms as M -> eps*M", [](Checker& c) {
        int done = 0, t = 0;
        while (done < 100 && t < 1000) {
            Rng rng(mix_seed(20240801, 9, static_cast<uint64_t>(t++)));
            int n = static_cast<int>(rng.uniform(1, 4));
            NormalizedPair np = random_half_pair(rng, n, 6);
            Int a = np.pair.vec(n + 2).a, b = np.pair.vec(n + 2).b;
            Int sh = rng.uniform(-5, 5);
            Int eps = rng.coin() ? 1 : -1;
            if (checked_add(a, checked_mul(sh, b)) == 0) continue;  // not half form after shear
            UnimodularMatrix2 u(1, sh, 0, eps);
            NormalizedPair np2{apply_basis_change(np.pair, u), u * np.basis_change, np.rotation,
                               Flavor::Half};
            CupMatrix m1 = cup_matrix_pid(np, RingSpec::Q());
            CupMatrix m2 = cup_matrix_pid(np2, RingSpec::Q());
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!(m2.at(i, j).rat_value() == Rational(eps) * m1.at(i, j).rat_value())) {
                        c.require(false, "equivariance fails at sweep index " + std::to_string(t));
                        return;
                    }
            ++done;
        }
        c.require(done == 100, "could not draw 100 admissible shears");
    });

    criterion(10, "100 moduli: degree-3 order over Z/m equals gcd(k, m)", [](Checker& c) {
        for (int t = 0; t < 100; ++t) {
            Rng rng(mix_seed(20240801, 10, static_cast<uint64_t>(t)));
            int m = static_cast<int>(rng.uniform(3, 8));
            CharacteristicPair p = random_valid_pair(rng, m, 9);
            Int mod = rng.uniform(2, 30);
            auto groups = groups_over_R(p, RingSpec::Zmod(mod));
            Int order = groups.degree[3].torsion.empty() ? 1 : groups.degree[3].torsion[0];
            if (order != ext_gcd(torsion_order(p), mod).g) {
                c.require(false, "order mismatch at instance " + std::to_string(t));
                return;
            }
        }
    });

    criterion(11, "50 contractions: substitution maps compose through the square", [](Checker& c) {
        for (int t = 0; t < 50; ++t) {
            Rng rng(mix_seed(20240801, 11, static_cast<uint64_t>(t)));
            ContractionInstance inst = random_liftable_contraction(rng);
            const CharacteristicPair& p = inst.pair;
            Int ab = checked_mul(p.vec(inst.i).a, p.vec(inst.i).b);

            auto lift_of = [](const CharacteristicPair& src, const ContractionResult& r) {
                CompatiblePair cp{EdgeMap{r.rho}, TorusHom2::identity(), src, r.push.target};
                return std::get<Lifting>(solve_lifting(cp));
            };
            auto ri = contract_keep(p, inst.i);
            SubstitutionMap direct = induced_substitution(lift_of(p, ri));
            auto rij = contract_keep2(p, inst.i, inst.j);
            SubstitutionMap outer = induced_substitution(lift_of(p, rij));
            auto square = make_pair_or_throw(rij.push.target.vectors());
            auto rsq = contract_keep(square, 1);
            SubstitutionMap inner = induced_substitution(lift_of(square, rsq));

            Deg2Class x1 = unit_class(3, 1);
            Deg2Class lhs = direct.apply_deg2(x1), rhs = outer.apply_deg2(inner.apply_deg2(x1));
            for (int l = 1; l <= p.m(); ++l) {
                lhs.coeff(l) *= Rational(ab);
                rhs.coeff(l) *= Rational(ab);
            }
            bool same2 = deg2_equal_mod_linear(p, lhs, rhs);
            auto q = Deg4Quotient::build(p);
            Deg4Class x23 = deg4_monomial(3, 2, 3);
            bool same4 =
                q.classes_equal(direct.apply_deg4(x23), outer.apply_deg4(inner.apply_deg4(x23)));
            if (!same2 || !same4) {
                c.require(false, "composition mismatch at instance " + std::to_string(t));
                return;
            }
        }
    });

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criterion(s) failed")
              << "\n";
    return g_failures;
}
