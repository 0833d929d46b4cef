#include <doctest.h>

#include "toric4/cohomology.hpp"
#include "toric4/generate.hpp"
#include "toric4/morphisms.hpp"
#include "toric4/srengine.hpp"

using namespace toric4;

TEST_CASE("integral cohomology groups") {
    auto cp2 = make_pair_or_throw({{1, 1}, {1, 0}, {0, 1}});
    auto g = groups_over_Z(cp2);
    CHECK(g.degree[0].free_rank == 1);
    CHECK(g.degree[1].free_rank == 0);
    CHECK(g.degree[2].free_rank == 1);
    CHECK(g.degree[3].free_rank == 0);
    CHECK(g.degree[4].free_rank == 1);
    for (int d = 0; d <= 4; ++d) CHECK(g.degree[static_cast<size_t>(d)].torsion.empty());

    auto wp = make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}});
    g = groups_over_Z(wp);
    CHECK(g.degree[3].torsion == std::vector<Int>{2});

    Rng rng(41);
    auto hexagon = random_valid_pair(rng, 6, 9);
    CHECK(groups_over_Z(hexagon).degree[2].free_rank == 4);
}

TEST_CASE("groups over other coefficient rings") {
    auto wp = make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}});  // k = 2
    auto gq = groups_over_R(wp, RingSpec::Q());
    CHECK(gq.degree[3].free_rank == 0);
    CHECK(gq.degree[3].torsion.empty());

    auto g6 = groups_over_R(wp, RingSpec::Zmod(6));
    CHECK(g6.degree[3].torsion == std::vector<Int>{2});

    auto g9 = groups_over_R(wp, RingSpec::Zmod(9));
    CHECK(g9.degree[3].torsion.empty());

    auto cp2 = make_pair_or_throw({{1, 1}, {1, 0}, {0, 1}});  // k = 1
    CHECK(groups_over_R(cp2, RingSpec::Zmod(7)).degree[3].torsion.empty());
    CHECK(groups_over_R(cp2, RingSpec::Z()).degree[3].torsion.empty());
}

TEST_CASE("smooth cup matrix on pinned inputs") {
    auto cp2 = normalize_smooth(make_pair_or_throw({{1, 1}, {1, 0}, {0, 1}}), 2);
    auto m = cup_matrix_smooth(cp2);
    CHECK(m.n == 1);
    CHECK(m.at(0, 0).int_value() == 1);
    CHECK(!m.sign_freedom);

    // the product square: off-diagonal 1, zero diagonal
    auto s2s2 = normalize_smooth(make_pair_or_throw({{1, 0}, {0, 1}, {1, 0}, {0, 1}}), 3);
    m = cup_matrix_smooth(s2s2);
    CHECK(m.n == 2);
    CHECK(m.at(0, 0).int_value() == 0);
    CHECK(m.at(0, 1).int_value() == 1);
    CHECK(m.at(1, 0).int_value() == 1);
    CHECK(m.at(1, 1).int_value() == 0);

    auto tri = normalize_smooth(make_pair_or_throw({{2, 3}, {1, 0}, {0, 1}}), 2);
    CHECK(cup_matrix_smooth(tri).at(0, 0).int_value() == 6);

    NormalizedPair half{make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}}),
                        UnimodularMatrix2::identity(), 0, Flavor::Half};
    CHECK_THROWS_AS(cup_matrix_smooth(half), NotNormalizedError);
}

TEST_CASE("smooth formula agrees with the oracle") {
    Rng rng(42);
    for (int t = 0; t < 40; ++t) {
        int n = static_cast<int>(rng.uniform(1, 5));
        auto p = random_smooth_form_pair(rng, n, 9, true);
        NormalizedPair np{p, UnimodularMatrix2::identity(), 0, Flavor::Smooth};
        auto formula = cup_matrix_smooth(np);
        auto oracle = oracle_cup_matrix_smooth(p);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(oracle.at(i, j) == Rational(formula.at(i, j).int_value()));
        // diagonal law
        for (int i = 1; i <= n; ++i)
            CHECK(formula.at(i - 1, i - 1).int_value() == p.vec(i).a * p.vec(i).b);
    }
}

TEST_CASE("triangle coefficient on pinned inputs") {
    NormalizedPair wp{make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}}),
                      UnimodularMatrix2::identity(), 0, Flavor::Half};
    auto t = cup_triangle(wp);
    CHECK(t.k == 2);
    CHECK(t.c == 4);
    CHECK(t.sign_freedom);

    // the standard triangle in half form: k = 1, c = 1
    auto cp2_half = normalize_half(make_pair_or_throw({{1, 1}, {1, 0}, {0, 1}}), 2);
    t = cup_triangle(cp2_half);
    CHECK(t.k == 1);
    CHECK(t.c == 1);

    CHECK_THROWS_AS(cup_triangle(normalize_smooth(
                        make_pair_or_throw({{1, 0}, {0, 1}, {1, 0}, {0, 1}}), 3)),
                    Error);
}

TEST_CASE("triangle coefficient matches the smooth value up to sign") {
    Rng rng(43);
    int done = 0;
    while (done < 100) {
        NormalizedPair np = random_half_triangle(rng, 9);
        if (smooth_edge_pairs(np.pair).empty()) continue;
        auto t = cup_triangle(np);
        auto sm = normalize_smooth(np.pair);
        Int ab = checked_mul(sm.pair.vec(1).a, sm.pair.vec(1).b);
        CHECK((t.c == ab || t.c == -ab));
        ++done;
    }
}

TEST_CASE("pid cup matrix over the rationals") {
    NormalizedPair wp{make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}}),
                      UnimodularMatrix2::identity(), 0, Flavor::Half};
    auto m = cup_matrix_pid(wp, RingSpec::Q());
    CHECK(m.n == 1);
    // b_1 (a_1 b_3 - a_3 b_1) / b_3 = 2*4/2
    CHECK(m.at(0, 0).rat_value() == Rational(4));
    CHECK(m.sign_freedom);

    // entries are b_j (a_i b_{n+2} - a_{n+2} b_i) / b_{n+2} exactly
    Rng rng(44);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.uniform(1, 4));
        NormalizedPair np = random_half_pair(rng, n, 6);
        auto mq = cup_matrix_pid(np, RingSpec::Q());
        Int al = np.pair.vec(n + 2).a, bl = np.pair.vec(n + 2).b;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                Rational expect(
                    checked_mul(np.pair.vec(j).b, checked_sub(checked_mul(np.pair.vec(i).a, bl),
                                                              checked_mul(al, np.pair.vec(i).b))),
                    bl);
                CHECK(mq.at(i - 1, j - 1).rat_value() == expect);
                CHECK(mq.at(j - 1, i - 1).rat_value() == expect);
            }
    }
}

TEST_CASE("pid cup matrix over Z/m and over Z") {
    NormalizedPair wp{make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}}),
                      UnimodularMatrix2::identity(), 0, Flavor::Half};
    // b_{n+2}/k = 1 here, so every modulus and even Z are allowed
    auto m5 = cup_matrix_pid(wp, RingSpec::Zmod(5));
    CHECK(m5.at(0, 0).int_value() == 4);
    auto mz = cup_matrix_pid(wp, RingSpec::Z());
    CHECK(mz.at(0, 0).int_value() == 4);

    // a pair with b_{n+2}/k = 2: Z/4 must be rejected, Z/3 must work
    NormalizedPair h{make_pair_or_throw({{1, 1}, {1, 0}, {1, 2}}), UnimodularMatrix2::identity(),
                     0, Flavor::Half};
    CHECK(torsion_order(h.pair) == 1);
    CHECK_THROWS_AS(cup_matrix_pid(h, RingSpec::Zmod(4)), NotInvertibleError);
    CHECK_THROWS_AS(cup_matrix_pid(h, RingSpec::Z()), NotInvertibleError);
    auto m3 = cup_matrix_pid(h, RingSpec::Zmod(3));
    // over Q the entry is 1*(1*2-1*1)/2 = 1/2; mod 3 the inverse of 2 is 2
    CHECK(m3.at(0, 0).int_value() == 2);

    // residue consistency: unit * entry == b_j * t_i mod m on random pairs
    Rng rng(45);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.uniform(1, 4));
        NormalizedPair np = random_half_pair(rng, n, 6);
        Int k = torsion_order(np.pair);
        Int al = np.pair.vec(n + 2).a, bl = np.pair.vec(n + 2).b;
        Int unit = bl / k;
        Int mod = rng.uniform(2, 30);
        if (ext_gcd(unit, mod).g != 1) {
            CHECK_THROWS_AS(cup_matrix_pid(np, RingSpec::Zmod(mod)), NotInvertibleError);
            continue;
        }
        auto mm = cup_matrix_pid(np, RingSpec::Zmod(mod));
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                Int ti = (checked_sub(checked_mul(np.pair.vec(i).a, bl),
                                      checked_mul(al, np.pair.vec(i).b))) /
                         k;
                Int lhs = ((unit % mod) * mm.at(i - 1, j - 1).int_value()) % mod;
                Int rhs = (np.pair.vec(j).b % mod) * (ti % mod) % mod;
                CHECK(((lhs - rhs) % mod + mod) % mod == 0);
            }
    }
}

TEST_CASE("smooth companion on pinned input") {
    NormalizedPair wp{make_pair_or_throw({{1, 2}, {1, 0}, {-1, 2}}),
                      UnimodularMatrix2::identity(), 0, Flavor::Half};
    auto sc = smooth_companion(wp);
    CHECK(sc.g == std::vector<Int>{2, 2, 2});
    CHECK(sc.companion.pair.vec(1) == IntVec2{2, 1});
    CHECK(sc.companion.pair.vec(2) == IntVec2{1, 0});
    CHECK(sc.companion.pair.vec(3) == IntVec2{0, 1});
    CHECK(in_smooth_form(sc.companion.pair));
    CHECK(sc.companion.flavor == Flavor::Smooth);
}

TEST_CASE("smooth companion admits the diagonal torus lifting") {
    Rng rng(46);
    for (int t = 0; t < 60; ++t) {
        int n = static_cast<int>(rng.uniform(1, 4));
        NormalizedPair np = random_half_pair(rng, n, 6);
        auto sc = smooth_companion(np);
        CHECK(in_smooth_form(sc.companion.pair));

        // tau = sign-fix * [[b, -a],[0, a]] carries lambda onto g_i * companion_i
        Int a = np.pair.vec(n + 2).a, b = np.pair.vec(n + 2).b;
        TorusHom2 tau{{{b, checked_neg(a)}, {0, a}}};
        Int e1 = b > 0 ? 1 : -1, e2 = checked_mul(a, b) > 0 ? 1 : -1;
        TorusHom2 fixed{{{checked_mul(e1, tau.e[0][0]), checked_mul(e1, tau.e[0][1])},
                         {checked_mul(e2, tau.e[1][0]), checked_mul(e2, tau.e[1][1])}}};
        std::vector<int> id(static_cast<size_t>(np.pair.m()));
        for (int j = 1; j <= np.pair.m(); ++j) id[static_cast<size_t>(j - 1)] = j;
        CompatiblePair cp{EdgeMap{OrderSurjection::make(id)}, fixed, np.pair,
                          sc.companion.pair};
        auto res = solve_lifting(cp);
        REQUIRE(std::holds_alternative<Lifting>(res));
        const auto& l = std::get<Lifting>(res);
        for (int i = 1; i <= np.pair.m(); ++i)
            for (int j = 1; j <= np.pair.m(); ++j)
                CHECK(l.psi_tilde.at(i - 1, j - 1) ==
                      (i == j ? sc.g[static_cast<size_t>(i - 1)] : 0));
    }
}
