// Command-line front end: validation, cohomology groups, cup products,
// the rational oracle, normalizations, morphism pipelines and the seeded
// property sweep. Reports are JSON (default) or aligned text; every
// number is exact, rationals rendered as "p/q".

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>

#include "toric4/cohomology.hpp"
#include "toric4/fuzz.hpp"
#include "toric4/io.hpp"
#include "toric4/morphisms.hpp"
#include "toric4/srengine.hpp"

namespace {

using namespace toric4;

struct ValidationFailure {
    std::vector<Violation> violations;
};

std::string g_format = "json";

void emit(const Json& doc) {
    if (g_format == "text")
        std::cout << render_text(doc);
    else
        std::cout << doc.dump(2) << "\n";
}

CharacteristicPair load_pair(const std::string& path) {
    auto edges = parse_edges_file(path);
    auto res = CharacteristicPair::validate(std::move(edges));
    if (auto* v = std::get_if<std::vector<Violation>>(&res)) throw ValidationFailure{*v};
    return std::get<CharacteristicPair>(res);
}

RingSpec parse_ring(const std::string& s) {
    if (s == "z") return RingSpec::Z();
    if (s == "q") return RingSpec::Q();
    if (s.rfind("zmod:", 0) == 0) {
        Int m = 0;
        try {
            m = std::stoll(s.substr(5));
        } catch (const std::exception&) {
            throw IoError("bad modulus in --ring " + s);
        }
        if (m < 2) throw IoError("modulus must be >= 2");
        return RingSpec::Zmod(m);
    }
    throw IoError("unknown ring \"" + s + "\" (expected z, q or zmod:<m>)");
}

int cmd_validate(const std::string& file) {
    auto edges = parse_edges_file(file);
    auto res = CharacteristicPair::validate(std::move(edges));
    if (auto* v = std::get_if<std::vector<Violation>>(&res)) {
        emit(Json{{"valid", false}, {"violations", violations_to_json(*v)}});
        return 1;
    }
    const auto& p = std::get<CharacteristicPair>(res);
    emit(Json{{"valid", true},
              {"m", p.m()},
              {"smooth_pairs", smooth_edge_pairs(p)},
              {"k", torsion_order(p)}});
    return 0;
}

int cmd_groups(const std::string& file, const std::string& ring_str) {
    CharacteristicPair p = load_pair(file);
    RingSpec ring = parse_ring(ring_str);
    emit(groups_to_json(groups_over_R(p, ring), ring));
    return 0;
}

int cmd_cup(const std::string& file, const std::string& ring_str, const std::string& theorem,
            std::optional<int> index) {
    CharacteristicPair p = load_pair(file);
    RingSpec ring = parse_ring(ring_str);
    std::string which = theorem;
    if (which == "auto") {
        if (!smooth_edge_pairs(p).empty())
            which = "smooth";
        else if (p.m() == 3 && ring.kind == RingSpec::Kind::Integers)
            which = "triangle";
        else
            which = "pid";
    }
    Json out;
    out["theorem"] = which;
    out["k"] = torsion_order(p);
    if (which == "smooth") {
        NormalizedPair np = normalize_smooth(p, index);
        out["normalized"] = edges_to_json(np.pair);
        out["matrix"] = cup_matrix_to_json(cup_matrix_smooth(np));
        out["sign_freedom"] = false;
    } else if (which == "triangle") {
        NormalizedPair np = normalize_half(p, index);
        TriangleCup t = cup_triangle(np);
        out["normalized"] = edges_to_json(np.pair);
        out["c"] = t.c;
        out["k"] = t.k;
        out["sign_freedom"] = true;
    } else if (which == "pid") {
        NormalizedPair np = normalize_half(p, index);
        out["normalized"] = edges_to_json(np.pair);
        out["matrix"] = cup_matrix_to_json(cup_matrix_pid(np, ring));
        out["ring"] = ring.str();
        out["sign_freedom"] = true;
    } else {
        throw IoError("unknown theorem \"" + which + "\"");
    }
    emit(out);
    return 0;
}

int cmd_oracle(const std::string& file, std::optional<int> index) {
    CharacteristicPair p = load_pair(file);
    Json out;
    auto gram = gram_matrix_natural(p);
    out["gram"] = qmatrix_to_json(gram.g);
    out["gram_basis"] = gram.basis;
    auto inv = congruence_invariants(gram.g);
    Json invj{{"rank", inv.rank}, {"signature", inv.signature}};
    invj["det_square_class"] = inv.det_square_class ? Json(inv.det_square_class->str()) : Json();
    out["gram_invariants"] = invj;

    if (!smooth_edge_pairs(p).empty()) {
        NormalizedPair np = normalize_smooth(p, index);
        out["normalized"] = edges_to_json(np.pair);
        bool applicable = true;
        for (int i = 1; i <= np.pair.n(); ++i)
            if (checked_mul(np.pair.vec(i).a, np.pair.vec(i).b) == 0) applicable = false;
        if (applicable) {
            QMatrix oracle = oracle_cup_matrix_smooth(np.pair);
            out["oracle"] = qmatrix_to_json(oracle);
            CupMatrix formula = cup_matrix_smooth(np);
            out["formula"] = cup_matrix_to_json(formula);
            bool agree = true;
            for (int i = 0; i < formula.n; ++i)
                for (int j = 0; j < formula.n; ++j)
                    if (!(oracle.at(i, j) == Rational(formula.at(i, j).int_value()))) agree = false;
            out["agree"] = agree;
        } else {
            out["oracle"] = Json();
            out["reason"] = "a_i*b_i = 0 at some index; only the gram cross-check applies";
        }
    } else {
        out["oracle"] = Json();
        out["reason"] = "no smooth adjacent-edge pair";
    }
    emit(out);
    return 0;
}

int cmd_normalize(const std::string& file, std::optional<int> index) {
    CharacteristicPair p = load_pair(file);
    auto smooth = smooth_edge_pairs(p);
    bool use_smooth = !smooth.empty() &&
                      (!index || std::find(smooth.begin(), smooth.end(), *index) != smooth.end());
    NormalizedPair np = use_smooth ? normalize_smooth(p, index) : normalize_half(p, index);
    Json u = Json::array();
    for (int r = 0; r < 2; ++r)
        u.push_back({np.basis_change.entry(r, 0), np.basis_change.entry(r, 1)});
    Json out = edges_to_json(np.pair);
    out["flavor"] = np.flavor == Flavor::Smooth ? "smooth" : "half";
    out["rotation"] = np.rotation;
    out["basis_change"] = u;
    out["k"] = torsion_order(np.pair);
    emit(out);
    return 0;
}

OrderSurjection make_surjection(const std::vector<int>& rho) {
    try {
        return OrderSurjection::make(rho);
    } catch (const Error& e) {
        throw IoError(std::string("bad \"rho\": ") + e.what());
    }
}

Json lifting_result_json(const std::variant<Lifting, NoLifting>& res) {
    if (const auto* l = std::get_if<Lifting>(&res))
        return Json{{"lifting", int_matrix_to_json(l->psi_tilde)}};
    const auto& no = std::get<NoLifting>(res);
    return Json{{"lifting", Json()}, {"reason", no.reason}};
}

int cmd_morph(const std::string& file, const std::string& morph_file) {
    CharacteristicPair p = load_pair(file);
    MorphismSpec spec = parse_morphism_file(morph_file);
    Json out;
    if (const auto* c = std::get_if<MorphContract>(&spec)) {
        OrderSurjection rho = make_surjection(c->rho);
        auto push = pushforward(rho, p);
        out["type"] = "contract";
        out["target"] = edges_to_json(push.target);
        out["characteristic"] = push.characteristic;
        if (push.characteristic) {
            CompatiblePair cp{EdgeMap{rho}, TorusHom2::identity(), p, push.target};
            out.update(lifting_result_json(solve_lifting(cp)));
        }
        try {
            auto cm = cellular_index_map(EdgeMap{rho});
            out["cellular_map"] = Json{{"u_image", cm.u_image}, {"v_to_v", true}};
        } catch (const LabelingMismatchError&) {
        }
    } else if (const auto* b = std::get_if<MorphBend>(&spec)) {
        auto res = bend(p, b->i);
        out["type"] = "bend";
        out["target"] = edges_to_json(res.target);
        out["characteristic"] = false;
        try {
            auto cm = cellular_index_map(EdgeMap{res.map});
            out["cellular_map"] = Json{{"u_image", cm.u_image}, {"v_to_v", true}};
        } catch (const LabelingMismatchError&) {
        }
    } else if (const auto* r = std::get_if<MorphRescale>(&spec)) {
        auto res = rescale(p, r->i);
        out["type"] = "rescale";
        out["target"] = edges_to_json(res.target);
        out["characteristic"] = true;
        Json sigma = Json::array();
        sigma.push_back({res.sigma.e[0][0], res.sigma.e[0][1]});
        sigma.push_back({res.sigma.e[1][0], res.sigma.e[1][1]});
        out["sigma"] = sigma;
        out["lifting"] = int_matrix_to_json(res.lifting.psi_tilde);
    } else if (const auto* bc = std::get_if<MorphBasisChange>(&spec)) {
        out["type"] = "basis_change";
        out["target"] = edges_to_json(apply_basis_change(p, bc->u));
        out["characteristic"] = true;
    } else {
        const auto& cu = std::get<MorphCustom>(spec);
        OrderSurjection rho = make_surjection(cu.rho);
        auto push = pushforward(rho, p);
        CompatiblePair cp{EdgeMap{rho}, cu.psi, p, push.target};
        auto rep = validate_compatible(cp);
        out["type"] = "custom";
        out["target"] = edges_to_json(push.target);
        out["characteristic"] = push.characteristic;
        out["compatible"] = rep.ok;
        Json viols = Json::array();
        for (const auto& v : rep.violations) viols.push_back({{"edge", v.edge}, {"what", v.what}});
        out["violations"] = viols;
        out["line_test_edges"] = rep.line_test_edges;
        if (rep.ok && push.characteristic) out.update(lifting_result_json(solve_lifting(cp)));
    }
    emit(out);
    return 0;
}

int cmd_lift(const std::string& file, const std::string& morph_file) {
    CharacteristicPair p = load_pair(file);
    MorphismSpec spec = parse_morphism_file(morph_file);
    if (std::holds_alternative<MorphBend>(spec))
        throw DegenerateTargetError("bend targets are degenerate; no lifting is defined");
    if (const auto* r = std::get_if<MorphRescale>(&spec)) {
        emit(Json{{"lifting", int_matrix_to_json(rescale(p, r->i).lifting.psi_tilde)}});
        return 0;
    }
    auto identity_surjection = [&] {
        std::vector<int> id(static_cast<size_t>(p.m()));
        for (int j = 1; j <= p.m(); ++j) id[static_cast<size_t>(j - 1)] = j;
        return make_surjection(id);
    };
    if (const auto* bc = std::get_if<MorphBasisChange>(&spec)) {
        TorusHom2 psi;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) psi.e[r][c] = bc->u.entry(r, c);
        CompatiblePair cp{EdgeMap{identity_surjection()}, psi, p, apply_basis_change(p, bc->u)};
        emit(lifting_result_json(solve_lifting(cp)));
        return 0;
    }
    OrderSurjection rho = std::holds_alternative<MorphContract>(spec)
                              ? make_surjection(std::get<MorphContract>(spec).rho)
                              : make_surjection(std::get<MorphCustom>(spec).rho);
    TorusHom2 psi = std::holds_alternative<MorphCustom>(spec) ? std::get<MorphCustom>(spec).psi
                                                              : TorusHom2::identity();
    CompatiblePair cp{EdgeMap{rho}, psi, p, pushforward(rho, p).target};
    emit(lifting_result_json(solve_lifting(cp)));
    return 0;
}

int cmd_fuzz(uint64_t seed, int count) {
    FuzzReport rep = run_fuzz(seed, count);
    emit(fuzz_report_to_json(rep));
    return rep.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology rings of 4-dimensional toric orbifolds"};
    app.require_subcommand(1);
    app.add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string file, morph_file;
    std::string ring = "z";
    std::string theorem = "auto";
    int index = 0;
    bool has_index = false;
    uint64_t seed = 0;
    int count = 100;

    auto* validate = app.add_subcommand("validate", "check the characteristic-pair conditions");
    validate->add_option("file", file)->required();

    auto* groups = app.add_subcommand("groups", "cohomology groups by degree");
    groups->add_option("file", file)->required();
    groups->add_option("--ring", ring, "z | q | zmod:<m>")->capture_default_str();

    auto* cup = app.add_subcommand("cup", "cup-product matrix or coefficient");
    cup->add_option("file", file)->required();
    cup->add_option("--ring", ring, "z | q | zmod:<m>")->capture_default_str();
    cup->add_option("--theorem", theorem, "auto | smooth | triangle | pid")
        ->check(CLI::IsMember({"auto", "smooth", "triangle", "pid"}))
        ->capture_default_str();
    auto* cup_idx = cup->add_option("--index", index, "normalization edge index");

    auto* oracle = app.add_subcommand("oracle", "rational face-ring cross-checks");
    oracle->add_option("file", file)->required();
    auto* oracle_idx = oracle->add_option("--index", index, "normalization edge index");

    auto* normalize = app.add_subcommand("normalize", "smooth or half normal form");
    normalize->add_option("file", file)->required();
    auto* norm_idx = normalize->add_option("--index", index, "normalization edge index");

    auto* morph = app.add_subcommand("morph", "apply a morphism description");
    morph->add_option("file", file)->required();
    morph->add_option("--morph", morph_file, "morphism JSON file")->required();

    auto* lift = app.add_subcommand("lift", "solve the integral lifting");
    lift->add_option("file", file)->required();
    lift->add_option("--morph", morph_file, "morphism JSON file")->required();

    auto* fuzz = app.add_subcommand("fuzz", "seeded property sweep");
    fuzz->add_option("--seed", seed)->capture_default_str();
    fuzz->add_option("--count", count)->capture_default_str();

    // allow the global --format after a subcommand
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    has_index = (cup_idx->count() > 0) || (oracle_idx->count() > 0) || (norm_idx->count() > 0);
    std::optional<int> idx = has_index ? std::optional<int>(index) : std::nullopt;

    try {
        if (validate->parsed()) return cmd_validate(file);
        if (groups->parsed()) return cmd_groups(file, ring);
        if (cup->parsed()) return cmd_cup(file, ring, theorem, idx);
        if (oracle->parsed()) return cmd_oracle(file, idx);
        if (normalize->parsed()) return cmd_normalize(file, idx);
        if (morph->parsed()) return cmd_morph(file, morph_file);
        if (lift->parsed()) return cmd_lift(file, morph_file);
        if (fuzz->parsed()) return cmd_fuzz(seed, count);
    } catch (const ValidationFailure& vf) {
        emit(Json{{"valid", false}, {"violations", violations_to_json(vf.violations)}});
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
