#include "toric4/io.hpp"

#include <fstream>
#include <sstream>

namespace toric4 {

namespace {

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    Json doc;
    try {
        in >> doc;
    } catch (const std::exception& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

Int get_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw IoError(std::string(what) + " must be an integer");
    return j.get<Int>();
}

}  // namespace

std::vector<IntVec2> parse_edges(const Json& doc) {
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        throw IoError("expected an object with an \"edges\" array");
    std::vector<IntVec2> out;
    for (const auto& e : doc["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw IoError("each edge must be a two-element integer array");
        out.push_back({get_int(e[0], "edge entry"), get_int(e[1], "edge entry")});
    }
    return out;
}

std::vector<IntVec2> parse_edges_file(const std::string& path) {
    return parse_edges(load_json(path));
}

Json edges_to_json(const DegenerateCharacteristicPair& p) {
    Json edges = Json::array();
    for (int i = 1; i <= p.m(); ++i) edges.push_back({p.vec(i).a, p.vec(i).b});
    return Json{{"edges", edges}};
}

namespace {

std::vector<int> parse_rho(const Json& j) {
    if (!j.is_array() || j.size() < 3) throw IoError("\"rho\" must be an array of target indices");
    std::vector<int> rho;
    for (const auto& v : j) rho.push_back(static_cast<int>(get_int(v, "rho entry")));
    return rho;
}

TorusHom2 parse_torus(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 ||
        !j[1].is_array() || j[1].size() != 2)
        throw IoError("torus matrix must be a 2x2 integer array");
    TorusHom2 t;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) t.e[r][c] = get_int(j[r][c], "torus matrix entry");
    return t;
}

}  // namespace

MorphismSpec parse_morphism(const Json& doc) {
    if (!doc.is_object() || !doc.contains("type")) throw IoError("morphism needs a \"type\" key");
    std::string type = doc["type"].get<std::string>();
    if (type == "contract") {
        if (!doc.contains("rho")) throw IoError("contract morphism needs \"rho\"");
        return MorphContract{parse_rho(doc["rho"])};
    }
    if (type == "bend") {
        if (!doc.contains("i")) throw IoError("bend morphism needs \"i\"");
        return MorphBend{static_cast<int>(get_int(doc["i"], "bend index"))};
    }
    if (type == "rescale") {
        if (!doc.contains("i")) throw IoError("rescale morphism needs \"i\"");
        return MorphRescale{static_cast<int>(get_int(doc["i"], "rescale index"))};
    }
    if (type == "basis_change") {
        if (!doc.contains("U")) throw IoError("basis_change morphism needs \"U\"");
        TorusHom2 t = parse_torus(doc["U"]);
        try {
            return MorphBasisChange{UnimodularMatrix2(t.e[0][0], t.e[0][1], t.e[1][0], t.e[1][1])};
        } catch (const Error&) {
            throw IoError("\"U\" must have determinant +1 or -1");
        }
    }
    if (type == "custom") {
        if (!doc.contains("rho") || !doc.contains("psi"))
            throw IoError("custom morphism needs \"rho\" and \"psi\"");
        return MorphCustom{parse_rho(doc["rho"]), parse_torus(doc["psi"])};
    }
    throw IoError("unknown morphism type \"" + type + "\"");
}

MorphismSpec parse_morphism_file(const std::string& path) {
    return parse_morphism(load_json(path));
}

Json violations_to_json(const std::vector<Violation>& vs) {
    Json arr = Json::array();
    for (const auto& v : vs) {
        switch (v.kind) {
            case ViolationKind::TooFewEdges:
                arr.push_back({{"kind", "too_few_edges"}, {"m", v.i}});
                break;
            case ViolationKind::NonPrimitive:
                arr.push_back({{"kind", "non_primitive"}, {"edge", v.i}});
                break;
            case ViolationKind::AdjacentDependent:
                arr.push_back({{"kind", "adjacent_dependent"}, {"edges", {v.i, v.j}}});
                break;
        }
    }
    return arr;
}

Json groups_to_json(const CohomologyGroups& g, const RingSpec& ring) {
    Json degrees = Json::array();
    for (int d = 0; d <= 4; ++d) {
        const GroupSummand& s = g.degree[static_cast<size_t>(d)];
        degrees.push_back({{"free_rank", s.free_rank}, {"torsion", s.torsion}});
    }
    return Json{{"ring", ring.str()}, {"degrees", degrees}};
}

Json qmatrix_to_json(const QMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

Json cup_matrix_to_json(const CupMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.n; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.n; ++j) {
            const RingElem& e = m.at(i, j);
            if (m.ring.kind == RingSpec::Kind::Rationals)
                row.push_back(e.rat_value().str());
            else
                row.push_back(e.int_value());
        }
        rows.push_back(row);
    }
    Json out{{"entries", rows}, {"sign_freedom", m.sign_freedom}};
    switch (m.tag) {
        case BasisTag::Smooth: out["basis"] = "smooth"; break;
        case BasisTag::Triangle: out["basis"] = "triangle"; break;
        case BasisTag::Pid: out["basis"] = "pid"; break;
    }
    if (m.ring.kind == RingSpec::Kind::IntegersMod) out["mod"] = m.ring.modulus;
    return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

Json fuzz_report_to_json(const FuzzReport& r) {
    Json props = Json::array();
    for (const auto& p : r.properties) {
        Json o{{"name", p.name}, {"instances", p.instances}, {"failures", p.failures}};
        if (!p.first_counterexample.empty()) o["first_counterexample"] = p.first_counterexample;
        props.push_back(o);
    }
    return Json{{"seed", r.seed}, {"count", r.count}, {"all_passed", r.all_passed()},
                {"properties", props}};
}

namespace {

void render_value(const Json& v, const std::string& prefix, std::ostringstream& os) {
    if (v.is_object()) {
        for (auto it = v.begin(); it != v.end(); ++it)
            render_value(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
        return;
    }
    if (v.is_array()) {
        bool scalars = true;
        for (const auto& e : v)
            if (e.is_object() || (e.is_array() && !e.empty() && e[0].is_array())) scalars = false;
        if (scalars) {
            os << prefix << ": " << v.dump() << "\n";
            return;
        }
        int idx = 0;
        for (const auto& e : v) render_value(e, prefix + "[" + std::to_string(idx++) + "]", os);
        return;
    }
    os << prefix << ": " << v.dump() << "\n";
}

}  // namespace

std::string render_text(const Json& doc) {
    std::ostringstream os;
    render_value(doc, "", os);
    return os.str();
}

}  // namespace toric4
