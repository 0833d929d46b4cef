#include "toric4/morphisms.hpp"

#include <algorithm>

namespace toric4 {

OrderSurjection OrderSurjection::make(std::vector<int> values) {
    OrderSurjection s;
    s.m = static_cast<int>(values.size());
    if (s.m < 3) throw Error("order surjection needs at least 3 source edges");
    s.m_target = values.back();
    s.values = std::move(values);
    if (s.values.front() != 1) throw Error("order surjection must start at 1");
    for (size_t i = 1; i < s.values.size(); ++i) {
        int step = s.values[i] - s.values[i - 1];
        if (step < 0 || step > 1) throw Error("order surjection must be nondecreasing and onto");
    }
    if (s.m_target < 3) throw Error("order surjection target needs at least 3 edges");
    return s;
}

int OrderSurjection::fiber_max(int k) const {
    int best = -1;
    for (int j = 1; j <= m; ++j)
        if (value(j) == k) best = j;
    if (best < 0) throw IndexOutOfRangeError("no edge maps to target index " + std::to_string(k));
    return best;
}

IntVec2 TorusHom2::apply(IntVec2 v) const {
    return {checked_add(checked_mul(e[0][0], v.a), checked_mul(e[0][1], v.b)),
            checked_add(checked_mul(e[1][0], v.a), checked_mul(e[1][1], v.b))};
}

bool TorusHom2::operator==(const TorusHom2& o) const {
    return e[0][0] == o.e[0][0] && e[0][1] == o.e[0][1] && e[1][0] == o.e[1][0] &&
           e[1][1] == o.e[1][1];
}

namespace {

// Target edges containing the image of source edge j: one edge when j maps
// onto it, the two edges at the image vertex when j is contracted.
std::vector<int> image_support(const EdgeMap& em, int j, int m_target) {
    if (const auto* rho = std::get_if<OrderSurjection>(&em)) {
        int t = rho->value(j);
        if (rho->onto_edge(j)) return {t};
        int prev = (t - 2 + m_target) % m_target + 1;
        return {prev, t};
    }
    const auto& b = std::get<BendMap>(em);
    if (j < b.i) return {j};
    if (j == b.i) return {b.i, b.i + 1};
    return {j + 1};
}

int edge_map_source_size(const EdgeMap& em) {
    if (const auto* rho = std::get_if<OrderSurjection>(&em)) return rho->m;
    return std::get<BendMap>(em).m;
}

int edge_map_target_size(const EdgeMap& em) {
    if (const auto* rho = std::get_if<OrderSurjection>(&em)) return rho->m_target;
    return std::get<BendMap>(em).m_target();
}

IntMatrix characteristic_matrix(const DegenerateCharacteristicPair& p) {
    IntMatrix l(2, p.m());
    for (int i = 1; i <= p.m(); ++i) {
        l.at(0, i - 1) = p.vec(i).a;
        l.at(1, i - 1) = p.vec(i).b;
    }
    return l;
}

IntMatrix torus_matrix(const TorusHom2& h) {
    IntMatrix m(2, 2);
    m.at(0, 0) = h.e[0][0];
    m.at(0, 1) = h.e[0][1];
    m.at(1, 0) = h.e[1][0];
    m.at(1, 1) = h.e[1][1];
    return m;
}

}  // namespace

CompatibilityReport validate_compatible(const CompatiblePair& cp) {
    if (edge_map_source_size(cp.map) != cp.source.m() ||
        edge_map_target_size(cp.map) != cp.target.m())
        throw Error("edge map sizes do not match the pairs");
    CompatibilityReport rep;
    for (int j = 1; j <= cp.source.m(); ++j) {
        IntVec2 img = cp.psi.apply(cp.source.vec(j));
        auto support = image_support(cp.map, j, cp.target.m());
        if (support.size() == 1) {
            if (det2(img, cp.target.vec(support[0])) != 0) {
                rep.ok = false;
                rep.violations.push_back(
                    {j, "psi*lambda(E_" + std::to_string(j) + ") is not on the line of E'_" +
                            std::to_string(support[0])});
            }
        } else {
            IntVec2 w1 = cp.target.vec(support[0]);
            IntVec2 w2 = cp.target.vec(support[1]);
            if (det2(w1, w2) != 0) continue;  // independent pair spans the plane
            rep.line_test_edges.push_back(j);
            if (det2(img, w1) != 0) {
                rep.ok = false;
                rep.violations.push_back(
                    {j, "parallel target edges at the image vertex; psi*lambda(E_" +
                            std::to_string(j) + ") is off their common line"});
            }
        }
    }
    return rep;
}

std::variant<Lifting, NoLifting> solve_lifting(const CompatiblePair& cp) {
    if (!std::holds_alternative<OrderSurjection>(cp.map))
        throw DegenerateTargetError("liftings are solved for edge contractions only");
    if (!check_pair(cp.target.vectors(), false).empty())
        throw DegenerateTargetError("lifting target must be a characteristic pair");
    const auto& rho = std::get<OrderSurjection>(cp.map);
    if (rho.m != cp.source.m() || rho.m_target != cp.target.m())
        throw Error("edge map sizes do not match the pairs");

    IntMatrix psi_tilde(cp.target.m(), cp.source.m());
    for (int j = 1; j <= cp.source.m(); ++j) {
        IntVec2 img = cp.psi.apply(cp.source.vec(j));
        auto support = image_support(cp.map, j, cp.target.m());
        std::vector<IntVec2> basis;
        basis.reserve(support.size());
        for (int t : support) basis.push_back(cp.target.vec(t));
        auto sol = solve_int_combination(img, basis);
        if (!sol) return NoLifting{j, "non-integral column " + std::to_string(j)};
        for (size_t s = 0; s < support.size(); ++s)
            psi_tilde.at(support[s] - 1, j - 1) = (*sol)[s];
    }

    // commuting square: Lambda' * psi_tilde == Psi * Lambda
    IntMatrix lhs = mat_mul(characteristic_matrix(cp.target), psi_tilde);
    IntMatrix rhs = mat_mul(torus_matrix(cp.psi), characteristic_matrix(cp.source));
    if (!(lhs == rhs)) throw Error("lifting verification failed");
    return Lifting{std::move(psi_tilde)};
}

PushforwardResult pushforward(const OrderSurjection& rho, const DegenerateCharacteristicPair& p) {
    if (rho.m != p.m()) throw Error("edge map size does not match the pair");
    std::vector<IntVec2> v(static_cast<size_t>(rho.m_target));
    for (int k = 1; k <= rho.m_target; ++k) v[static_cast<size_t>(k - 1)] = p.vec(rho.fiber_max(k));
    bool characteristic = check_pair(v, false).empty();
    auto res = DegenerateCharacteristicPair::validate(std::move(v));
    return {std::get<DegenerateCharacteristicPair>(res), characteristic};
}

Deg2Class SubstitutionMap::apply_deg2(const Deg2Class& target_class) const {
    if (target_class.m() != m_target) throw Error("class size does not match the map");
    Deg2Class out(m_source);
    for (int t = 1; t <= m_target; ++t) {
        const Rational& c = target_class.coeff(t);
        if (c.is_zero()) continue;
        const Deg2Class& row = deg2_image(t);
        for (int k = 1; k <= m_source; ++k) out.coeff(k) += c * row.coeff(k);
    }
    return out;
}

Deg4Class SubstitutionMap::apply_deg4(const Deg4Class& target_class) const {
    Deg4Class out;
    for (const auto& [mono, c] : target_class.terms) {
        Deg4Class prod = multiply(m_source, deg2_image(mono.first), deg2_image(mono.second));
        for (const auto& [key, val] : prod.terms) {
            auto it = out.terms.find(key);
            Rational t = c * val;
            if (it == out.terms.end())
                out.terms.emplace(key, t);
            else {
                it->second += t;
                if (it->second.is_zero()) out.terms.erase(it);
            }
        }
    }
    return out;
}

SubstitutionMap induced_substitution(const Lifting& l) {
    SubstitutionMap s;
    s.m_target = l.psi_tilde.rows;
    s.m_source = l.psi_tilde.cols;
    s.rows.reserve(static_cast<size_t>(s.m_target));
    for (int t = 0; t < s.m_target; ++t) {
        Deg2Class row(s.m_source);
        for (int k = 0; k < s.m_source; ++k) row.coeff(k + 1) = Rational(l.psi_tilde.at(t, k));
        s.rows.push_back(std::move(row));
    }
    return s;
}

RescaleResult rescale(const CharacteristicPair& p, int i) {
    if (i < 1 || i > p.m()) throw IndexOutOfRangeError("edge index out of range");
    Int ai = p.vec(i).a, bi = p.vec(i).b;
    if (checked_mul(ai, bi) == 0)
        throw ZeroProductError("a_i*b_i = 0 at index " + std::to_string(i));
    int m = p.m();
    std::vector<IntVec2> v(static_cast<size_t>(m));
    IntMatrix psi_tilde(m, m);
    for (int j = 1; j <= m; ++j) {
        if (j == i) {
            v[static_cast<size_t>(j - 1)] = {1, 1};
            psi_tilde.at(j - 1, j - 1) = checked_mul(ai, bi);
            continue;
        }
        Int x = checked_mul(p.vec(j).a, bi);
        Int y = checked_mul(ai, p.vec(j).b);
        Int g = ext_gcd(x, y).g;
        v[static_cast<size_t>(j - 1)] = {x / g, y / g};
        psi_tilde.at(j - 1, j - 1) = g;
    }
    CharacteristicPair target = make_pair_or_throw(std::move(v));
    TorusHom2 sigma = TorusHom2::diag(bi, ai);

    IntMatrix lhs = mat_mul(characteristic_matrix(target), psi_tilde);
    IntMatrix rhs = mat_mul(torus_matrix(sigma), characteristic_matrix(p));
    if (!(lhs == rhs)) throw Error("rescaling lifting verification failed");
    return {std::move(target), sigma, Lifting{std::move(psi_tilde)}};
}

ContractionResult contract_keep(const CharacteristicPair& p, int i) {
    int n = p.n();
    if (i < 1 || i > n) throw IndexOutOfRangeError("contraction index out of range");
    std::vector<int> values(static_cast<size_t>(p.m()));
    for (int j = 1; j <= p.m(); ++j) {
        int v = j <= i ? 1 : (j <= n + 1 ? 2 : 3);
        values[static_cast<size_t>(j - 1)] = v;
    }
    auto rho = OrderSurjection::make(std::move(values));
    auto push = pushforward(rho, p);
    return {std::move(rho), std::move(push)};
}

ContractionResult contract_keep2(const CharacteristicPair& p, int i, int j) {
    int n = p.n();
    if (i < 1 || j <= i || j > n) throw IndexOutOfRangeError("contraction indices out of range");
    std::vector<int> values(static_cast<size_t>(p.m()));
    for (int l = 1; l <= p.m(); ++l) {
        int v = l <= i ? 1 : (l <= j ? 2 : (l <= n + 1 ? 3 : 4));
        values[static_cast<size_t>(l - 1)] = v;
    }
    auto rho = OrderSurjection::make(std::move(values));
    auto push = pushforward(rho, p);
    return {std::move(rho), std::move(push)};
}

OrderSurjection undo_bend_surjection(int m, int i) {
    if (i < 1 || i >= m) throw IndexOutOfRangeError("fold index out of range");
    std::vector<int> values(static_cast<size_t>(m));
    for (int j = 1; j <= m; ++j) values[static_cast<size_t>(j - 1)] = j <= i ? j : j - 1;
    return OrderSurjection::make(std::move(values));
}

BendResult bend(const DegenerateCharacteristicPair& p, int i) {
    if (i < 1 || i > p.m()) throw IndexOutOfRangeError("bend index out of range");
    std::vector<IntVec2> v;
    v.reserve(static_cast<size_t>(p.m() + 1));
    for (int j = 1; j <= p.m(); ++j) {
        v.push_back(p.vec(j));
        if (j == i) v.push_back(p.vec(j));
    }
    auto res = DegenerateCharacteristicPair::validate(std::move(v));
    return {BendMap{p.m(), i}, std::get<DegenerateCharacteristicPair>(res)};
}

CellularIndexMap cellular_index_map(const EdgeMap& em) {
    CellularIndexMap out;
    if (const auto* rho = std::get_if<OrderSurjection>(&em)) {
        int n = rho->m - 2, n_target = rho->m_target - 2;
        if (rho->value(n + 1) != n_target + 1 || rho->value(n + 2) != n_target + 2)
            throw LabelingMismatchError("contraction must send positions n+1, n+2 to n'+1, n'+2");
        for (int k = 1; k <= n_target; ++k) out.u_image.push_back(rho->fiber_max(k));
        return out;
    }
    const auto& b = std::get<BendMap>(em);
    int n = b.m - 2;
    if (b.i < 1 || b.i > n)
        throw LabelingMismatchError("bend index must avoid the last two positions");
    for (int j = 1; j <= n + 1; ++j) out.u_image.push_back(j <= b.i ? j : j - 1);
    return out;
}

}  // namespace toric4
