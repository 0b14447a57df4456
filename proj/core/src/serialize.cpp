#include "qh/serialize.hpp"

#include <stdexcept>

namespace qh {

Json to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw std::invalid_argument("expected a rational as string or integer");
}

Json to_json(const QLaurent& x)
{
    Json j = Json::object();
    for (const auto& [e, c] : x.terms()) j[std::to_string(e)] = to_string(c);
    return j;
}

QLaurent laurent_from_json(const Json& j)
{
    QLaurent x;
    if (!j.is_object()) return QLaurent(rational_from_json(j));
    for (const auto& [k, v] : j.items()) x.add_term(std::stoi(k), rational_from_json(v));
    return x;
}

Json to_json(const RatVector& v)
{
    Json j = Json::array();
    for (const auto& x : v) j.push_back(to_string(x));
    return j;
}

Json to_json(const RatMatrix& m)
{
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) j.push_back(to_json(m.row(i)));
    return j;
}

RatMatrix matrix_from_json(const Json& j)
{
    const std::size_t rows = j.size(), cols = rows ? j[0].size() : 0;
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (j[i].size() != cols) throw std::invalid_argument("ragged matrix");
        for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
    }
    return m;
}

Json element_to_json(const FrobeniusRing& r, const RingElement& x)
{
    Json j = Json::object();
    for (auto i : x.support()) j[r.labels[i]] = to_json(x[i]);
    return j;
}

RingElement element_from_json(const FrobeniusRing& r, const Json& j)
{
    RingElement x(r.dim());
    for (const auto& [k, v] : j.items()) x[r.index_of(k)] += laurent_from_json(v);
    return x;
}

Json state_to_json(const FrobeniusRing& r, const ProjState& s)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < s.dim(); ++i)
        if (s.coords()[i] != 0) j[r.labels[i]] = to_string(s.coords()[i]);
    return j;
}

Json ring_to_json(const FrobeniusRing& r)
{
    Json j;
    j["name"] = r.name;
    j["labels"] = r.labels;
    j["degrees"] = r.degrees;
    j["tau"] = r.tau;
    j["unit_index"] = r.unit_index;
    j["point_index"] = r.point_index ? Json(*r.point_index) : Json(nullptr);
    Json g = Json::array(), s = Json::array();
    const std::size_t n = r.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!r.g(a, b).is_zero()) g.push_back({a, b, to_json(r.g(a, b))});
            for (const auto& t : r.entry(a, b)) s.push_back({a, b, t.index, to_json(t.coeff)});
        }
    j["pairing"] = g;
    j["structure"] = s;
    j["installed_handle"] = r.installed_handle ? element_to_json(r, *r.installed_handle) : Json(nullptr);
    return j;
}

FrobeniusRing ring_from_json(const Json& j)
{
    FrobeniusRing r;
    r.name = j.at("name").get<std::string>();
    r.labels = j.at("labels").get<std::vector<std::string>>();
    r.degrees = j.at("degrees").get<std::vector<int>>();
    r.tau = j.at("tau").get<int>();
    r.unit_index = j.at("unit_index").get<std::size_t>();
    if (!j.at("point_index").is_null()) r.point_index = j.at("point_index").get<std::size_t>();
    const std::size_t n = r.labels.size();
    r.pairing.assign(n * n, QLaurent());
    r.structure.assign(n * n, StructureEntry());
    auto idx = [n](const Json& v) {
        auto i = v.get<std::size_t>();
        if (i >= n) throw std::invalid_argument("ring json: index out of range");
        return i;
    };
    for (const auto& t : j.at("pairing")) r.pairing[idx(t.at(0)) * n + idx(t.at(1))] = laurent_from_json(t.at(2));
    for (const auto& t : j.at("structure")) {
        auto& e = r.structure[idx(t.at(0)) * n + idx(t.at(1))];
        e.push_back({idx(t.at(2)), laurent_from_json(t.at(3))});
    }
    for (auto& e : r.structure)
        std::sort(e.begin(), e.end(), [](const StructureTerm& a, const StructureTerm& b) { return a.index < b.index; });
    if (j.contains("installed_handle") && !j.at("installed_handle").is_null())
        r.installed_handle = element_from_json(r, j.at("installed_handle"));
    validate(r);
    return r;
}

Json handle_to_json(const FrobeniusRing& r, const HandleReport& h)
{
    Json j;
    j["ring"] = r.name;
    j["delta"] = element_to_json(r, h.delta);
    j["delta_text"] = r.format(h.delta);
    j["installed"] = h.installed;
    j["pairing_sum"] = h.pairing_sum ? element_to_json(r, *h.pairing_sum) : Json(nullptr);
    j["dual_basis_sum"] = h.dual_basis_sum ? element_to_json(r, *h.dual_basis_sum) : Json(nullptr);
    j["formulas_agree"] = h.formulas_agree;
    return j;
}

Json trajectory_to_json(const FrobeniusRing& r, const Trajectory& t)
{
    Json j;
    j["ring"] = r.name;
    Json s = Json::array();
    for (const auto& x : t.states) s.push_back(state_to_json(r, x));
    j["states"] = s;
    j["zero_at"] = t.zero_at >= 0 ? Json(t.zero_at) : Json(nullptr);
    j["cycle_start"] = t.cycle_length ? Json(t.cycle_start) : Json(nullptr);
    j["cycle_length"] = t.cycle_length ? Json(t.cycle_length) : Json(nullptr);
    j["closed"] = t.closed();
    return j;
}

Json limit_to_json(const FrobeniusRing& r, const LimitReport& l)
{
    Json j;
    j["ring"] = r.name;
    j["method"] = l.method;
    j["confidence"] = l.confidence;
    Json pts = Json::array();
    for (const auto& p : l.exact_points) pts.push_back({{"kind", "exact"}, {"state", state_to_json(r, p)}});
    for (const auto& p : l.approx_points) {
        Json c = Json::object();
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) c[r.labels[i]] = p[i];
        pts.push_back({{"kind", "approximate"}, {"tolerance", l.tolerance}, {"state", c}});
    }
    j["limit_points"] = pts;
    j["size"] = l.size();
    if (l.lambda_exact) j["dominant_eigenvalue"] = to_string(*l.lambda_exact);
    else if (l.lambda != 0) j["dominant_eigenvalue"] = l.lambda;
    else j["dominant_eigenvalue"] = nullptr;
    j["chain_depth"] = l.depth;
    j["finite_orbit"] = l.finite_orbit;
    Json ex = Json::array();
    for (const auto& p : l.excluded) ex.push_back(state_to_json(r, p));
    j["excluded_finite_states"] = ex;
    j["witness_distance"] = l.witness_distance >= 0 ? Json(l.witness_distance) : Json(nullptr);
    return j;
}

Json fci_to_json(const FciReport& f)
{
    const auto& md = f.model;
    Json j;
    j["ring"] = f.ring.name;
    j["m"] = md.m;
    j["r"] = md.r;
    j["tau"] = md.tau;
    j["kappa"] = md.kappa;
    j["chi"] = md.chi.get_str();
    j["chi_oracle"] = f.chi_oracle.get_str();
    j["chi_override"] = md.chi_override;
    j["primitive_dim"] = md.primitive_dim.get_str();
    j["branch"] = f.branch;
    if (md.hat_basis) {
        j["zeta"] = to_string(md.zeta);
        j["alpha"] = to_string(md.alpha);
        j["beta"] = to_string(md.beta);
        j["xi"] = to_string(md.xi);
        j["omega"] = to_string(md.omega);
    }
    Json ps = Json::array(), cs = Json::array();
    for (const auto& s : f.predicted_states) ps.push_back(state_to_json(f.ring, s));
    for (const auto& s : f.computed.states) cs.push_back(state_to_json(f.ring, s));
    j["predicted_closed"] = f.predicted_closed;
    j["predicted_states"] = ps;
    j["computed_closed"] = f.computed.closed;
    j["computed_states"] = f.computed.closed ? cs : Json(nullptr);
    j["states_match"] = f.states_match();
    j["dim_f_predicted"] = f.predicted_dim_f;
    j["dim_f_computed"] = f.computed_dim_f;
    if (f.a) {
        j["a_matrix"] = to_json(*f.a);
        j["a_shape_ok"] = f.a_shape_ok();
        j["a_jordan_block_r"] = f.a_jordan;
    }
    return j;
}

ProjState parse_state(const FrobeniusRing& r, const std::string& text)
{
    if (text == "unit") return ProjState(r.unit().at_q(1));
    if (text == "delta") return ProjState(handle_element(r).at_q(1));
    if (text == "pt") {
        if (!r.point_index) throw std::invalid_argument("ring has no point class");
        return ProjState(r.point().at_q(1));
    }
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error&) {
        // a bare label such as "[2,1]" or "H^2"
        return ProjState(r.basis(r.index_of(text)).at_q(1));
    }
    RatVector v(r.dim());
    if (j.is_array()) {
        if (j.size() != r.dim()) {
            // a partition label like [2,1] also parses as an array
            return ProjState(r.basis(r.index_of(text)).at_q(1));
        }
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = rational_from_json(j[i]);
    } else if (j.is_object()) {
        for (const auto& [k, x] : j.items()) v[r.index_of(k)] += rational_from_json(x);
    } else {
        throw std::invalid_argument("state must be unit, delta, pt, a label, an array or an object");
    }
    return ProjState(v);
}

}  // namespace qh
