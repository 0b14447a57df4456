#include "qh/complexity.hpp"
#include "qh/fci_analysis.hpp"
#include "qh/rings.hpp"
#include "qh/serialize.hpp"
#include "qh/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace qh;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string format = "json";
    std::string out;
    int kmax = -1;
    double eps = -1;
    double tol = 1e-9;
};

// a report carries its JSON form and, optionally, text and CSV renderings
struct Report {
    Json json;
    std::string text;
    std::string csv;
    bool ok = true;
};

FrobeniusRing ring_arg(const std::string& id)
{
    RingSpec spec;
    try {
        spec = parse_ring_spec(id);
        return build_ring(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

ProjState state_arg(const FrobeniusRing& r, const std::string& s)
{
    try {
        return parse_state(r, s);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad state '") + s + "': " + e.what());
    }
}

int kmax_for(const Options& o, const FrobeniusRing& r) { return o.kmax > 0 ? o.kmax : 10 * static_cast<int>(r.dim()); }

std::string state_text(const FrobeniusRing& r, const ProjState& s)
{
    std::string out;
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const Rational& c = s.coords()[i];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        Rational a = abs(c);
        if (a != 1) out += to_string(a) + "*";
        out += r.labels[i];
    }
    return "[" + out + "]";
}

Report cmd_ring(const std::string& id)
{
    FrobeniusRing r = ring_arg(id);
    Report rep;
    rep.json = ring_to_json(r);
    std::ostringstream t;
    t << r.name << "  dim " << r.dim() << "  tau " << r.tau << "\n";
    for (std::size_t i = 0; i < r.dim(); ++i) t << "  " << r.labels[i] << "  deg " << r.degrees[i] << "\n";
    t << "pairing:\n";
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j)
            if (!r.g(i, j).is_zero()) t << "  <" << r.labels[i] << ", " << r.labels[j] << "> = " << r.g(i, j).str() << "\n";
    rep.text = t.str();
    return rep;
}

Report cmd_delta(const std::string& id)
{
    FrobeniusRing r = ring_arg(id);
    HandleReport h = handle_report(r);
    Report rep;
    rep.json = handle_to_json(r, h);
    bool agree = h.formulas_agree;
    std::ostringstream t;
    t << "Delta = " << r.format(h.delta) << "\n";
    RingSpec spec = parse_ring_spec(id);
    if (spec.kind == "gr" && spec.args[0] >= 2 && spec.args[1] - spec.args[0] >= 2) {
        RingElement c = delta_closed_form(spec.args[0], spec.args[1]);
        rep.json["closed_form"] = element_to_json(r, c);
        agree = agree && c == h.delta;
        t << "closed form agrees: " << (c == h.delta ? "yes" : "no") << "\n";
        if (spec.args[0] == 2) {
            RingElement g = delta_gr2_corollary(spec.args[1]);
            rep.json["corollary"] = element_to_json(r, g);
            agree = agree && g == h.delta;
            t << "two-row corollary agrees: " << (g == h.delta ? "yes" : "no") << "\n";
        }
    }
    if (h.pairing_sum && h.dual_basis_sum) t << "pairing sum and dual-basis sum agree: " << (h.formulas_agree ? "yes" : "no") << "\n";
    if (h.installed) t << "installed closed form used (pairing depends on q)\n";
    rep.json["formulas_agree"] = agree;
    rep.text = t.str();
    return rep;
}

Report cmd_powers(const std::string& id, int k)
{
    if (k < 0) throw UsageError("--k must be non-negative");
    FrobeniusRing r = ring_arg(id);
    RingElement d = handle_element(r);
    Report rep;
    rep.json["ring"] = r.name;
    Json arr = Json::array();
    std::ostringstream t;
    RingElement x = r.unit();
    for (int j = 0; j <= k; ++j) {
        arr.push_back({{"k", j}, {"element", element_to_json(r, x)}});
        t << "Delta^" << j << " = " << r.format(x) << "\n";
        if (j < k) x = product(r, x, d);
    }
    rep.json["powers"] = arr;
    rep.text = t.str();
    return rep;
}

Report cmd_complexity(const std::string& id, const std::string& from, const std::string& to, const Options& o)
{
    FrobeniusRing r = ring_arg(id);
    ProjState s0 = state_arg(r, from), s = state_arg(r, to);
    const int kmax = kmax_for(o, r);
    Report rep;
    auto k = exact_complexity(r, s0, s, kmax);
    rep.json = {{"ring", r.name}, {"from", state_to_json(r, s0)}, {"to", state_to_json(r, s)}, {"kmax", kmax}};
    rep.json["exact_complexity"] = k ? Json(*k) : Json("NOT_FOUND");
    std::ostringstream t;
    t << "exact complexity: " << (k ? std::to_string(*k) : "NOT_FOUND") << " (kmax " << kmax << ")\n";
    if (o.eps > 0) {
        auto a = approx_complexity(r, s0, s, o.eps, kmax);
        rep.json["eps"] = o.eps;
        rep.json["approx_complexity"] = a ? Json(*a) : Json("NOT_FOUND");
        t << "approximate complexity (eps " << o.eps << "): " << (a ? std::to_string(*a) : "NOT_FOUND") << "\n";
    }
    rep.text = t.str();
    return rep;
}

Report cmd_orbit(const std::string& id, const std::string& from, const Options& o)
{
    FrobeniusRing r = ring_arg(id);
    ProjState s0 = state_arg(r, from);
    Trajectory tr = trajectory(r, s0, kmax_for(o, r));
    FiniteStates fs = finite_state_set(r, s0, kmax_for(o, r));
    Report rep;
    rep.json = trajectory_to_json(r, tr);
    Json f = Json::array();
    for (const auto& s : fs.states) f.push_back(state_to_json(r, s));
    rep.json["finite_states"] = fs.closed ? f : Json(nullptr);
    rep.json["distinct_states_seen"] = fs.states.size();
    std::ostringstream t, c;
    c << "k";
    for (const auto& l : r.labels) c << "," << '"' << l << '"';
    c << "\n";
    for (std::size_t k = 0; k < tr.states.size(); ++k) {
        t << k << "  " << state_text(r, tr.states[k]) << "\n";
        c << k;
        for (const auto& x : tr.states[k].coords()) c << "," << to_string(x);
        c << "\n";
    }
    if (tr.cycle_length) t << "cycle: start " << tr.cycle_start << ", length " << tr.cycle_length << "\n";
    if (tr.zero_at >= 0) t << "reaches zero at k = " << tr.zero_at << "\n";
    t << (fs.closed ? "closed orbit, " : "open orbit, ") << fs.states.size() << " distinct states\n";
    rep.text = t.str();
    rep.csv = c.str();
    return rep;
}

Report cmd_sinfty(const std::string& id, const std::string& from, const Options& o)
{
    FrobeniusRing r = ring_arg(id);
    ProjState s0 = state_arg(r, from);
    SInfinityOptions so;
    so.kmax = o.kmax;
    so.tol = o.tol;
    LimitReport l = s_infinity(r, s0, so);
    Report rep;
    rep.json = limit_to_json(r, l);
    std::ostringstream t;
    t << "method " << l.method << ", confidence " << l.confidence << ", " << l.size() << " limit point(s)\n";
    for (const auto& p : l.exact_points) t << "  " << state_text(r, p) << "\n";
    for (const auto& p : l.approx_points) {
        t << "  ~(";
        for (std::size_t i = 0; i < p.size(); ++i) t << (i ? ", " : "") << p[i];
        t << ")\n";
    }
    if (!l.excluded.empty()) t << "excluded " << l.excluded.size() << " finite-complexity state(s)\n";
    if (l.witness_distance >= 0) t << "witness distance " << l.witness_distance << "\n";
    rep.text = t.str();
    return rep;
}

Report cmd_dimf(const std::string& id)
{
    FrobeniusRing r = ring_arg(id);
    RingSpec spec = parse_ring_spec(id);
    FSpan f = f_span_dim(r);
    std::optional<long> closed;
    if (spec.kind == "pn") closed = spec.args[0] + 1;
    else if (spec.kind == "quadric") closed = 2;
    else if (spec.kind == "gr" && spec.args[0] == 2) closed = (spec.args[1] / std::gcd(4, spec.args[1])) * (spec.args[1] / 2);
    else if (spec.kind == "gr" && spec.args[0] == 1) closed = spec.args[1];
    else if (spec.kind == "fci") closed = fci_report(fci_model(spec.args, spec.r)).predicted_dim_f;
    long bound = dim_bound(r);
    Report rep;
    rep.json = {{"ring", r.name},
                {"dim_h", r.dim()},
                {"dim_f_computed", f.dim},
                {"dim_f_closed_form", closed ? Json(*closed) : Json(nullptr)},
                {"bound", bound},
                {"d_x", d_x(r)},
                {"containment", f.containment}};
    std::ostringstream t;
    t << r.name << ": dim F = " << f.dim << ", closed form " << (closed ? std::to_string(*closed) : "n/a") << ", bound "
      << bound << ", dim H = " << r.dim() << "\n";
    rep.text = t.str();
    rep.csv = "ring,dimH,dimF,closed,bound\n" + r.name + "," + std::to_string(r.dim()) + "," + std::to_string(f.dim) +
              "," + (closed ? std::to_string(*closed) : "") + "," + std::to_string(bound) + "\n";
    return rep;
}

Report cmd_amatrix(const std::string& id)
{
    FrobeniusRing r = ring_arg(id);
    if (!r.point_index) throw std::runtime_error("ring has no point class");
    ThetaOrder th = theta_order(r);
    RingElement d = handle_element(r);
    RatMatrix a = mult_matrix(r, product(r, d, pt_inverse(r)), Rational(1));
    bool nonneg = true;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) < 0) nonneg = false;
    Report rep;
    rep.json = {{"ring", r.name}, {"labels", r.labels}, {"a", to_json(a)}, {"symmetric", a.is_symmetric()},
                {"nonnegative", nonneg}, {"theta", th.theta}, {"n_x", th.n_x}, {"theta_constant", to_string(th.c)}};
    std::ostringstream t;
    t << r.name << ": theta " << th.theta << ", symmetric " << (a.is_symmetric() ? "yes" : "no") << ", entries >= 0 "
      << (nonneg ? "yes" : "no");
    if (a.is_symmetric()) {
        PdCertificate pd = is_positive_definite(a);
        Json minors = Json::array();
        for (const auto& m : pd.minors) minors.push_back(to_string(m));
        rep.json["positive_definite"] = pd.positive;
        rep.json["leading_minors"] = minors;
        t << ", positive definite " << (pd.positive ? "yes" : "no");
    } else {
        rep.json["positive_definite"] = nullptr;
    }
    t << "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) t << (j ? " " : "  ") << to_string(a(i, j));
        t << "\n";
    }
    rep.text = t.str();
    return rep;
}

Report cmd_estimate(int k, int n, bool table)
{
    Report rep;
    if (table) {
        const std::vector<std::pair<int, int>> rows = {{2, 4}, {2, 5}, {2, 6}, {2, 7}, {2, 8},
                                                       {3, 6}, {3, 7}, {3, 8}, {3, 9}, {4, 8}};
        Json arr = Json::array();
        std::ostringstream c, t;
        c << "ring,dimH,Est,dimF-computed\n";
        for (auto [kk, nn] : rows) {
            FrobeniusRing r = grassmannian(kk, nn);
            Integer e = est_bound(kk, nn);
            std::size_t f = f_span_dim(r).dim;
            std::string name = "Gr(" + std::to_string(kk) + "," + std::to_string(nn) + ")";
            arr.push_back({{"ring", name}, {"dim_h", r.dim()}, {"est", e.get_str()}, {"dim_f_computed", f}});
            c << "\"" << name << "\"," << r.dim() << "," << e << "," << f << "\n";
            t << name << "  dim H " << r.dim() << "  Est " << e << "  dim F " << f << "\n";
        }
        rep.json["table"] = arr;
        rep.csv = c.str();
        rep.text = t.str();
        return rep;
    }
    if (k < 1 || k >= n) throw UsageError("estimate needs 1 <= k < n");
    Integer e = est_bound(k, n);
    rep.json = {{"k", k}, {"n", n}, {"est", e.get_str()}};
    rep.text = e.get_str() + "\n";
    rep.csv = "k,n,Est\n" + std::to_string(k) + "," + std::to_string(n) + "," + e.get_str() + "\n";
    return rep;
}

Report cmd_verify(int only)
{
    std::vector<CriterionResult> res;
    if (only) {
        if (only < 1 || only > 8) throw UsageError("--criterion must be in 1..8");
        res.push_back(verify_criterion(only));
    } else {
        res = verify_all();
    }
    Report rep;
    rep.json = verify_to_json(res);
    std::ostringstream t, c;
    c << "criterion,title,result\n";
    for (const auto& r : res) {
        t << (r.pass ? "PASS" : "FAIL") << "  " << r.id << "  " << r.title << "\n";
        for (const auto& l : r.checks) t << "      " << l << "\n";
        for (const auto& l : r.notes) t << "      note: " << l << "\n";
        c << r.id << ",\"" << r.title << "\"," << (r.pass ? "PASS" : "FAIL") << "\n";
        rep.ok = rep.ok && r.pass;
    }
    rep.text = t.str();
    rep.csv = c.str();
    return rep;
}

void emit(const Report& rep, const Options& o)
{
    std::string body;
    if (o.format == "json") body = rep.json.dump(2) + "\n";
    else if (o.format == "text") body = rep.text.empty() ? rep.json.dump(2) + "\n" : rep.text;
    else if (rep.csv.empty()) throw UsageError("csv output is not available for this subcommand");
    else body = rep.csv;
    if (o.out.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.out);
        if (!f) throw std::runtime_error("cannot write " + o.out);
        f << body;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Complexity analysis for quantum cohomology Frobenius algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", o.out, "write the report to a file");
    app.add_option("--kmax", o.kmax, "trajectory length (default 10 * dim)")->check(CLI::PositiveNumber);
    app.add_option("--eps", o.eps, "tolerance for approximate complexity")->check(CLI::PositiveNumber);
    app.add_option("--tol", o.tol, "float coincidence tolerance for limit points")->check(CLI::PositiveNumber);

    std::string ring, from = "unit", to;
    int k = 1, kk = 0, nn = 0, criterion = 0;
    bool table = false;
    auto add_ring = [&](CLI::App* s) { s->add_option("ring", ring, "pn:<n> | quadric:<r> | gr:<k>,<n> | fci:<m,...>;r=<r>")->required(); };

    auto* s_ring = app.add_subcommand("ring", "basis, degrees, tau and pairing");
    add_ring(s_ring);
    auto* s_delta = app.add_subcommand("delta", "handle element with every available formula");
    add_ring(s_delta);
    auto* s_pow = app.add_subcommand("powers", "quantum powers of the handle element");
    add_ring(s_pow);
    s_pow->add_option("--k", k, "highest power")->required();
    auto* s_cx = app.add_subcommand("complexity", "exact (and with --eps approximate) complexity");
    add_ring(s_cx);
    s_cx->add_option("--from", from, "reference state");
    s_cx->add_option("--to", to, "target state")->required();
    auto* s_orbit = app.add_subcommand("orbit", "trajectory and finite-complexity states");
    add_ring(s_orbit);
    s_orbit->add_option("--from", from, "reference state");
    auto* s_sinf = app.add_subcommand("sinfty", "limit states of infinite complexity");
    add_ring(s_sinf);
    s_sinf->add_option("--from", from, "reference state");
    auto* s_dimf = app.add_subcommand("dimf", "dimension of the span of handle powers");
    add_ring(s_dimf);
    auto* s_a = app.add_subcommand("amatrix", "A = Delta * [pt]^-1 at q = 1 with certificates");
    add_ring(s_a);
    auto* s_est = app.add_subcommand("estimate", "dimension bound for Gr(k,n)");
    s_est->add_option("k", kk, "k");
    s_est->add_option("n", nn, "n");
    s_est->add_flag("--table", table, "reproduce the comparison table");
    auto* s_ver = app.add_subcommand("verify", "run the acceptance suite");
    s_ver->add_option("--criterion", criterion, "run a single criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Report rep;
        if (*s_ring) rep = cmd_ring(ring);
        else if (*s_delta) rep = cmd_delta(ring);
        else if (*s_pow) rep = cmd_powers(ring, k);
        else if (*s_cx) rep = cmd_complexity(ring, from, to, o);
        else if (*s_orbit) rep = cmd_orbit(ring, from, o);
        else if (*s_sinf) rep = cmd_sinfty(ring, from, o);
        else if (*s_dimf) rep = cmd_dimf(ring);
        else if (*s_a) rep = cmd_amatrix(ring);
        else if (*s_est) {
            if (!table && (kk == 0 || nn == 0)) throw UsageError("estimate needs k and n, or --table");
            rep = cmd_estimate(kk, nn, table);
        } else if (*s_ver) rep = cmd_verify(criterion);
        emit(rep, o);
        return rep.ok ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Json err = {{"error", {{"type", dynamic_cast<const RingError*>(&e) ? "ring" : "computation"}, {"message", e.what()}}}};
        std::cout << err.dump(2) << "\n";
        return 1;
    }
}
