#include "qh/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qh {

ProjState::ProjState(const RatVector& v) : c_(v)
{
    auto it = std::find_if(c_.begin(), c_.end(), [](const Rational& x) { return x != 0; });
    if (it == c_.end()) throw std::invalid_argument("projective state of the zero vector");
    Rational f = 1 / *it;
    for (auto& x : c_) x *= f;
}

std::vector<double> ProjState::to_double() const
{
    Rational big = 0;
    for (const auto& x : c_) big = std::max(big, abs(x));
    std::vector<double> d(c_.size());
    double n2 = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        d[i] = Rational(c_[i] / big).get_d();
        n2 += d[i] * d[i];
    }
    for (auto& x : d) x /= std::sqrt(n2);
    return d;
}

double chordal(const std::vector<double>& x, const std::vector<double>& y)
{
    double xy = 0, xx = 0, yy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xy += x[i] * y[i];
        xx += x[i] * x[i];
        yy += y[i] * y[i];
    }
    double c = 1 - xy * xy / (xx * yy);
    return c <= 0 ? 0.0 : std::sqrt(c);
}

double chordal(const ProjState& a, const ProjState& b) { return chordal(a.to_double(), b.to_double()); }

namespace {

using IntVector = std::vector<Integer>;

// primitive integer representative with positive first nonzero entry
void make_primitive(IntVector& v)
{
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 0) return;
    auto it = std::find_if(v.begin(), v.end(), [](const Integer& x) { return x != 0; });
    if (*it < 0) g = -g;
    if (g != 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

IntVector to_integers(const RatVector& v)
{
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    for (const auto& x : v) out.push_back(Integer(x * l));
    make_primitive(out);
    return out;
}

struct IntMatrix {
    std::size_t n = 0;
    std::vector<Integer> a;
};

IntMatrix to_integers(const RatMatrix& m)
{
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    IntMatrix out;
    out.n = m.rows();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.a.push_back(Integer(m(i, j) * l));
    return out;
}

IntVector int_apply(const IntMatrix& m, const IntVector& v)
{
    IntVector w(m.n);
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            if (v[j] != 0 && m.a[i * m.n + j] != 0) mpz_addmul(w[i].get_mpz_t(), m.a[i * m.n + j].get_mpz_t(), v[j].get_mpz_t());
    return w;
}

ProjState to_state(const IntVector& v)
{
    RatVector r;
    for (const auto& x : v) r.push_back(Rational(x));
    return ProjState(r);
}

}  // namespace

Trajectory trajectory(const RatMatrix& m, const ProjState& s0, int kmax)
{
    if (!m.square() || m.rows() != s0.dim()) throw std::invalid_argument("trajectory: shape mismatch");
    Trajectory t;
    IntMatrix mi = to_integers(m);
    IntVector v = to_integers(s0.coords());
    std::map<IntVector, int> seen;
    std::vector<IntVector> reps;
    for (int k = 0; k <= kmax; ++k) {
        if (std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; })) {
            t.zero_at = k;
            break;
        }
        auto [it, fresh] = seen.emplace(v, k);
        if (!fresh) {
            t.cycle_start = it->second;
            t.cycle_length = k - it->second;
            for (int kk = k; kk <= kmax; ++kk)
                reps.push_back(reps[t.cycle_start + (kk - t.cycle_start) % t.cycle_length]);
            break;
        }
        reps.push_back(v);
        if (k == kmax) break;
        v = int_apply(mi, v);
        make_primitive(v);
    }
    std::map<IntVector, ProjState> cache;
    for (const auto& r : reps) {
        auto it = cache.find(r);
        if (it == cache.end()) it = cache.emplace(r, to_state(r)).first;
        t.states.push_back(it->second);
    }
    return t;
}

Trajectory trajectory(const FrobeniusRing& r, const ProjState& s0, int kmax)
{
    return trajectory(mult_matrix(r, handle_element(r), Rational(1)), s0, kmax);
}

std::optional<int> exact_complexity(const FrobeniusRing& r, const ProjState& s0, const ProjState& s, int kmax)
{
    Trajectory t = trajectory(r, s0, kmax);
    for (std::size_t k = 0; k < t.states.size(); ++k)
        if (t.states[k] == s) return static_cast<int>(k);
    return std::nullopt;
}

std::optional<int> approx_complexity(const FrobeniusRing& r, const ProjState& s0, const ProjState& s, double eps, int kmax)
{
    if (!(eps > 0)) throw std::invalid_argument("approx_complexity: eps must be positive");
    Trajectory t = trajectory(r, s0, kmax);
    auto target = s.to_double();
    for (std::size_t k = 0; k < t.states.size(); ++k)
        if (chordal(t.states[k].to_double(), target) <= eps) return static_cast<int>(k);
    return std::nullopt;
}

FiniteStates finite_state_set(const FrobeniusRing& r, const ProjState& s0, int kmax)
{
    Trajectory t = trajectory(r, s0, kmax);
    FiniteStates out;
    for (const auto& s : t.states)
        if (std::find(out.states.begin(), out.states.end(), s) == out.states.end()) out.states.push_back(s);
    out.closed = t.closed();
    return out;
}

LimitReport limit_points_real(const RatMatrix& m, const RatVector& z)
{
    if (is_zero(z)) throw std::invalid_argument("limit_points_real: zero vector");
    EigenStructure es = rational_eigenstructure(m);
    if (!es.split_over_rationals) throw std::domain_error("limit_points_real: spectrum does not split over Q");
    LimitReport rep;
    rep.method = "rational-spectrum exact";
    rep.confidence = "exact";

    // coordinates of z in the union of generalized eigenspace bases
    std::vector<RatVector> cols;
    for (const auto& e : es.eigen)
        for (const auto& b : e.basis) cols.push_back(b);
    RatVector c = solve(RatMatrix::from_columns(cols), z);
    const std::size_t n = z.size();
    struct Component {
        Rational value;
        RatVector z;
        int depth;
    };
    std::vector<Component> comps;
    std::size_t pos = 0;
    for (const auto& e : es.eigen) {
        RatVector zi(n);
        for (const auto& b : e.basis) {
            for (std::size_t i = 0; i < n; ++i) zi[i] += c[pos] * b[i];
            ++pos;
        }
        if (is_zero(zi)) continue;
        int depth = 0;
        RatVector w = zi;
        RatMatrix sh = m.shifted(e.value);
        while (!is_zero(w)) {
            w = sh * w;
            ++depth;
        }
        comps.push_back({e.value, zi, depth});
    }

    Rational lam = 0;
    for (const auto& cp : comps)
        if (cp.value != 0) lam = std::max(lam, abs(cp.value));
    if (lam == 0) {
        rep.finite_orbit = true;  // nilpotent orbit reaches zero
        return rep;
    }
    int r = 0;
    for (const auto& cp : comps)
        if (abs(cp.value) == lam) r = std::max(r, cp.depth);
    rep.lambda_exact = lam;
    rep.lambda = lam.get_d();
    rep.depth = r;

    RatVector lp(n), lm(n);
    for (const auto& cp : comps) {
        if (abs(cp.value) != lam || cp.depth != r) continue;
        RatVector w = cp.z;
        RatMatrix sh = m.shifted(cp.value);
        for (int t = 0; t < r - 1; ++t) w = sh * w;
        Rational f = pow(cp.value, 1 - r);
        RatVector& dst = cp.value > 0 ? lp : lm;
        for (std::size_t i = 0; i < n; ++i) dst[i] += f * w[i];
    }
    if (is_zero(lm)) {
        rep.exact_points.emplace_back(lp);
    } else if (is_zero(lp)) {
        rep.exact_points.emplace_back(lm);
    } else {
        RatVector a(n), b(n);
        for (std::size_t i = 0; i < n; ++i) {
            a[i] = lp[i] + lm[i];
            b[i] = lp[i] - lm[i];
        }
        rep.exact_points.emplace_back(a);
        rep.exact_points.emplace_back(b);
    }
    // the orbit is eventually periodic exactly when every surviving component
    // sits on the dominant circle with depth one
    bool periodic = true;
    for (const auto& cp : comps)
        if (cp.value != 0 && (abs(cp.value) != lam || cp.depth != 1)) periodic = false;
    rep.finite_orbit = periodic;
    return rep;
}

namespace {

std::vector<double> matvec(const std::vector<std::vector<double>>& m, const std::vector<double>& v)
{
    std::vector<double> w(v.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) w[i] += m[i][j] * v[j];
    return w;
}

bool normalize(std::vector<double>& v)
{
    double s = 0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s == 0 || !std::isfinite(s)) return false;
    for (auto& x : v) x /= s;
    return true;
}

void add_distinct(std::vector<std::vector<double>>& pts, std::vector<double> v, double tol)
{
    for (const auto& p : pts)
        if (chordal(p, v) <= tol) return;
    pts.push_back(std::move(v));
}

double nearest(const std::vector<std::vector<double>>& pts, const std::vector<double>& v)
{
    double best = 2;
    for (const auto& p : pts) best = std::min(best, chordal(p, v));
    return best;
}

}  // namespace

LimitReport s_infinity(const FrobeniusRing& r, const ProjState& s0, const SInfinityOptions& opt)
{
    const int kmax = opt.kmax > 0 ? opt.kmax : 10 * static_cast<int>(r.dim());
    RingElement delta = handle_element(r);
    RatMatrix m = mult_matrix(r, delta, Rational(1));
    Trajectory traj = trajectory(m, s0, kmax);

    LimitReport rep;
    if (traj.closed()) {
        rep.method = "finite-orbit";
        rep.confidence = "exact";
        rep.finite_orbit = true;
        for (const auto& s : traj.states)
            if (std::find(rep.excluded.begin(), rep.excluded.end(), s) == rep.excluded.end()) rep.excluded.push_back(s);
        return rep;
    }

    EigenStructure es = rational_eigenstructure(m);
    if (es.split_over_rationals) {
        rep = limit_points_real(m, s0.coords());
        std::vector<ProjState> kept;
        for (const auto& p : rep.exact_points) {
            bool in_orbit = rep.finite_orbit ||
                            std::find(traj.states.begin(), traj.states.end(), p) != traj.states.end();
            (in_orbit ? rep.excluded : kept).push_back(p);
        }
        rep.exact_points = kept;
        return rep;
    }

    const auto md = m.to_double();
    const std::vector<double> z = s0.to_double();
    std::optional<ThetaOrder> th;
    RatMatrix a;
    bool theta_ok = false;
    if (r.point_index) {
        try {
            th = theta_order(r, opt.theta_cap);
            a = mult_matrix(r, product(r, delta, pt_inverse(r, opt.theta_cap)), Rational(1));
            theta_ok = th->c > 0 && a.is_symmetric() && is_positive_definite(a).positive;
        } catch (const RingError&) {
            theta_ok = false;
        }
    }

    if (theta_ok) {
        rep.method = "theta-periodic float";
        rep.confidence = "float-certified";
        rep.tolerance = opt.tol;
        SymEigen eig = sym_jacobi(a.to_double());
        // eigenvalue clusters, descending; keep the first with a nonzero component of z
        std::vector<double> xh;
        std::size_t i = 0;
        while (i < eig.values.size()) {
            std::size_t j = i + 1;
            while (j < eig.values.size() &&
                   std::fabs(eig.values[j] - eig.values[i]) <= opt.tie_tol * std::fabs(eig.values[i]))
                ++j;
            std::vector<double> proj(z.size(), 0.0);
            for (std::size_t t = i; t < j; ++t) {
                double c = 0;
                for (std::size_t s = 0; s < z.size(); ++s) c += eig.vectors[t][s] * z[s];
                for (std::size_t s = 0; s < z.size(); ++s) proj[s] += c * eig.vectors[t][s];
            }
            double pn = 0;
            for (double x : proj) pn += x * x;
            if (std::sqrt(pn) > opt.tol) {
                xh = proj;
                rep.lambda = std::pow(eig.values[i], th->theta) * th->c.get_d();
                break;
            }
            i = j;
        }
        std::vector<double> y = xh;
        for (int t = 0; t < th->theta; ++t) {
            if (!normalize(y)) break;
            add_distinct(rep.approx_points, y, opt.tol);
            y = matvec(md, y);
        }
        // numerical witness: a long float run should approach the candidates
        std::vector<double> w = z;
        for (int k = 0; k < 400 * th->theta && normalize(w); ++k) w = matvec(md, w);
        if (normalize(w)) rep.witness_distance = nearest(rep.approx_points, w);
        return rep;
    }

    rep.method = "float-fallback";
    rep.confidence = "low";
    rep.tolerance = 1e-6;
    std::vector<double> w = z;
    for (int k = 0; k < 4000 && normalize(w); ++k) w = matvec(md, w);
    for (int k = 0; k < 64 && normalize(w); ++k) {
        add_distinct(rep.approx_points, w, rep.tolerance);
        w = matvec(md, w);
    }
    return rep;
}

}  // namespace qh
