#include "qh/frobenius.hpp"
#include "qh/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qh {

RingElement RingElement::basis(std::size_t dim, std::size_t i, const QLaurent& c)
{
    RingElement x(dim);
    x.c_.at(i) = c;
    return x;
}

RingElement RingElement::from_vector(const RatVector& v)
{
    RingElement x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) x.c_[i] = QLaurent(v[i]);
    return x;
}

bool RingElement::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const QLaurent& c) { return c.is_zero(); });
}

std::vector<std::size_t> RingElement::support() const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) s.push_back(i);
    return s;
}

RingElement& RingElement::operator+=(const RingElement& x)
{
    if (x.dim() != dim()) throw RingError("ring elements of different dimension");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += x.c_[i];
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& x)
{
    if (x.dim() != dim()) throw RingError("ring elements of different dimension");
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= x.c_[i];
    return *this;
}

RingElement& RingElement::operator*=(const QLaurent& c)
{
    for (auto& x : c_) x = x * c;
    return *this;
}

RatVector RingElement::at_q(const Rational& q) const
{
    RatVector v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i].eval(q);
    return v;
}

bool RingElement::has_negative_exponent() const
{
    for (const auto& c : c_)
        if (!c.is_zero() && c.min_exp() < 0) return true;
    return false;
}

int FrobeniusRing::top_degree() const { return *std::max_element(degrees.begin(), degrees.end()); }

std::size_t FrobeniusRing::index_of(const std::string& label) const
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) throw RingError("unknown label '" + label + "' in " + name);
    return static_cast<std::size_t>(it - labels.begin());
}

RingElement FrobeniusRing::point() const
{
    if (!point_index) throw RingError(name + " has no designated point class");
    return basis(*point_index);
}

std::string FrobeniusRing::format(const RingElement& x) const
{
    std::string out;
    for (std::size_t i = 0; i < x.dim(); ++i) {
        const QLaurent& c = x[i];
        if (c.is_zero()) continue;
        std::string cs = c.str();
        bool single = c.size() == 1;
        bool neg = single && c.terms()[0].second < 0;
        if (!out.empty()) out += neg ? " - " : " + ";
        else if (neg) out += "-";
        if (single) {
            QLaurent a = neg ? -c : c;
            std::string as = a.str();
            out += (as == "1" ? "" : as + "*") + labels[i];
        } else {
            out += "(" + cs + ")*" + labels[i];
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

void accumulate(RingElement& out, const StructureEntry& e, const QLaurent& c)
{
    for (const auto& t : e) out[t.index] += t.coeff * c;
}

RingElement basis_product(const FrobeniusRing& r, std::size_t i, std::size_t j)
{
    RingElement x(r.dim());
    accumulate(x, r.entry(i, j), QLaurent(1));
    return x;
}

// (e_i * e_j) * e_k
RingElement triple(const FrobeniusRing& r, std::size_t i, std::size_t j, std::size_t k)
{
    RingElement x(r.dim());
    for (const auto& t : r.entry(i, j)) accumulate(x, r.entry(t.index, k), t.coeff);
    return x;
}

QLaurent pair(const FrobeniusRing& r, const RingElement& x, std::size_t k)
{
    QLaurent s;
    for (std::size_t w = 0; w < r.dim(); ++w)
        if (!x[w].is_zero() && !r.g(w, k).is_zero()) s += x[w] * r.g(w, k);
    return s;
}

std::string triple_name(const FrobeniusRing& r, std::size_t i, std::size_t j, std::size_t k)
{
    return "(" + r.labels[i] + ", " + r.labels[j] + ", " + r.labels[k] + ")";
}

}  // namespace

void validate(const FrobeniusRing& r)
{
    const std::size_t n = r.dim();
    if (n == 0) throw RingError("empty basis");
    if (r.degrees.size() != n || r.pairing.size() != n * n || r.structure.size() != n * n)
        throw RingError(r.name + ": inconsistent table sizes");
    if (r.tau <= 0) throw RingError(r.name + ": tau must be positive");
    if (r.unit_index >= n) throw RingError(r.name + ": unit index out of range");
    const int top = r.top_degree();

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (r.g(i, j) != r.g(j, i))
                throw RingError(r.name + ": pairing not symmetric at (" + r.labels[i] + ", " + r.labels[j] + ")");
            for (const auto& [d, c] : r.g(i, j).terms())
                if (r.degrees[i] + r.degrees[j] != top + d * r.tau)
                    throw RingError(r.name + ": pairing violates grading at (" + r.labels[i] + ", " + r.labels[j] + ")");
        }
    // invertibility: the pairing is invertible over Q(q) if it is at some generic q;
    // two specialisations guard against an unlucky choice
    {
        bool ok = false;
        for (Rational q : {Rational(1), frac(7, 3)}) {
            RatMatrix m(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i, j) = r.g(i, j).eval(q);
            if (determinant(m) != 0) {
                ok = true;
                break;
            }
        }
        if (!ok) throw RingError(r.name + ": pairing is singular");
    }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& e = r.entry(i, j);
            for (const auto& t : e) {
                if (t.index >= n) throw RingError(r.name + ": structure index out of range");
                for (const auto& [d, c] : t.coeff.terms())
                    if (r.degrees[t.index] + d * r.tau != r.degrees[i] + r.degrees[j])
                        throw RingError(r.name + ": grading fails at " + triple_name(r, i, j, t.index));
            }
            if (basis_product(r, i, j) != basis_product(r, j, i))
                throw RingError(r.name + ": commutativity fails at (" + r.labels[i] + ", " + r.labels[j] + ")");
        }

    for (std::size_t j = 0; j < n; ++j)
        if (basis_product(r, r.unit_index, j) != r.basis(j))
            throw RingError(r.name + ": unit law fails at " + r.labels[j]);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k) {
                RingElement a = triple(r, i, j, k);
                if (a != triple(r, j, k, i) || a != triple(r, i, k, j))
                    throw RingError(r.name + ": associativity fails at " + triple_name(r, i, j, k));
                QLaurent ga = pair(r, basis_product(r, i, j), k);
                if (ga != pair(r, basis_product(r, j, k), i) || ga != pair(r, basis_product(r, i, k), j))
                    throw RingError(r.name + ": Frobenius condition fails at " + triple_name(r, i, j, k));
            }
}

RingElement product(const FrobeniusRing& r, const RingElement& x, const RingElement& y)
{
    if (x.dim() != r.dim() || y.dim() != r.dim()) throw RingError("element does not belong to " + r.name);
    RingElement out(r.dim());
    auto sx = x.support(), sy = y.support();
    for (auto i : sx)
        for (auto j : sy) accumulate(out, r.entry(i, j), x[i] * y[j]);
    return out;
}

RingElement power(const FrobeniusRing& r, const RingElement& x, unsigned k)
{
    RingElement p = r.unit();
    for (unsigned i = 0; i < k; ++i) p = product(r, p, x);
    return p;
}

RatMatrix constant_pairing(const FrobeniusRing& r)
{
    RatMatrix m(r.dim(), r.dim());
    for (std::size_t i = 0; i < r.dim(); ++i)
        for (std::size_t j = 0; j < r.dim(); ++j) {
            if (!r.g(i, j).is_constant()) throw RingError(r.name + ": pairing depends on q");
            m(i, j) = r.g(i, j).constant();
        }
    return m;
}

HandleReport handle_report(const FrobeniusRing& r)
{
    HandleReport rep;
    bool constant = std::all_of(r.pairing.begin(), r.pairing.end(), [](const QLaurent& c) { return c.is_constant(); });
    if (constant) {
        RatMatrix g = constant_pairing(r);
        RatMatrix gi;
        try {
            gi = inverse(g);
        } catch (const std::domain_error&) {
            throw RingError(r.name + ": singular pairing");
        }
        const std::size_t n = r.dim();
        RingElement ps(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (gi(i, j) != 0) accumulate(ps, r.entry(i, j), QLaurent(gi(i, j)));
        RingElement ds(n);
        for (std::size_t i = 0; i < n; ++i) {
            RingElement dual(n);
            for (std::size_t j = 0; j < n; ++j) dual[j] = QLaurent(gi(i, j));
            ds += product(r, r.basis(i), dual);
        }
        rep.formulas_agree = ps == ds;
        rep.pairing_sum = ps;
        rep.dual_basis_sum = ds;
        rep.delta = ps;
    }
    if (r.installed_handle) {
        rep.installed = true;
        rep.delta = *r.installed_handle;
    } else if (!constant) {
        throw RingError(r.name + ": no handle element available (q-dependent pairing)");
    }
    return rep;
}

RingElement handle_element(const FrobeniusRing& r)
{
    auto rep = handle_report(r);
    if (!rep.formulas_agree) throw RingError(r.name + ": handle element formulas disagree");
    return rep.delta;
}

RatMatrix mult_matrix(const FrobeniusRing& r, const RingElement& x, std::optional<Rational> at_q)
{
    const std::size_t n = r.dim();
    RatMatrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        RingElement col = product(r, x, r.basis(j));
        if (!at_q && col.has_negative_exponent())
            throw RingError("mult_matrix: negative q exponent without a specialisation");
        RatVector v = col.at_q(at_q.value_or(Rational(1)));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = v[i];
    }
    return m;
}

ThetaOrder theta_order(const FrobeniusRing& r, int cap)
{
    RingElement pt = r.point();
    RingElement p = pt;
    for (int t = 1; t <= cap; ++t) {
        auto s = p.support();
        if (s.size() == 1 && s[0] == r.unit_index && p[s[0]].size() == 1) {
            const auto& [e, c] = p[s[0]].terms()[0];
            return {t, e, c};
        }
        p = product(r, p, pt);
    }
    throw RingError(r.name + ": point class has no finite order up to " + std::to_string(cap));
}

RingElement pt_inverse(const FrobeniusRing& r, int cap)
{
    ThetaOrder th = theta_order(r, cap);
    RingElement p = power(r, r.point(), static_cast<unsigned>(th.theta - 1));
    return p * QLaurent(Rational(1) / th.c, -th.n_x);
}

std::vector<std::size_t> vj_split(const FrobeniusRing& r, int j)
{
    std::vector<std::size_t> out;
    int jj = ((j % r.tau) + r.tau) % r.tau;
    for (std::size_t i = 0; i < r.dim(); ++i)
        if (((r.degrees[i] % r.tau) + r.tau) % r.tau == jj) out.push_back(i);
    return out;
}

int d_x(const FrobeniusRing& r) { return std::gcd(r.tau, r.top_degree()); }

long dim_bound(const FrobeniusRing& r)
{
    return static_cast<long>(r.tau / d_x(r)) * static_cast<long>(vj_split(r, 0).size());
}

FSpan f_span_dim(const FrobeniusRing& r)
{
    FSpan out;
    RingElement delta = handle_element(r);
    if (delta.has_negative_exponent()) throw RingError("f_span_dim: handle element has negative q exponents");
    RatMatrix m = mult_matrix(r, delta, Rational(1));
    out.dim = krylov_rank(m, r.unit().at_q(1), r.dim());
    for (std::size_t k = 0; k < out.dim; ++k) out.basis_powers.push_back(static_cast<int>(k));

    const int dx = d_x(r);
    RingElement p = r.unit();
    for (std::size_t k = 0; k <= r.dim(); ++k) {
        for (auto i : p.support())
            if (r.degrees[i] % dx != 0) {
                out.containment = false;
                out.containment_failure = static_cast<int>(k);
                return out;
            }
        p = product(r, p, delta);
    }
    return out;
}

}  // namespace qh
