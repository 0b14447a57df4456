#include "qh/rings.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <stdexcept>

namespace qh {

namespace {

FrobeniusRing empty_ring(std::string name, std::vector<std::string> labels, std::vector<int> degrees, int tau)
{
    FrobeniusRing r;
    r.name = std::move(name);
    r.labels = std::move(labels);
    r.degrees = std::move(degrees);
    r.tau = tau;
    const std::size_t n = r.labels.size();
    r.pairing.assign(n * n, QLaurent());
    r.structure.assign(n * n, StructureEntry());
    return r;
}

StructureEntry to_entry(const RingElement& x)
{
    StructureEntry e;
    for (auto i : x.support()) e.push_back({i, x[i]});
    return e;
}

}  // namespace

FrobeniusRing projective_space(int n)
{
    if (n < 1) throw std::invalid_argument("projective_space: n >= 1 required");
    std::vector<std::string> labels;
    std::vector<int> deg;
    for (int i = 0; i <= n; ++i) {
        labels.push_back(i == 0 ? "1" : i == 1 ? "H" : "H^" + std::to_string(i));
        deg.push_back(i);
    }
    FrobeniusRing r = empty_ring("pn:" + std::to_string(n), labels, deg, n + 1);
    const std::size_t d = r.dim();
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i + j == n) r.pairing[i * d + j] = QLaurent(1);
            int s = i + j;
            if (s <= n)
                r.structure[i * d + j] = {{static_cast<std::size_t>(s), QLaurent(1)}};
            else
                r.structure[i * d + j] = {{static_cast<std::size_t>(s - n - 1), QLaurent::q(1)}};
        }
    r.unit_index = 0;
    r.point_index = static_cast<std::size_t>(n);
    validate(r);
    return r;
}

FrobeniusRing quadric(int rr)
{
    if (rr < 3) throw std::invalid_argument("quadric: r >= 3 required");
    const bool even = rr % 2 == 0;
    const int m = rr / 2;
    const int a = (rr - 1) / 2;  // sigma_i = H^i for i <= a
    std::vector<std::string> labels;
    std::vector<int> deg;
    for (int i = 0; i <= rr; ++i) {
        if (even && i == m) {
            labels.push_back("s" + std::to_string(m) + "+");
            labels.push_back("s" + std::to_string(m) + "-");
            deg.push_back(m);
            deg.push_back(m);
        } else {
            labels.push_back(i == 0 ? "1" : "s" + std::to_string(i));
            deg.push_back(i);
        }
    }
    FrobeniusRing r = empty_ring("quadric:" + std::to_string(rr), labels, deg, rr);
    const std::size_t n = r.dim();
    auto idx = [&](int i) -> std::size_t { return static_cast<std::size_t>(even && i > m ? i + 1 : i); };
    const std::size_t plus = idx(m), minus = plus + 1;

    // multiplication by H on the basis
    std::vector<RingElement> hmul(n, RingElement(n));
    for (int i = 0; i <= rr; ++i) {
        if (even && i == m) {
            hmul[plus][idx(m + 1)] = 1;
            hmul[minus][idx(m + 1)] = 1;
            continue;
        }
        RingElement& out = hmul[idx(i)];
        if (i == rr) {
            out[idx(1)] = QLaurent::q(1);
        } else if (i == rr - 1) {
            out[idx(rr)] = 1;
            out[idx(0)] = QLaurent::q(1);
        } else if (even && i == m - 1) {
            out[plus] = 1;
            out[minus] = 1;
        } else if (!even && i == a) {
            out[idx(i + 1)] = 2;
        } else {
            out[idx(i + 1)] = 1;
        }
    }
    auto times_h = [&](const RingElement& x) {
        RingElement y(n);
        for (auto i : x.support()) y += hmul[i] * x[i];
        return y;
    };
    // sigma_i as a polynomial in H (coefficients of H^{*t}), for every non-middle class
    auto poly_of = [&](int i) {
        std::vector<QLaurent> p(i + 1);
        if (i <= a)
            p[i] = 1;
        else if (i < rr)
            p[i] = QLaurent(Rational(1, 2));
        else {
            p[rr] = QLaurent(Rational(1, 2));
            p[0] = -QLaurent::q(1);
        }
        return p;
    };
    auto apply_poly = [&](const std::vector<QLaurent>& p, const RingElement& x) {
        RingElement acc(n), cur = x;
        for (std::size_t t = 0; t < p.size(); ++t) {
            if (!p[t].is_zero()) acc += cur * p[t];
            if (t + 1 < p.size()) cur = times_h(cur);
        }
        return acc;
    };

    for (int i = 0; i <= rr; ++i) {
        if (even && i == m) continue;
        auto p = poly_of(i);
        for (std::size_t j = 0; j < n; ++j) {
            RingElement prod = apply_poly(p, r.basis(j));
            r.structure[idx(i) * n + j] = to_entry(prod);
            r.structure[j * n + idx(i)] = to_entry(prod);
        }
    }
    if (even) {
        r.structure[plus * n + plus] = {{idx(0), QLaurent::q(1)}};
        r.structure[minus * n + minus] = {{idx(0), QLaurent::q(1)}};
        r.structure[plus * n + minus] = {{idx(rr), QLaurent(1)}};
        r.structure[minus * n + plus] = {{idx(rr), QLaurent(1)}};
    }

    for (int i = 0; i <= rr; ++i) {
        if (even && i == m) continue;
        r.pairing[idx(i) * n + idx(rr - i)] = 1;
    }
    if (even) {
        r.pairing[plus * n + minus] = 1;
        r.pairing[minus * n + plus] = 1;
    }
    r.unit_index = 0;
    r.point_index = idx(rr);
    validate(r);

    // the handle element must reproduce (r+d) s_r + (r-d) q
    const int delta = even ? 2 : 1;
    RingElement expect(n);
    expect[idx(rr)] = rr + delta;
    expect[idx(0)] = QLaurent(Rational(rr - delta), 1);
    if (handle_element(r) != expect) throw RingError(r.name + ": pairing convention does not reproduce the handle element");
    return r;
}

std::string schubert_label(const Partition& p) { return p.str(); }

SigmaHat reduce_sigma_hat(int k, int n, const std::vector<int>& index)
{
    std::vector<int> I = index;
    while (!I.empty() && I.back() == 0) I.pop_back();
    SigmaHat out;
    if (static_cast<int>(I.size()) > k) {
        bool partition = true;
        for (std::size_t i = 0; i < I.size(); ++i)
            if (I[i] < 0 || (i && I[i] > I[i - 1])) partition = false;
        if (partition) return out;
        throw std::invalid_argument("reduce_sigma_hat: index longer than k");
    }
    I.resize(k, 0);
    std::vector<int> shift(k, 0);
    int r = 0;
    for (int j = 1; j <= k; ++j) {
        int lo = j - k;
        int& x = I[j - 1];
        if (x < lo) return out;
        int s = (x - lo) / n;
        x -= s * n;
        shift[j - 1] = s;
        r += s;
    }
    int sign = (r * (k + 1)) % 2 ? -1 : 1;
    std::vector<int> id(k);
    std::iota(id.begin(), id.end(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int p = 0; p + 1 < k; ++p) {
            int a = I[p], b = I[p + 1];
            if (a >= b) continue;
            if (b == a + 1) return out;
            I[p] = b - 1;
            I[p + 1] = a + 1;
            std::swap(id[p], id[p + 1]);
            sign = -sign;
            changed = true;
        }
    }
    if (I[k - 1] < 0) return out;
    out.lambda = Partition(I);
    if (!out.lambda.in_box(k, n)) throw std::logic_error("reduce_sigma_hat: result outside the box");
    out.sign = sign;
    out.q_exp = r;
    for (int p = 0; p < k; ++p)
        if (shift[id[p]] > 0) out.shifted_rows.push_back(p + 1);
    return out;
}

FrobeniusRing grassmannian(int k, int n)
{
    if (k < 2 || n - k < 2) throw std::invalid_argument("grassmannian: need 2 <= k <= n-2");
    auto basis = partitions_in_box(k, n);
    std::vector<std::string> labels;
    std::vector<int> deg;
    for (const auto& p : basis) {
        labels.push_back(schubert_label(p));
        deg.push_back(p.weight());
    }
    FrobeniusRing r = empty_ring("gr:" + std::to_string(k) + "," + std::to_string(n), labels, deg, n);
    const std::size_t d = r.dim();
    std::map<Partition, std::size_t> where;
    for (std::size_t i = 0; i < d; ++i) where[basis[i]] = i;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            RingElement prod(d);
            for (const auto& [nu, c] : lr_expand(basis[i], basis[j], k)) {
                SigmaHat red = reduce_sigma_hat(k, n, nu.parts());
                if (red.sign == 0) continue;
                prod[where.at(red.lambda)] += QLaurent(Rational(c * red.sign), red.q_exp);
            }
            r.structure[i * d + j] = to_entry(prod);
            r.structure[j * d + i] = r.structure[i * d + j];
        }
    for (std::size_t i = 0; i < d; ++i) r.pairing[i * d + where.at(complement(basis[i], k, n))] = 1;
    r.unit_index = 0;
    r.point_index = d - 1;
    validate(r);
    return r;
}

Partition phi_map(int k, int n, const Partition& nu, const std::vector<int>& rows)
{
    const int r = static_cast<int>(rows.size());
    if (r < 1 || r > k) throw std::invalid_argument("phi_map: row set must have 1..k entries");
    for (int l = 0; l < r; ++l)
        if (rows[l] < 1 || rows[l] > k || (l && rows[l] <= rows[l - 1]))
            throw std::invalid_argument("phi_map: rows must be strictly increasing in [1,k]");
    if (!nu.in_box(k, n) || nu.weight() != k * (n - k) - r * n)
        throw std::invalid_argument("phi_map: nu has the wrong weight for this row set");
    auto i = [&](int l) { return l == 0 ? 0 : rows[l - 1]; };
    std::vector<int> phi(k + 1, 0);  // 1-based
    for (int j = 1; j <= r; ++j) phi[j] = nu[i(j) - 1] - i(j) + j + n;
    for (int l = 1; l <= r; ++l)
        for (int j = r + 1; j <= k; ++j) {
            int t = j - r;
            if (i(l - 1) - l + 2 <= t && t <= i(l) - l) phi[j] = nu[j - r + l - 2] + r - l + 1;
        }
    for (int j = i(r) + 1; j <= k; ++j) phi[j] = nu[j - 1];
    return Partition(std::vector<int>(phi.begin() + 1, phi.end()));
}

RingElement delta_closed_form(int k, int n)
{
    if (k < 2 || n - k < 2) throw std::invalid_argument("delta_closed_form: need 2 <= k <= n-2");
    auto basis = partitions_in_box(k, n);
    std::map<Partition, std::size_t> where;
    for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
    RingElement delta(basis.size());
    delta[basis.size() - 1] = QLaurent(Rational(Integer(basis.size())));
    const int R = k * (n - k) / n;
    for (int r = 1; r <= R; ++r) {
        // strictly increasing r-subsets of [1,k]
        std::vector<std::vector<int>> subsets;
        std::vector<int> cur;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(cur.size()) == r) {
                subsets.push_back(cur);
                return;
            }
            for (int v = start; v <= k; ++v) {
                cur.push_back(v);
                rec(v + 1);
                cur.pop_back();
            }
        };
        rec(1);
        for (const auto& nu : partitions_of(k * (n - k) - r * n, k, n - k)) {
            Integer coeff = 0;
            for (const auto& I : subsets) {
                int sumI = std::accumulate(I.begin(), I.end(), 0);
                int e = r * (2 * k - r + 1) / 2 + sumI;
                Partition phi = phi_map(k, n, nu, I);
                Integer s = 0;
                for (const auto& lam : basis) s += lr_coefficient(lam, complement(lam, k, n), phi);
                coeff += (e % 2 ? -1 : 1) * s;
            }
            if (coeff != 0) delta[where.at(nu)] += QLaurent(Rational(coeff), r);
        }
    }
    return delta;
}

RingElement delta_gr2_corollary(int n)
{
    if (n < 4) throw std::invalid_argument("delta_gr2_corollary: n >= 4 required");
    auto basis = partitions_in_box(2, n);
    std::map<Partition, std::size_t> where;
    for (std::size_t i = 0; i < basis.size(); ++i) where[basis[i]] = i;
    RingElement delta(basis.size());
    delta[where.at(Partition{n - 2, n - 2})] = n * (n - 1) / 2;
    for (int s = 1; s <= (n - 2) / 2; ++s)
        delta[where.at(Partition{n - 3 - s, s - 1})] += QLaurent(frac(n * (n - 2 * s - 1), 2), 1);
    return delta;
}

RingSpec parse_ring_spec(const std::string& id)
{
    static const std::regex pn(R"(^pn:(\d+)$)");
    static const std::regex qu(R"(^quadric:(\d+)$)");
    static const std::regex gr(R"(^gr:(\d+),(\d+)$)");
    static const std::regex fci(R"(^fci:(\d+(?:,\d+)*);r=(\d+)$)");
    std::smatch mt;
    RingSpec s;
    if (std::regex_match(id, mt, pn)) {
        s.kind = "pn";
        s.args = {std::stoi(mt[1])};
    } else if (std::regex_match(id, mt, qu)) {
        s.kind = "quadric";
        s.args = {std::stoi(mt[1])};
    } else if (std::regex_match(id, mt, gr)) {
        s.kind = "gr";
        s.args = {std::stoi(mt[1]), std::stoi(mt[2])};
    } else if (std::regex_match(id, mt, fci)) {
        s.kind = "fci";
        std::string list = mt[1];
        std::size_t pos = 0;
        while (pos <= list.size()) {
            std::size_t c = list.find(',', pos);
            if (c == std::string::npos) c = list.size();
            s.args.push_back(std::stoi(list.substr(pos, c - pos)));
            pos = c + 1;
        }
        s.r = std::stoi(mt[2]);
    } else {
        throw std::invalid_argument("unrecognised ring identifier: " + id);
    }
    return s;
}

FrobeniusRing build_ring(const RingSpec& s)
{
    if (s.kind == "pn") return projective_space(s.args[0]);
    if (s.kind == "quadric") return quadric(s.args[0]);
    if (s.kind == "gr") {
        if (s.args[0] == 1) return projective_space(s.args[1] - 1);
        return grassmannian(s.args[0], s.args[1]);
    }
    return fano_ci(fci_model(s.args, s.r));
}

FrobeniusRing build_ring(const std::string& id) { return build_ring(parse_ring_spec(id)); }

}  // namespace qh
