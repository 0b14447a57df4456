#include "qh/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace qh {

Poly poly_trim(Poly p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int poly_degree(const Poly& p)
{
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return poly_trim(c);
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    return poly_trim(c);
}

Poly poly_derivative(const Poly& p)
{
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    return poly_trim(d);
}

void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem)
{
    Poly bb = poly_trim(b);
    if (bb.empty()) throw std::domain_error("polynomial division by zero");
    rem = poly_trim(a);
    int db = static_cast<int>(bb.size()) - 1;
    quot.assign(rem.size() > bb.size() - 1 ? rem.size() - bb.size() + 1 : 0, 0);
    while (static_cast<int>(rem.size()) - 1 >= db && !rem.empty()) {
        int s = static_cast<int>(rem.size()) - 1 - db;
        Rational f = rem.back() / bb.back();
        quot[s] = f;
        for (int i = 0; i <= db; ++i) rem[s + i] -= f * bb[i];
        rem = poly_trim(rem);
    }
    quot = poly_trim(quot);
}

Poly poly_gcd(Poly a, Poly b)
{
    a = poly_trim(a);
    b = poly_trim(b);
    while (!b.empty()) {
        Poly q, r;
        poly_divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
    return a;
}

Rational poly_eval(const Poly& p, const Rational& x)
{
    Rational s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
    return s;
}

RatMatrix poly_eval(const Poly& p, const RatMatrix& m)
{
    RatMatrix r(m.rows(), m.cols());
    RatMatrix id = RatMatrix::identity(m.rows());
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * m + id * (*it);
    return r;
}

Poly char_poly(const RatMatrix& a)
{
    if (!a.square()) throw std::invalid_argument("char_poly: non-square matrix");
    const std::size_t n = a.rows();
    // M_0 = 0, c_n = 1; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k)/k
    Poly c(n + 1);
    c[n] = 1;
    RatMatrix mk(n, n);
    RatMatrix id = RatMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        mk = a * mk + id * c[n - k + 1];
        RatMatrix am = a * mk;
        Rational tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
        c[n - k] = -tr / static_cast<long>(k);
    }
    return c;
}

namespace {

// prime factorization by trial division and Pollard rho
Integer pollard_rho(const Integer& n)
{
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer x = 2, y = 2, d = 1;
        auto f = [&](const Integer& v) {
            Integer r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            Integer diff = x - y;
            mpz_abs(diff.get_mpz_t(), diff.get_mpz_t());
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out)
{
    if (n <= 1) return;
    for (unsigned long p = 2; p < 1000; ++p) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)]++;
            n /= p;
        }
    }
    std::vector<Integer> stack{n};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
            out[m]++;
            continue;
        }
        Integer d = pollard_rho(m);
        stack.push_back(d);
        stack.push_back(m / d);
    }
}

std::vector<Integer> divisors(const Integer& n)
{
    std::map<Integer, int> f;
    Integer a = n;
    mpz_abs(a.get_mpz_t(), a.get_mpz_t());
    factor_into(a, f);
    std::vector<Integer> ds{1};
    for (const auto& [p, e] : f) {
        std::size_t sz = ds.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) ds.push_back(ds[i] * pk);
        }
    }
    return ds;
}

// primitive integer polynomial proportional to p
std::vector<Integer> integer_poly(const Poly& p)
{
    Integer l = 1;
    for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z;
    for (const auto& c : p) z.push_back(Integer(c * l));
    Integer g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g != 0)
        for (auto& c : z) c /= g;
    return z;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p0)
{
    Poly p = poly_trim(p0);
    if (p.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> roots;
    int zero_mult = 0;
    while (!p.empty() && p[0] == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.emplace_back(Rational(0), zero_mult);
    if (p.size() <= 1) return roots;

    // candidates from the square-free part, whose coefficients are smaller
    Poly g = poly_gcd(p, poly_derivative(p));
    Poly sf, rem;
    poly_divmod(p, g, sf, rem);
    auto z = integer_poly(sf);
    Integer a0 = z.front(), an = z.back();

    // Cauchy bound on root size
    Rational bound = 0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        Rational t(z[i], an);
        t.canonicalize();
        t = abs(t);
        if (t > bound) bound = t;
    }
    bound += 1;

    auto ps = divisors(a0);
    auto qs = divisors(an);
    std::vector<Rational> found;
    for (const auto& q : qs)
        for (const auto& pp : ps)
            for (int s : {1, -1}) {
                Rational c(pp * s, q);
                c.canonicalize();
                if (abs(c) > bound) continue;
                if (std::find(found.begin(), found.end(), c) != found.end()) continue;
                if (poly_eval(sf, c) == 0) found.push_back(c);
            }
    for (const auto& c : found) {
        int mult = 0;
        Poly cur = p, q, r;
        Poly lin{-c, 1};
        while (true) {
            poly_divmod(cur, lin, q, r);
            if (!r.empty()) break;
            ++mult;
            cur = q;
        }
        roots.emplace_back(c, mult);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

EigenStructure rational_eigenstructure(const RatMatrix& m)
{
    if (!m.square()) throw std::invalid_argument("rational_eigenstructure: non-square matrix");
    EigenStructure es;
    es.char_poly = char_poly(m);
    int total = 0;
    for (const auto& [lam, mult] : rational_roots(es.char_poly)) {
        Eigenvalue ev;
        ev.value = lam;
        ev.multiplicity = mult;
        RatMatrix n = m.shifted(lam);
        // ranks of N^j, j = 0..mult+1
        std::vector<std::size_t> rk{m.rows()};
        RatMatrix p = RatMatrix::identity(m.rows());
        for (int j = 1; j <= mult + 1; ++j) {
            p = p * n;
            rk.push_back(rank(p));
            if (j == mult) ev.basis = nullspace(p);
        }
        // number of blocks of size >= j is rk[j-1] - rk[j]
        for (int j = mult; j >= 1; --j) {
            long ge_j = static_cast<long>(rk[j - 1] - rk[j]);
            long ge_j1 = j + 1 < static_cast<int>(rk.size()) ? static_cast<long>(rk[j] - rk[j + 1]) : 0;
            for (long c = 0; c < ge_j - ge_j1; ++c) ev.blocks.push_back(j);
        }
        total += mult;
        es.eigen.push_back(std::move(ev));
    }
    es.split_over_rationals = total == static_cast<int>(m.rows());
    return es;
}

PdCertificate is_positive_definite(const RatMatrix& m)
{
    if (!m.is_symmetric()) throw std::invalid_argument("is_positive_definite: matrix is not symmetric");
    // Gaussian elimination without pivoting; the k-th leading minor is the
    // product of the first k pivots
    PdCertificate cert;
    RatMatrix a = m;
    const std::size_t n = a.rows();
    Rational minor = 1;
    for (std::size_t k = 0; k < n; ++k) {
        minor *= a(k, k);
        cert.minors.push_back(minor);
        if (minor <= 0) return cert;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rational f = a(i, k) / a(k, k);
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    cert.positive = true;
    return cert;
}

std::size_t krylov_rank(const RatMatrix& m, const RatVector& v, std::size_t cap)
{
    if (is_zero(v)) throw std::invalid_argument("krylov_rank: zero vector");
    if (!m.square() || m.cols() != v.size()) throw std::invalid_argument("krylov_rank: shape mismatch");
    // echelon rows with their pivot columns
    std::vector<RatVector> ech;
    std::vector<std::size_t> piv;
    RatVector w = v;
    for (std::size_t k = 0; k < cap; ++k) {
        RatVector r = w;
        for (std::size_t i = 0; i < ech.size(); ++i)
            if (r[piv[i]] != 0) {
                Rational f = r[piv[i]];
                for (std::size_t j = 0; j < r.size(); ++j)
                    if (ech[i][j] != 0) r[j] -= f * ech[i][j];
            }
        std::size_t p = 0;
        while (p < r.size() && r[p] == 0) ++p;
        if (p == r.size()) break;  // the chain has stabilised
        Rational inv = 1 / r[p];
        for (auto& x : r) x *= inv;
        ech.push_back(std::move(r));
        piv.push_back(p);
        w = m * w;
        // keep entry size down; rescaling does not change the span
        Integer g = 0;
        for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
        if (g > 1)
            for (auto& x : w) x /= g;
    }
    return ech.size();
}

SymEigen sym_jacobi(const std::vector<std::vector<double>>& a0, double tol, int max_sweeps)
{
    const std::size_t n = a0.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (a0[i].size() != n) throw std::invalid_argument("sym_jacobi: non-square input");
        for (std::size_t j = 0; j < i; ++j)
            if (a0[i][j] != a0[j][i]) throw std::invalid_argument("sym_jacobi: matrix is not symmetric");
    }
    auto a = a0;
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
    double norm = 0;
    for (const auto& r : a)
        for (double x : r) norm += x * x;
    norm = std::sqrt(norm);

    auto off = [&] {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) s += a[i][j] * a[i][j];
        return std::sqrt(s);
    };

    SymEigen out;
    int sweep = 0;
    while (off() > tol * norm && norm > 0) {
        if (sweep == max_sweeps) throw std::runtime_error("sym_jacobi: no convergence");
        ++sweep;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (a[p][q] == 0) continue;
                double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
    }
    out.sweeps = sweep;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    // descending by value, ties by index
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
    for (auto i : idx) {
        out.values.push_back(a[i][i]);
        std::vector<double> col(n);
        for (std::size_t k = 0; k < n; ++k) col[k] = v[k][i];
        out.vectors.push_back(std::move(col));
    }
    return out;
}

std::vector<double> sym_float_eigs(const RatMatrix& m, double tol)
{
    if (!m.is_symmetric()) throw std::invalid_argument("sym_float_eigs: matrix is not symmetric");
    return sym_jacobi(m.to_double(), tol).values;
}

}  // namespace qh
