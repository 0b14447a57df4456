#include "qh/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace qh {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : p_(std::move(parts))
{
    for (std::size_t i = 0; i < p_.size(); ++i) {
        if (p_[i] < 0) throw std::invalid_argument("partition with a negative part");
        if (i && p_[i] > p_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!p_.empty() && p_.back() == 0) p_.pop_back();
}

int Partition::weight() const { return std::accumulate(p_.begin(), p_.end(), 0); }

bool Partition::contains(const Partition& mu) const
{
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.p_[i] > p_[i]) return false;
    return true;
}

std::string Partition::str() const
{
    std::string s = "[";
    for (std::size_t i = 0; i < p_.size(); ++i) s += (i ? "," : "") + std::to_string(p_[i]);
    return s + "]";
}

Partition parse_partition(const std::string& s)
{
    std::vector<int> v;
    std::string cur;
    for (char c : s) {
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
            cur += c;
        } else if (c == ',' || c == ']' || c == ')' || c == ' ') {
            if (!cur.empty()) v.push_back(std::stoi(cur));
            cur.clear();
        } else if (c != '[' && c != '(') {
            throw std::invalid_argument("bad partition: " + s);
        }
    }
    if (!cur.empty()) v.push_back(std::stoi(cur));
    return Partition(v);
}

std::vector<Partition> partitions_of(int w, int rows, int cols)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == rows) return;
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    if (w >= 0) rec(w, cols);
    return out;
}

std::vector<Partition> partitions_in_box(int k, int n)
{
    std::vector<Partition> out;
    for (int w = 0; w <= k * (n - k); ++w)
        for (auto& p : partitions_of(w, k, n - k)) out.push_back(std::move(p));
    return out;
}

Partition complement(const Partition& lambda, int k, int n)
{
    if (k < 1 || n <= k) throw std::invalid_argument("complement: need 1 <= k < n");
    if (!lambda.in_box(k, n)) throw std::invalid_argument("complement: " + lambda.str() + " not in the box");
    std::vector<int> v(k);
    for (int i = 0; i < k; ++i) v[i] = n - k - lambda[k - 1 - i];
    return Partition(v);
}

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu)
{
    if (!nu.contains(lambda) || nu.weight() != lambda.weight() + mu.weight()) return 0;
    if (mu.empty()) return 1;
    // cells of nu/lambda in reading order: rows top to bottom, right to left
    struct Cell { int row, col; };
    std::vector<Cell> cells;
    for (int i = 0; i < nu.length(); ++i)
        for (int c = nu[i] - 1; c >= lambda[i]; --c) cells.push_back({i, c});
    const int nrows = nu.length();
    // filled labels per row, indexed by column
    std::vector<std::vector<int>> lab(nrows);
    for (int i = 0; i < nrows; ++i) lab[i].assign(nu[i], 0);
    std::vector<int> cnt(mu.length() + 2, 0);
    Integer total = 0;

    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        auto [r, c] = cells[idx];
        // rows weakly increase: label <= label of the cell to the right (already placed)
        int hi = mu.length();
        if (c + 1 < nu[r]) hi = std::min(hi, lab[r][c + 1]);
        hi = std::min(hi, r + 1);
        int lo = 1;
        if (r > 0 && c >= lambda[r - 1]) lo = lab[r - 1][c] + 1;  // column strictness
        for (int t = lo; t <= hi; ++t) {
            if (cnt[t] >= mu[t - 1]) continue;
            if (t > 1 && cnt[t] + 1 > cnt[t - 1]) continue;  // lattice word
            lab[r][c] = t;
            ++cnt[t];
            rec(idx + 1);
            --cnt[t];
        }
        lab[r][c] = 0;
    };
    rec(0);
    return total;
}

int lr_coefficient_len2(const Partition& lambda, const Partition& nu, const Partition& mu)
{
    if (lambda.length() > 2 || nu.length() > 2 || mu.length() > 2)
        throw std::invalid_argument("lr_coefficient_len2: inputs must have length <= 2");
    if (!mu.contains(lambda)) return 0;
    if (mu.weight() != lambda.weight() + nu.weight()) return 0;
    if (nu[0] < mu[0] - lambda[0]) return 0;
    if (!(mu[1] - lambda[0] <= nu[1] && nu[1] <= mu[0] - lambda[0])) return 0;
    return 1;
}

std::map<Partition, Integer> lr_expand(const Partition& lambda, const Partition& mu, int max_rows)
{
    // row-by-row LR tableaux: c[i][t] = number of label t+1 in row i
    std::map<Partition, Integer> out;
    const int L = mu.length();
    if (L == 0) {
        if (lambda.length() <= max_rows) out[lambda] = 1;
        return out;
    }
    const int R = max_rows;
    std::vector<std::vector<int>> c(R, std::vector<int>(L, 0));
    std::vector<int> used(L, 0);     // labels placed so far
    std::vector<int> shape(R, 0);    // resulting row lengths

    std::function<void(int)> row_rec;
    std::function<void(int, int, int)> label_rec;

    // choose c[i][t] for row i, label t; pos is the current end of row i
    label_rec = [&](int i, int t, int pos) {
        if (t == std::min(L, i + 1)) {
            shape[i] = pos;
            row_rec(i + 1);
            return;
        }
        // bound from the row above: cells with label t+1 must sit under cells of label <= t or lambda
        int cap = mu[t] - used[t];
        if (i > 0) {
            int above = lambda[i - 1];
            for (int s = 0; s < t; ++s) above += c[i - 1][s];
            cap = std::min(cap, above - pos);
        }
        // lattice: used[t] + c <= used[t-1] counted through previous rows only
        if (t > 0) {
            int prev = used[t - 1] - c[i][t - 1];
            cap = std::min(cap, prev - used[t]);
        }
        for (int x = cap; x >= 0; --x) {
            c[i][t] = x;
            used[t] += x;
            label_rec(i, t + 1, pos + x);
            used[t] -= x;
        }
        c[i][t] = 0;
    };

    row_rec = [&](int i) {
        if (i == R) {
            for (int t = 0; t < L; ++t)
                if (used[t] != mu[t]) return;
            std::vector<int> v(shape.begin(), shape.end());
            out[Partition(v)] += 1;
            return;
        }
        if (i >= lambda.length() && i > 0 && shape[i - 1] == 0) {
            // nothing can be placed below an empty row
            bool done = true;
            for (int t = 0; t < L; ++t) done = done && used[t] == mu[t];
            if (done) {
                for (int j = i; j < R; ++j) shape[j] = 0;
                out[Partition(std::vector<int>(shape.begin(), shape.end()))] += 1;
            }
            return;
        }
        label_rec(i, 0, lambda[i]);
    };
    if (lambda.length() > R) return out;
    row_rec(0);
    return out;
}

namespace {

struct CountTable {
    std::mutex mu;
    std::map<std::tuple<int, int, int>, Integer> memo;
};

CountTable& count_table()
{
    static CountTable t;
    return t;
}

Integer restricted_count_rec(int i, int m, int l, std::map<std::tuple<int, int, int>, Integer>& memo)
{
    if (i < 0) return 0;
    if (i == 0) return 1;
    if (m == 0 || l == 0) return 0;
    auto key = std::make_tuple(i, m, l);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer v = restricted_count_rec(i, m - 1, l, memo) + restricted_count_rec(i - m, m, l - 1, memo);
    memo.emplace(key, v);
    return v;
}

}  // namespace

Integer restricted_count(int i, int m, int l)
{
    if (m < 0 || l < 0) throw std::invalid_argument("restricted_count: negative box size");
    auto& t = count_table();
    std::lock_guard<std::mutex> g(t.mu);
    return restricted_count_rec(i, m, l, t.memo);
}

Integer est_bound(int k, int n)
{
    if (k < 1 || k >= n) throw std::invalid_argument("est_bound: need 1 <= k < n");
    long d2 = std::gcd(static_cast<long>(n), static_cast<long>(k) * k);
    Integer s = 0;
    for (int i = 0; i <= k * (n - k) / n; ++i) s += restricted_count(i * n, n - k, k);
    return Integer(n / d2) * s;
}

}  // namespace qh

namespace qh {

namespace {

// beta-set of lambda with `len` entries; a rim hook of size h is beta -> beta - h
Integer mn_rec(std::vector<int> beta, const std::vector<int>& rho, std::size_t at,
               std::map<std::pair<std::vector<int>, std::size_t>, Integer>& memo)
{
    if (at == rho.size()) return 1;
    auto key = std::make_pair(beta, at);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int h = rho[at];
    Integer total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i], t = b - h;
        if (t < 0 || std::find(beta.begin(), beta.end(), t) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > t && x < b) ++between;
        auto next = beta;
        next[i] = t;
        std::sort(next.begin(), next.end(), std::greater<int>());
        Integer v = mn_rec(next, rho, at + 1, memo);
        total += between % 2 ? Integer(-v) : v;
    }
    memo.emplace(key, total);
    return total;
}

}  // namespace

Integer sn_character(const Partition& lambda, const Partition& rho)
{
    if (lambda.weight() != rho.weight()) throw std::invalid_argument("sn_character: weights differ");
    const int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo;
    return mn_rec(beta, rho.parts(), 0, memo);
}

Integer centralizer_size(const Partition& rho)
{
    std::map<int, int> mult;
    for (int x : rho.parts()) ++mult[x];
    Integer z = 1;
    for (auto [part, m] : mult) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(part), static_cast<unsigned long>(m));
        z *= f * p;
    }
    return z;
}

}  // namespace qh
