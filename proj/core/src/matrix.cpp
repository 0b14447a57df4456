#include "qh/matrix.hpp"

#include <stdexcept>

namespace qh {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (const auto& x : r) a_.push_back(x);
    }
}

RatMatrix RatMatrix::identity(std::size_t n)
{
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::diagonal(const RatVector& d)
{
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<RatVector>& cols)
{
    if (cols.empty()) return {};
    RatMatrix m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j].at(i);
    return m;
}

RatVector RatMatrix::column(std::size_t j) const
{
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

RatVector RatMatrix::row(std::size_t i) const
{
    return RatVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

RatMatrix RatMatrix::transpose() const
{
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    RatMatrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

RatMatrix RatMatrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const
{
    RatMatrix b(rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j) b(i, j) = (*this)(rs[i], cs[j]);
    return b;
}

bool RatMatrix::is_symmetric() const
{
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool RatMatrix::is_zero() const
{
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

RatMatrix RatMatrix::operator*(const RatMatrix& b) const
{
    if (cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    RatMatrix c(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (b(k, j) != 0) c(i, j) += x * b(k, j);
        }
    return c;
}

RatVector RatMatrix::operator*(const RatVector& v) const
{
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
    RatVector w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (v[j] != 0 && (*this)(i, j) != 0) w[i] += (*this)(i, j) * v[j];
    return w;
}

RatMatrix RatMatrix::operator+(const RatMatrix& b) const
{
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    RatMatrix c = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] += b.a_[i];
    return c;
}

RatMatrix RatMatrix::operator-(const RatMatrix& b) const
{
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
    RatMatrix c = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) c.a_[i] -= b.a_[i];
    return c;
}

RatMatrix RatMatrix::operator*(const Rational& s) const
{
    RatMatrix c = *this;
    for (auto& x : c.a_) x *= s;
    return c;
}

RatMatrix RatMatrix::power(unsigned e) const
{
    if (!square()) throw std::invalid_argument("power of non-square matrix");
    RatMatrix r = identity(rows_), b = *this;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

RatMatrix RatMatrix::shifted(const Rational& lambda) const
{
    RatMatrix c = *this;
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) c(i, i) -= lambda;
    return c;
}

std::vector<std::vector<double>> RatMatrix::to_double() const
{
    std::vector<std::vector<double>> d(rows_, std::vector<double>(cols_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) d[i][j] = (*this)(i, j).get_d();
    return d;
}

namespace {

// reduced row echelon form in place, returns pivot columns
std::vector<std::size_t> rref(RatMatrix& m)
{
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

}  // namespace

std::size_t rank(RatMatrix m)
{
    // forward elimination only
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

Rational determinant(RatMatrix m)
{
    if (!m.square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = c; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

RatMatrix inverse(const RatMatrix& m)
{
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    return aug.block(0, n, n, n);
}

std::vector<RatVector> nullspace(const RatMatrix& m)
{
    RatMatrix r = m;
    auto piv = rref(r);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto c : piv) is_piv[c] = true;
    std::vector<RatVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        RatVector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

RatVector solve(const RatMatrix& m, const RatVector& b)
{
    const std::size_t n = m.rows();
    if (!m.square() || b.size() != n) throw std::invalid_argument("solve: shape mismatch");
    RatMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    return aug.column(n);
}

bool is_zero(const RatVector& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

RatVector scaled(const RatVector& v, const Rational& c)
{
    RatVector w = v;
    for (auto& x : w) x *= c;
    return w;
}

Rational dot(const RatVector& a, const RatVector& b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace qh
