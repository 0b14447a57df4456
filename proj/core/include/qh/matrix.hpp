#pragma once

#include "qh/rational.hpp"

#include <cstddef>
#include <vector>

namespace qh {

using RatVector = std::vector<Rational>;

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RatMatrix identity(std::size_t n);
    static RatMatrix diagonal(const RatVector& d);
    static RatMatrix from_columns(const std::vector<RatVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RatVector column(std::size_t j) const;
    RatVector row(std::size_t i) const;
    RatMatrix transpose() const;
    RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    RatMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    bool is_symmetric() const;
    bool is_zero() const;

    RatMatrix operator*(const RatMatrix& b) const;
    RatVector operator*(const RatVector& v) const;
    RatMatrix operator+(const RatMatrix& b) const;
    RatMatrix operator-(const RatMatrix& b) const;
    RatMatrix operator*(const Rational& c) const;
    RatMatrix power(unsigned e) const;
    RatMatrix shifted(const Rational& lambda) const;  // this - lambda*I

    friend bool operator==(const RatMatrix& a, const RatMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    std::vector<std::vector<double>> to_double() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

std::size_t rank(RatMatrix m);
Rational determinant(RatMatrix m);
RatMatrix inverse(const RatMatrix& m);                  // throws on singular input
std::vector<RatVector> nullspace(const RatMatrix& m);   // basis of the right kernel
// solution x of m x = b when m is square and invertible
RatVector solve(const RatMatrix& m, const RatVector& b);

bool is_zero(const RatVector& v);
RatVector scaled(const RatVector& v, const Rational& c);
Rational dot(const RatVector& a, const RatVector& b);

}  // namespace qh
