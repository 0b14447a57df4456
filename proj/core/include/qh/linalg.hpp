#pragma once

#include "qh/matrix.hpp"

#include <vector>

namespace qh {

// polynomials are coefficient lists in ascending degree, trailing zeros trimmed
using Poly = std::vector<Rational>;

Poly poly_trim(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly poly_gcd(Poly a, Poly b);  // monic
Rational poly_eval(const Poly& p, const Rational& x);
RatMatrix poly_eval(const Poly& p, const RatMatrix& m);
int poly_degree(const Poly& p);

// monic characteristic polynomial det(xI - M), Faddeev-LeVerrier
Poly char_poly(const RatMatrix& m);

// distinct rational roots with multiplicities
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p);

struct Eigenvalue {
    Rational value;
    int multiplicity = 0;
    std::vector<int> blocks;           // Jordan block sizes, descending
    std::vector<RatVector> basis;      // basis of ker (M - value I)^multiplicity
};

struct EigenStructure {
    std::vector<Eigenvalue> eigen;     // ascending by value
    bool split_over_rationals = false;
    Poly char_poly;
};

EigenStructure rational_eigenstructure(const RatMatrix& m);

struct PdCertificate {
    bool positive = false;
    std::vector<Rational> minors;  // leading principal minors, up to the first non-positive one
};

PdCertificate is_positive_definite(const RatMatrix& m);

std::size_t krylov_rank(const RatMatrix& m, const RatVector& v, std::size_t cap);

struct SymEigen {
    std::vector<double> values;               // descending
    std::vector<std::vector<double>> vectors; // vectors[i] belongs to values[i], unit length
    int sweeps = 0;
};

// cyclic Jacobi; convergence when the off-diagonal Frobenius norm drops below
// tol times the Frobenius norm of the input
SymEigen sym_jacobi(const std::vector<std::vector<double>>& a, double tol = 1e-12, int max_sweeps = 100);
std::vector<double> sym_float_eigs(const RatMatrix& m, double tol = 1e-12);

}  // namespace qh
