#pragma once

#include "qh/laurent.hpp"
#include "qh/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qh {

class RingElement {
public:
    RingElement() = default;
    explicit RingElement(std::size_t dim) : c_(dim) {}
    static RingElement basis(std::size_t dim, std::size_t i, const QLaurent& c = QLaurent(1));
    static RingElement from_vector(const RatVector& v);

    std::size_t dim() const { return c_.size(); }
    QLaurent& operator[](std::size_t i) { return c_.at(i); }
    const QLaurent& operator[](std::size_t i) const { return c_.at(i); }
    bool is_zero() const;
    std::vector<std::size_t> support() const;

    RingElement& operator+=(const RingElement& x);
    RingElement& operator-=(const RingElement& x);
    RingElement& operator*=(const QLaurent& c);
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator*(RingElement a, const QLaurent& c) { return a *= c; }
    friend RingElement operator*(const QLaurent& c, RingElement a) { return a *= c; }
    friend bool operator==(const RingElement& a, const RingElement& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RingElement& a, const RingElement& b) { return a.c_ != b.c_; }

    // coordinates with q specialised
    RatVector at_q(const Rational& q) const;
    bool has_negative_exponent() const;

private:
    std::vector<QLaurent> c_;
};

struct StructureTerm {
    std::size_t index;
    QLaurent coeff;
};
using StructureEntry = std::vector<StructureTerm>;  // sorted by index

class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct FrobeniusRing {
    std::string name;
    std::vector<std::string> labels;
    std::vector<int> degrees;
    int tau = 1;
    std::vector<QLaurent> pairing;          // dim x dim, row-major
    std::vector<StructureEntry> structure;  // dim x dim, row-major: e_i * e_j
    std::size_t unit_index = 0;
    std::optional<std::size_t> point_index;
    // handle element supplied by the constructor; used instead of the pairing sums
    std::optional<RingElement> installed_handle;

    std::size_t dim() const { return labels.size(); }
    const StructureEntry& entry(std::size_t i, std::size_t j) const { return structure[i * dim() + j]; }
    const QLaurent& g(std::size_t i, std::size_t j) const { return pairing[i * dim() + j]; }
    int top_degree() const;
    std::size_t index_of(const std::string& label) const;  // throws RingError
    RingElement basis(std::size_t i, const QLaurent& c = QLaurent(1)) const { return RingElement::basis(dim(), i, c); }
    RingElement unit() const { return basis(unit_index); }
    RingElement point() const;
    std::string format(const RingElement& x) const;  // "10*[3,3] + 5*q*[1]"
};

// all construction checks; throws RingError naming the failing labels
void validate(const FrobeniusRing& r);

RingElement product(const FrobeniusRing& r, const RingElement& x, const RingElement& y);
RingElement power(const FrobeniusRing& r, const RingElement& x, unsigned k);

// pairing with constant entries, as a rational matrix; throws if some entry involves q
RatMatrix constant_pairing(const FrobeniusRing& r);

struct HandleReport {
    RingElement delta;
    std::optional<RingElement> pairing_sum;    // sum g^{ij} e_i * e_j
    std::optional<RingElement> dual_basis_sum; // sum e_i * e_i^vee
    bool formulas_agree = true;
    bool installed = false;
};

HandleReport handle_report(const FrobeniusRing& r);
RingElement handle_element(const FrobeniusRing& r);

// column j = coordinates of x * e_j; without at_q, q = 1 and negative exponents are rejected
RatMatrix mult_matrix(const FrobeniusRing& r, const RingElement& x, std::optional<Rational> at_q = std::nullopt);

struct ThetaOrder {
    int theta = 0;
    int n_x = 0;
    Rational c;
};

ThetaOrder theta_order(const FrobeniusRing& r, int cap = 64);
RingElement pt_inverse(const FrobeniusRing& r, int cap = 64);

std::vector<std::size_t> vj_split(const FrobeniusRing& r, int j);
int d_x(const FrobeniusRing& r);  // gcd(tau, top degree)
long dim_bound(const FrobeniusRing& r);

struct FSpan {
    std::size_t dim = 0;
    std::vector<int> basis_powers;
    bool containment = true;       // every Delta^k sits in the sum of V_j, j = 0 mod D_X
    int containment_failure = -1;  // first failing power
};

FSpan f_span_dim(const FrobeniusRing& r);

}  // namespace qh
