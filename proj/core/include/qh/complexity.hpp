#pragma once

#include "qh/frobenius.hpp"
#include "qh/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

// projective class of a nonzero vector, first nonzero coordinate scaled to 1
class ProjState {
public:
    ProjState() = default;
    explicit ProjState(const RatVector& v);  // throws on the zero vector
    const RatVector& coords() const { return c_; }
    std::size_t dim() const { return c_.size(); }
    std::vector<double> to_double() const;  // unit length
    friend bool operator==(const ProjState& a, const ProjState& b) { return a.c_ == b.c_; }
    friend bool operator<(const ProjState& a, const ProjState& b) { return a.c_ < b.c_; }

private:
    RatVector c_;
};

double chordal(const std::vector<double>& x, const std::vector<double>& y);
double chordal(const ProjState& a, const ProjState& b);

struct Trajectory {
    std::vector<ProjState> states;  // k = 0 .. min(kmax, zero_at - 1)
    int zero_at = -1;               // first k with Delta^k z = 0
    int cycle_start = -1;           // states[cycle_start + t*cycle_length] repeat
    int cycle_length = 0;
    bool closed() const { return zero_at >= 0 || cycle_length > 0; }
};

Trajectory trajectory(const RatMatrix& m, const ProjState& s0, int kmax);
Trajectory trajectory(const FrobeniusRing& r, const ProjState& s0, int kmax);

std::optional<int> exact_complexity(const FrobeniusRing& r, const ProjState& s0, const ProjState& s, int kmax);
std::optional<int> approx_complexity(const FrobeniusRing& r, const ProjState& s0, const ProjState& s, double eps, int kmax);

struct FiniteStates {
    std::vector<ProjState> states;  // in order of first appearance
    bool closed = false;
};

FiniteStates finite_state_set(const FrobeniusRing& r, const ProjState& s0, int kmax);

struct LimitReport {
    std::string method;  // "finite-orbit", "rational-spectrum exact", "theta-periodic float", "float-fallback"
    std::string confidence;
    std::vector<ProjState> exact_points;
    std::vector<std::vector<double>> approx_points;
    double tolerance = 0;
    std::optional<Rational> lambda_exact;
    double lambda = 0;
    int depth = 0;
    bool finite_orbit = false;
    std::vector<ProjState> excluded;  // finite-complexity states removed from the candidate set
    double witness_distance = -1;     // float iterate vs nearest candidate, when computed
    std::size_t size() const { return exact_points.size() + approx_points.size(); }
};

// limit set of [M^k z] for M with rational spectrum; throws if the spectrum does not split over Q
LimitReport limit_points_real(const RatMatrix& m, const RatVector& z);

struct SInfinityOptions {
    int kmax = -1;          // default 10 * dim
    double tie_tol = 1e-9;  // relative gap below which dominant eigenvalues merge
    double tol = 1e-9;      // float coincidence tolerance
    int theta_cap = 64;
};

LimitReport s_infinity(const FrobeniusRing& r, const ProjState& s0, const SInfinityOptions& opt = {});

}  // namespace qh
