#pragma once

#include "qh/frobenius.hpp"
#include "qh/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qh {

FrobeniusRing projective_space(int n);
FrobeniusRing quadric(int r);
FrobeniusRing grassmannian(int k, int n);

// Schubert class label used by grassmannian(): the partition string, e.g. "[2,1]"
std::string schubert_label(const Partition& p);

struct SigmaHat {
    int sign = 0;  // 0 means the class vanishes
    int q_exp = 0;
    Partition lambda;
    std::vector<int> shifted_rows;  // final positions (1-based) of the rows moved by a window shift
};

SigmaHat reduce_sigma_hat(int k, int n, const std::vector<int>& index);

Partition phi_map(int k, int n, const Partition& nu, const std::vector<int>& rows);

RingElement delta_closed_form(int k, int n);
RingElement delta_gr2_corollary(int n);

// restricted quantum cohomology of a Fano complete intersection
struct FciModel {
    std::vector<int> m;
    int r = 0;
    int L = 0;
    int abs_m = 0;
    int tau = 0;
    int kappa = 0;
    bool hat_basis = false;   // Hh = H + m! q, used when |m| = r + L
    Integer chi;
    bool chi_override = false;
    Rational m_pow_m;         // prod m_i^m_i
    Rational m_fact;          // prod m_i!
    Rational m_inv;           // prod 1/m_i
    Rational m_pow_m1;        // prod m_i^(m_i - 1)
    Integer primitive_dim;
    // constants at q = 1; q-weights: zeta 0, beta r, xi r-1, alpha r, omega r-1
    Rational zeta, alpha, beta, xi, omega;
};

Integer fci_euler(const std::vector<int>& m, int r);
FciModel fci_model(const std::vector<int>& m, int r, std::optional<Integer> chi = std::nullopt);
FrobeniusRing fano_ci(const FciModel& model);

// parse "pn:<n>", "quadric:<r>", "gr:<k>,<n>", "fci:<m1>,...;r=<r>"
struct RingSpec {
    std::string kind;
    std::vector<int> args;
    int r = 0;
};
RingSpec parse_ring_spec(const std::string& id);
FrobeniusRing build_ring(const RingSpec& spec);
FrobeniusRing build_ring(const std::string& id);

}  // namespace qh
