#pragma once

#include "qh/rational.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace qh {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);  // throws unless weakly decreasing and >= 0

    const std::vector<int>& parts() const { return p_; }
    int length() const { return static_cast<int>(p_.size()); }
    int weight() const;
    int operator[](int i) const { return i < length() ? p_[i] : 0; }  // 0-based, padded with zeros
    bool empty() const { return p_.empty(); }
    bool contains(const Partition& mu) const;  // diagram inclusion
    bool in_box(int k, int n) const { return length() <= k && (p_.empty() || p_[0] <= n - k); }

    std::string str() const;  // "[3,1]"

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return a.p_ != b.p_; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.p_ < b.p_; }

private:
    std::vector<int> p_;
};

Partition parse_partition(const std::string& s);

// all partitions in the k x (n-k) box, by weight then reverse lexicographic
std::vector<Partition> partitions_in_box(int k, int n);
// all partitions of w with at most `rows` parts each at most `cols`
std::vector<Partition> partitions_of(int w, int rows, int cols);

Partition complement(const Partition& lambda, int k, int n);

// C^nu_{lambda mu} by enumeration of LR fillings of nu/lambda with content mu
Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);
// two-row closed form, returns C^mu_{lambda nu}
int lr_coefficient_len2(const Partition& lambda, const Partition& nu, const Partition& mu);
// s_lambda * s_mu = sum_nu C^nu s_nu, restricted to l(nu) <= max_rows
std::map<Partition, Integer> lr_expand(const Partition& lambda, const Partition& mu, int max_rows);

// number of partitions of i inside an l x m box
Integer restricted_count(int i, int m, int l);
Integer est_bound(int k, int n);

// irreducible S_w character chi^lambda at cycle type rho (Murnaghan-Nakayama)
Integer sn_character(const Partition& lambda, const Partition& rho);
// size of the centralizer of a permutation of cycle type rho
Integer centralizer_size(const Partition& rho);

}  // namespace qh
