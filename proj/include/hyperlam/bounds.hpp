#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "hyperlam/hypergraph.hpp"

namespace hyperlam {

// C(n, r) as a double, 0 for n < r; computed by products rather than
// factorials so n up to ~10^4 stays exact in double range.
double binom(std::int64_t n, int r);

// Falling-factorial extension x(x-1)...(x-r+1)/r! of the binomial to real x,
// truncated to 0 for x <= r-1 (the convex extension used throughout).
double real_binom(double x, int r);

// r! C(k,r) k^-r: the simplex maximum over k-partite r-graphs.
double bound_l1(int k, int r);

// r! C(k,r)^{1/p} k^{-r/p} e^{1-1/p}  (k-partite, p > 1).
double bound_b1(int k, int r, double p, double edges);

// r! C(k,r) k^-r n^{r-r/p}  (k-partite, p > 1).
double bound_b2(int k, int r, double p, int n);

// (1 - k^{1-r})^{1/p} (r! e)^{1-1/p}  (k-chromatic).
double bound_b3(int k, int r, double p, double edges);

// (1 - k^{1-r}) n^{r-r/p}  (k-chromatic).
double bound_b4(int k, int r, double p, int n);

// k-chromatic 3-graph ceiling: 3! C(n,3) n^{-3/p} when n <= 2k, otherwise
// 3! (C(n,3) - k C(n/k,3)) n^{-3/p} with the real-valued binomial.
double bound_th4(int n, int k, double p);

// r! C(n,r) n^{-r/p}: the complete-graph value.
double bound_pth4(int n, int r, double p);

// r! (C(n,r) - k C(n/k,r)) n^{-r/p} with the real binomial and its truncation.
double bound_co2(int n, int k, int r, double p);

// Mixed cubic form in real class sizes (>= 1) and nonnegative class weights:
//   sum_{i<j} (C(n_i,2) n_j a_i^2 a_j + C(n_j,2) n_i a_j^2 a_i)
// + sum_{i<j<m} n_i n_j n_m a_i a_j a_m.
// Throws std::invalid_argument when some n_i < 1.
double R_function(std::span<const double> n_vec, std::span<const double> a_vec);

// Partial derivatives of R_function with respect to the sizes and weights.
void R_gradient(std::span<const double> n_vec, std::span<const double> a_vec,
                std::span<double> dn_out, std::span<double> da_out);

// (C(n,3) - k C(n/k,3)) s^3 / n^3 with the real binomial.
double R_bound(double n, int k, double s);

// C(n,r) - sum_i C(n_i,r).
std::uint64_t chromatic_edge_count(const PartitionSpec& spec, int r);

// e_r(n_1, ..., n_k).
std::uint64_t multipartite_edge_count(const PartitionSpec& spec, int r);

// One evaluated bound, optionally compared against an achieved value.
struct BoundReport {
    std::string bound_name;
    double value = 0.0;
    std::optional<double> achieved_lambda;
    std::optional<double> slack;  // value - achieved_lambda
    std::optional<bool> equality_case;
};

}  // namespace hyperlam
