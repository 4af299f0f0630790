#pragma once

#include <span>
#include <vector>

#include "hyperlam/hypergraph.hpp"

namespace hyperlam {

// A weight vector together with the p-norm it claims to be normalized under.
// declared_norm_p is metadata; no normalization is enforced on construction.
struct WeightVector {
    std::vector<double> entries;
    double declared_norm_p = 2.0;

    double norm(double p) const;
    bool is_normalized(double tol = 1e-12) const;
};

// One weight per class of a complete multipartite/chromatic family. Zero
// weights are allowed (support reduction needs them).
struct ClassWeights {
    PartitionSpec spec;
    std::vector<double> a;

    void validate() const;  // length match, entries >= 0
};

// P_G(x) = r! * sum over edges of the product of the incident entries.
// Plain left-to-right summation by default; `compensated` switches to Kahan
// summation for verification runs.
double evaluate(const Hypergraph& g, std::span<const double> x, bool compensated = false);

// Component i is r! * sum over edges through i of the product of the other entries.
std::vector<double> gradient(const Hypergraph& g, std::span<const double> x);

// e_0..e_max_degree of y (elementary symmetric polynomials).
std::vector<double> elementary_symmetric(std::span<const double> y, int max_degree);

// Per-edge product sum (P_G / 3!) of the complete k-chromatic 3-graph at the
// class-constant point a: sum over class pairs of C(n_i,2) n_j a_i^2 a_j +
// C(n_j,2) n_i a_j^2 a_i, plus the triple-class sum.
double reduced_evaluate_chromatic3(const ClassWeights& cw);

// Per-edge product sum (P_G / r!) of the complete k-chromatic r-graph at the
// class-constant point, for any r >= 2: the degree-r coefficient of
// prod_i (1 + a_i z)^{n_i} minus the within-class terms sum_i C(n_i,r) a_i^r.
double reduced_evaluate_chromatic(const ClassWeights& cw, int r);
std::vector<double> reduced_gradient_chromatic(const ClassWeights& cw, int r);

// r! * e_r(n_1 a_1, ..., n_k a_k) for the complete k-partite family.
double reduced_evaluate_multipartite(const ClassWeights& cw, int r);
std::vector<double> reduced_gradient_multipartite(const ClassWeights& cw, int r);

}  // namespace hyperlam
