#pragma once

#include <cstdint>
#include <span>

#include "hyperlam/hypergraph.hpp"
#include "hyperlam/polyform.hpp"

namespace hyperlam {

enum class StepRule { ArmijoBacktracking, Fixed };

struct SolverConfig {
    double p = 2.0;
    double tol = 1e-10;  // KKT residual target
    long max_iter = 100000;
    int restarts = 32;
    std::uint64_t seed = 0;
    StepRule step_rule = StepRule::ArmijoBacktracking;

    void validate() const;  // tol > 0, restarts >= 1, max_iter >= 1
};

struct SpectralResult {
    double lambda = 0.0;
    WeightVector witness;       // nonnegative, l^p-normalized (all-zero for edgeless graphs)
    double kkt_residual = 0.0;
    long iterations = 0;        // summed over restarts
    bool converged = false;     // kkt_residual <= tol
    int restarts_agreeing = 0;  // restarts within 1e-8 of the best value
};

// Best-of-restarts maximizer of P_G over the nonnegative part of the l^p
// unit sphere. Requires p > 1 (use lagrangian for p = 1). The reported value
// is a certified lower bound on the true maximum; non-convergence is flagged,
// not thrown. Safe to call concurrently on the same graph.
SpectralResult p_spectral_radius(const Hypergraph& g, const SolverConfig& cfg);

// Maximizer of P_G over the standard simplex (the p = 1 problem), using
// projected ascent plus a mass-shift move between support vertices that
// share no edge.
SpectralResult lagrangian(const Hypergraph& g, const SolverConfig& cfg);

// First-order stationarity residual of a nonnegative normalized x:
// max over support of |grad_i - r lambda x_i^{p-1}| plus the violation
// max(0, grad_i - r lambda x_i^{p-1}) over zero entries (x_i^{p-1} is 1 at
// p = 1 and 0 for p > 1, so the zero-entry threshold is r*lambda on the
// simplex and 0 on the sphere).
double kkt_residual(const Hypergraph& g, std::span<const double> x, double p);

// Solves the k-variable class-constant problem for a complete multipartite
// (k >= r) or complete chromatic family and expands the witness to n
// entries. Exact for p > 1 on multipartite families and p >= 1 on chromatic
// families; at p = 1 on multipartite families the class-uniform maximizer is
// returned. cfg.p is overridden by p.
SpectralResult symmetric_solve(const PartitionSpec& spec, int r, double p, SolverConfig cfg = {});

struct OracleBracket {
    double lower = 0.0;
    double upper = 0.0;
};

// Independent check for tiny graphs (n <= 6): grid search over the
// nonnegative l^p sphere at the given resolution, polished locally; the
// upper bound adds a gradient-Lipschitz cover estimate for the grid gap.
OracleBracket brute_force_oracle(const Hypergraph& g, double p, int resolution);

}  // namespace hyperlam
