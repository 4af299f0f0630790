#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hyperlam/hypergraph.hpp"
#include "hyperlam/pspectral.hpp"

namespace hyperlam {

struct Violation {
    std::string parameters;  // reproducible description of the failing case
    double observed = 0.0;
    double expected = 0.0;
    double gap = 0.0;
    std::uint64_t seed = 0;
};

struct SweepReport {
    std::string theorem_id;
    std::string parameter_grid;
    long cases_checked = 0;
    std::vector<Violation> violations;
    bool passed = true;  // passed <=> violations empty
    bool budget_exhausted = false;
    // Smallest strictness margin observed where one applies (NaN otherwise);
    // regression-tested against frozen values.
    double min_margin = std::numeric_limits<double>::quiet_NaN();
};

// Part-size vectors n_1 <= ... <= n_k with all parts >= 1 summing to n.
std::vector<std::vector<int>> partitions_into(int n, int k);

// Balanced part sizes must be the strict unique lambda^(p) maximizer over
// all complete k-partite graphs of order n (p > 1). Enumerates partitions,
// solves each by symmetric_solve, requires a margin > 1e-9.
SweepReport verify_partite_extremal(int n, int k, int r, double p, const SolverConfig& cfg = {});

// Same for complete k-chromatic 3-graphs, p >= 1.
SweepReport verify_chromatic_extremal(int n, int k, double p, const SolverConfig& cfg = {});

// Simplex-maximum checks on a complete multipartite family: random vectors
// with class sums 1/k must achieve r! C(k,r) k^-r exactly; the simplex solver
// must reach that value with class sums 1/k; the symmetric-mean inequality
// behind the argument is checked numerically on random positive inputs.
SweepReport verify_mst(const PartitionSpec& spec, int r, std::uint64_t seed,
                       const SolverConfig& cfg = {});

// For each listed transposition automorphism (u, v), the polished witness
// must satisfy |x_u - x_v| <= 1e-8.
SweepReport verify_eigvec_symmetry(const Hypergraph& g, double p,
                                   const std::vector<std::pair<int, int>>& automorphism_pairs,
                                   const SolverConfig& cfg = {});

// lambda^(p)(G) n^{r/p} must decrease monotonically along p_list (slack 1e-9)
// and finish within 5% of r! e(G).
SweepReport verify_limit(const Hypergraph& g, const std::vector<double>& p_list,
                         const SolverConfig& cfg = {});

enum class ConjectureCheck { Co1, Co2, Both };

// Sweeps all complete k-chromatic r-graphs of order n (r >= 4,
// n > (r-1)k, n <= 12) via the class-constant reduction, deduplicating
// partitions that describe the same graph, and checks (a) the balanced
// family is the strict maximizer and (b) every value stays below the
// generalized ceiling bound. Violations are findings, logged with full
// reproduction data. `budget` caps the number of solves.
SweepReport conjecture_search(int n, int k, int r, const std::vector<double>& p_list, long budget,
                              ConjectureCheck check = ConjectureCheck::Both,
                              const SolverConfig& cfg = {});

// Random sampling plus local ascent over real class sizes (>= 1, summing to
// n) and nonnegative weights (sum n_i a_i = s): no value may exceed
// R_bound + 1e-10 and the uniform point must attain it to 1e-12.
SweepReport verify_R_max(int n, int k, long samples, std::uint64_t seed, double s = 1.0);

// Ceiling checks for the chromatic 3-graph bound over all partitions:
// every value below the bound, equality only for the balanced family when
// n <= 2k or k | n, strict slack > 1e-6 otherwise.
SweepReport verify_th4_bound(int n, int k, double p, const SolverConfig& cfg = {});

std::string to_json_string(const SweepReport& report);
std::string sweep_csv_header();
std::string to_csv_row(const SweepReport& report);

}  // namespace hyperlam
