#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlam {

// Thrown when a textual or JSON graph description is malformed. line() is
// 1-based; 0 means the location could not be attributed to a line.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Thrown when an exact search exceeds its node budget.
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An r-uniform hypergraph on vertex set {0, ..., n-1}.
//
// Edges are kept in canonical form: each edge is a strictly increasing
// r-tuple, the edge list is sorted lexicographically, and duplicates are
// rejected at construction. Instances are immutable and safe to share
// across threads.
class Hypergraph {
public:
    Hypergraph(int r, int n, std::vector<std::vector<int>> edges);

    int uniformity() const noexcept { return r_; }
    int order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return flat_.size() / static_cast<std::size_t>(r_); }

    std::span<const int> edge(std::size_t i) const {
        return {flat_.data() + i * static_cast<std::size_t>(r_), static_cast<std::size_t>(r_)};
    }
    const std::vector<int>& flat_edges() const noexcept { return flat_; }
    std::vector<std::vector<int>> edge_list() const;

    // Degree of a vertex (number of incident edges).
    int degree(int v) const;

    bool operator==(const Hypergraph& other) const = default;

private:
    int r_;
    int n_;
    std::vector<int> flat_;  // edge i occupies [i*r, (i+1)*r)
};

enum class PartitionKind { Partite, Chromatic };

// Class sizes (n_1, ..., n_k) of a complete multipartite or complete
// chromatic family, in vertex-index order: class 0 owns the lowest indices.
struct PartitionSpec {
    std::vector<int> sizes;
    PartitionKind kind = PartitionKind::Partite;

    int classes() const noexcept { return static_cast<int>(sizes.size()); }
    int total() const noexcept;
    void validate() const;  // throws std::invalid_argument unless all sizes >= 1

    // Class id per vertex under the index-order labeling.
    std::vector<int> vertex_classes() const;
};

// All r-subsets of {0,...,n-1}. Requires n >= r >= 2.
Hypergraph complete_graph(int n, int r);

// Edges are the r-subsets taking at most one vertex per class. A spec with
// fewer classes than r has no edges; the edgeless graph is returned and
// *warned_empty (when non-null) is set.
Hypergraph complete_multipartite(const PartitionSpec& spec, int r, bool* warned_empty = nullptr);

// Edges are the r-subsets not contained in a single class.
Hypergraph complete_chromatic(const PartitionSpec& spec, int r);

// Balanced class sizes for n vertices in k classes; larger classes take
// lower indices so constructions are reproducible.
PartitionSpec balanced_partition(int n, int k, PartitionKind kind);

// T_k^r(n): complete k-partite with near-equal parts. Requires k >= r >= 2, n >= k.
Hypergraph turan_hypergraph(int n, int k, int r);

// Q_k^r(n): complete k-chromatic with near-equal classes. Requires k >= 2, n >= k.
Hypergraph balanced_chromatic(int n, int k, int r);

struct ColoringOptions {
    long long node_budget = 10'000'000;  // backtracking nodes before resource_limit_error
};

// Decides whether V splits into <= k classes with every edge meeting each
// class at most once; returns a witness class assignment when it does.
std::optional<std::vector<int>> is_k_partite(const Hypergraph& g, int k,
                                             const ColoringOptions& opts = {});

// Weak-coloring variant: no edge may lie inside a single class.
std::optional<std::vector<int>> is_k_chromatic(const Hypergraph& g, int k,
                                               const ColoringOptions& opts = {});

// Text format: header "r n m", then m lines of r vertex indices; '#' starts
// a comment line. A JSON object {"r":..,"n":..,"edges":[[..],..]} is accepted
// as well (detected by a leading '{').
Hypergraph parse_hypergraph(std::string_view input);
std::string serialize_text(const Hypergraph& g);
std::string serialize_json(const Hypergraph& g);

}  // namespace hyperlam
