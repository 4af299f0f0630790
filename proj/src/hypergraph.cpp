#include "hyperlam/hypergraph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hyperlam {

namespace {

void check_edge(std::vector<int>& e, int r, int n) {
    if (static_cast<int>(e.size()) != r)
        throw std::invalid_argument("edge has " + std::to_string(e.size()) +
                                    " vertices, expected " + std::to_string(r));
    std::sort(e.begin(), e.end());
    for (int i = 0; i < r; ++i) {
        if (e[i] < 0 || e[i] >= n)
            throw std::invalid_argument("vertex index " + std::to_string(e[i]) +
                                        " out of range [0, " + std::to_string(n) + ")");
        if (i > 0 && e[i] == e[i - 1])
            throw std::invalid_argument("repeated vertex " + std::to_string(e[i]) + " in edge");
    }
}

}  // namespace

Hypergraph::Hypergraph(int r, int n, std::vector<std::vector<int>> edges) : r_(r), n_(n) {
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    if (n < r) throw std::invalid_argument("order n must be at least r");
    for (auto& e : edges) check_edge(e, r, n);
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1]) {
            std::ostringstream os;
            os << "duplicate edge {";
            for (int j = 0; j < r; ++j) os << (j ? " " : "") << edges[i][j];
            os << "}";
            throw std::invalid_argument(os.str());
        }
    flat_.reserve(edges.size() * static_cast<std::size_t>(r));
    for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

std::vector<std::vector<int>> Hypergraph::edge_list() const {
    std::vector<std::vector<int>> out(edge_count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto e = edge(i);
        out[i].assign(e.begin(), e.end());
    }
    return out;
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (std::size_t i = 0; i < edge_count(); ++i) {
        auto e = edge(i);
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    }
    return d;
}

int PartitionSpec::total() const noexcept {
    return std::accumulate(sizes.begin(), sizes.end(), 0);
}

void PartitionSpec::validate() const {
    if (sizes.empty()) throw std::invalid_argument("partition needs at least one class");
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("class sizes must be positive");
}

std::vector<int> PartitionSpec::vertex_classes() const {
    std::vector<int> cls;
    cls.reserve(static_cast<std::size_t>(total()));
    for (int i = 0; i < classes(); ++i) cls.insert(cls.end(), sizes[i], i);
    return cls;
}

namespace {

// Calls fn for every increasing r-tuple from {0,...,n-1}.
template <class Fn>
void for_each_combination(int n, int r, Fn&& fn) {
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    if (r > n) return;
    while (true) {
        fn(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == n - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

Hypergraph complete_graph(int n, int r) {
    if (r < 2 || n < r) throw std::invalid_argument("complete_graph requires n >= r >= 2");
    std::vector<std::vector<int>> edges;
    for_each_combination(n, r, [&](const std::vector<int>& e) { edges.push_back(e); });
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph complete_multipartite(const PartitionSpec& spec, int r, bool* warned_empty) {
    spec.validate();
    if (spec.kind != PartitionKind::Partite)
        throw std::invalid_argument("complete_multipartite needs a Partite spec");
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    const int n = spec.total();
    if (warned_empty) *warned_empty = false;
    if (spec.classes() < r) {
        if (warned_empty) *warned_empty = true;
        return Hypergraph(r, n, {});
    }
    const auto cls = spec.vertex_classes();
    std::vector<std::vector<int>> edges;
    for_each_combination(n, r, [&](const std::vector<int>& e) {
        for (int i = 1; i < r; ++i)
            if (cls[e[i]] == cls[e[i - 1]]) return;  // classes are index-contiguous
        edges.push_back(e);
    });
    return Hypergraph(r, n, std::move(edges));
}

Hypergraph complete_chromatic(const PartitionSpec& spec, int r) {
    spec.validate();
    if (spec.kind != PartitionKind::Chromatic)
        throw std::invalid_argument("complete_chromatic needs a Chromatic spec");
    if (r < 2) throw std::invalid_argument("uniformity r must be at least 2");
    const int n = spec.total();
    const auto cls = spec.vertex_classes();
    std::vector<std::vector<int>> edges;
    for_each_combination(n, r, [&](const std::vector<int>& e) {
        if (cls[e.front()] != cls[e.back()]) edges.push_back(e);
    });
    return Hypergraph(r, n, std::move(edges));
}

PartitionSpec balanced_partition(int n, int k, PartitionKind kind) {
    if (k < 1 || n < k) throw std::invalid_argument("balanced_partition requires n >= k >= 1");
    PartitionSpec spec;
    spec.kind = kind;
    const int q = n / k, rem = n % k;
    for (int i = 0; i < rem; ++i) spec.sizes.push_back(q + 1);
    for (int i = rem; i < k; ++i) spec.sizes.push_back(q);
    return spec;
}

Hypergraph turan_hypergraph(int n, int k, int r) {
    if (r < 2 || k < r || n < k)
        throw std::invalid_argument("turan_hypergraph requires k >= r >= 2 and n >= k");
    return complete_multipartite(balanced_partition(n, k, PartitionKind::Partite), r);
}

Hypergraph balanced_chromatic(int n, int k, int r) {
    if (r < 2 || k < 2 || n < k)
        throw std::invalid_argument("balanced_chromatic requires r >= 2, k >= 2 and n >= k");
    return complete_chromatic(balanced_partition(n, k, PartitionKind::Chromatic), r);
}

namespace {

struct ColorSearch {
    int n = 0;
    int k = 0;
    long long budget = 0;
    long long nodes = 0;
    std::vector<int> color;

    void spend() {
        if (++nodes > budget)
            throw resource_limit_error("coloring search exceeded the node budget of " +
                                       std::to_string(budget));
    }
};

}  // namespace

std::optional<std::vector<int>> is_k_partite(const Hypergraph& g, int k,
                                             const ColoringOptions& opts) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.order();
    if (g.edge_count() > 0 && k < g.uniformity()) return std::nullopt;
    if (n > 64) throw resource_limit_error("partiteness search supports n <= 64");

    // Vertices sharing an edge must land in distinct classes, so this is
    // proper coloring of the co-occurrence graph.
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                adj[e[a]] |= std::uint64_t(1) << e[b];
                adj[e[b]] |= std::uint64_t(1) << e[a];
            }
    }

    ColorSearch s{n, k, opts.node_budget, 0, std::vector<int>(n, -1)};
    std::vector<std::uint64_t> class_members(static_cast<std::size_t>(k), 0);

    auto backtrack = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {  // new classes opened in order
            s.spend();
            if (adj[v] & class_members[c]) continue;
            s.color[v] = c;
            class_members[c] |= std::uint64_t(1) << v;
            if (self(self, v + 1, std::max(used, c + 1))) return true;
            class_members[c] &= ~(std::uint64_t(1) << v);
            s.color[v] = -1;
        }
        return false;
    };
    if (backtrack(backtrack, 0, 0)) return s.color;
    return std::nullopt;
}

std::optional<std::vector<int>> is_k_chromatic(const Hypergraph& g, int k,
                                               const ColoringOptions& opts) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    const int n = g.order();

    // Edges become decidable once their highest vertex is assigned.
    std::vector<std::vector<std::size_t>> closing(n);
    for (std::size_t i = 0; i < g.edge_count(); ++i) closing[g.edge(i).back()].push_back(i);

    ColorSearch s{n, k, opts.node_budget, 0, std::vector<int>(n, -1)};
    auto monochrome = [&](std::size_t ei) {
        auto e = g.edge(ei);
        const int c = s.color[e.front()];
        for (int v : e)
            if (s.color[v] != c) return false;
        return true;
    };
    auto backtrack = [&](auto&& self, int v, int used) -> bool {
        if (v == n) return true;
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            s.spend();
            s.color[v] = c;
            bool ok = true;
            for (std::size_t ei : closing[v])
                if (monochrome(ei)) {
                    ok = false;
                    break;
                }
            if (ok && self(self, v + 1, std::max(used, c + 1))) return true;
            s.color[v] = -1;
        }
        return false;
    };
    if (backtrack(backtrack, 0, 0)) return s.color;
    return std::nullopt;
}

namespace {

Hypergraph parse_text(std::string_view input) {
    std::istringstream in{std::string(input)};
    std::string line;
    int lineno = 0;
    int r = -1, n = -1;
    long m = -1;
    std::vector<std::vector<int>> edges;

    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };
    auto parse_ints = [&](const std::string& text) {
        std::istringstream ls(text);
        std::vector<long> vals;
        long v;
        while (ls >> v) vals.push_back(v);
        std::string rest;
        if (!ls.eof()) {
            ls.clear();
            ls >> rest;
            if (!rest.empty()) throw parse_error(lineno, "unexpected token '" + rest + "'");
        }
        return vals;
    };

    std::string data;
    if (!next_data_line(data)) throw parse_error(lineno == 0 ? 1 : lineno, "empty input");
    {
        auto header = parse_ints(data);
        if (header.size() != 3) throw parse_error(lineno, "header must be 'r n m'");
        r = static_cast<int>(header[0]);
        n = static_cast<int>(header[1]);
        m = header[2];
        if (r < 2) throw parse_error(lineno, "uniformity r must be at least 2");
        if (n < r) throw parse_error(lineno, "order n must be at least r");
        if (m < 0) throw parse_error(lineno, "edge count must be nonnegative");
    }
    for (long i = 0; i < m; ++i) {
        if (!next_data_line(data)) throw parse_error(lineno, "expected " + std::to_string(m) +
                                                                 " edges, found " + std::to_string(i));
        auto vals = parse_ints(data);
        if (static_cast<int>(vals.size()) != r)
            throw parse_error(lineno, "edge needs exactly " + std::to_string(r) + " vertices");
        std::vector<int> e(vals.begin(), vals.end());
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        for (int j = 0; j < r; ++j) {
            if (sorted[j] < 0 || sorted[j] >= n) throw parse_error(lineno, "vertex index out of range");
            if (j > 0 && sorted[j] == sorted[j - 1])
                throw parse_error(lineno, "repeated vertex " + std::to_string(sorted[j]) + " in edge");
        }
        edges.push_back(std::move(e));
    }
    if (next_data_line(data)) throw parse_error(lineno, "trailing content after the edge list");
    try {
        return Hypergraph(r, n, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw parse_error(lineno, e.what());  // duplicate edges land here
    }
}

Hypergraph parse_json(std::string_view input) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(input);
    } catch (const nlohmann::json::parse_error& e) {
        int line = 1;
        for (std::size_t i = 0; i < std::min(e.byte, input.size()); ++i)
            if (input[i] == '\n') ++line;
        throw parse_error(line, e.what());
    }
    try {
        if (!j.is_object() || !j.contains("r") || !j.contains("n") || !j.contains("edges"))
            throw std::invalid_argument("JSON graph needs fields r, n, edges");
        const int r = j.at("r").get<int>();
        const int n = j.at("n").get<int>();
        auto edges = j.at("edges").get<std::vector<std::vector<int>>>();
        return Hypergraph(r, n, std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(1, e.what());
    } catch (const std::invalid_argument& e) {
        throw parse_error(1, e.what());
    }
}

}  // namespace

Hypergraph parse_hypergraph(std::string_view input) {
    std::size_t pos = input.find_first_not_of(" \t\r\n");
    if (pos != std::string_view::npos && input[pos] == '{') return parse_json(input);
    return parse_text(input);
}

std::string serialize_text(const Hypergraph& g) {
    std::ostringstream os;
    os << g.uniformity() << ' ' << g.order() << ' ' << g.edge_count() << '\n';
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        auto e = g.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) os << (j ? " " : "") << e[j];
        os << '\n';
    }
    return os.str();
}

std::string serialize_json(const Hypergraph& g) {
    nlohmann::json j;
    j["r"] = g.uniformity();
    j["n"] = g.order();
    j["edges"] = g.edge_list();
    return j.dump() + "\n";
}

}  // namespace hyperlam
