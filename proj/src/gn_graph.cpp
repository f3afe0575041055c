#include "pal/gn_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pal {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

}  // namespace

GnGraph build_gn(const FactorIndex& idx, std::size_t n) {
    GnGraph graph{.n = n, .degenerate = false, .alphabet = idx.word().alphabet()};
    auto paths = n_simple_paths(idx, n);
    if (paths.degenerate) {
        graph.degenerate = true;
        return graph;
    }
    graph.truncated = paths.truncated;

    auto report = special_factors(idx, n);
    std::set<std::string> classes;
    auto canon = [](std::string_view f) {
        std::string m = mirror_bytes(f);
        return std::min(std::string(f), m);
    };
    for (auto f : report.right_special) classes.insert(canon(f));
    for (auto f : report.left_special) classes.insert(canon(f));

    std::map<std::string, std::uint32_t> vertex_of;
    for (const auto& small : classes) {
        vertex_of.emplace(small, static_cast<std::uint32_t>(graph.vertices.size()));
        graph.vertices.push_back({small, mirror_bytes(small)});
    }

    std::map<std::string, std::size_t> edge_of;  // canonical path -> edge slot
    for (const auto& p : paths.paths) {
        std::string key = canon(p.path);
        auto [it, inserted] = edge_of.try_emplace(key, graph.edges.size());
        if (!inserted) {
            // Same class reached twice: the words must be mirror images.
            const auto& existing = graph.edges[it->second];
            std::string incoming(p.path);
            if (existing.path != incoming && existing.path != mirror_bytes(incoming))
                throw std::logic_error("path class pairing merged two unrelated paths");
            continue;
        }
        GnGraph::Edge edge;
        edge.path = key;
        edge.palindromic = is_palindrome(p.path);
        std::uint32_t u = vertex_of.at(canon(p.start_factor));
        std::uint32_t v = vertex_of.at(canon(p.end_factor));
        edge.u = std::min(u, v);
        edge.v = std::max(u, v);
        edge.loop = edge.u == edge.v;
        graph.edges.push_back(std::move(edge));
    }
    return graph;
}

GnCheckReport check_gn(const GnGraph& g, long long t_value) {
    GnCheckReport report;
    report.n = g.n;
    report.t_value = t_value;
    if (g.degenerate || g.vertices.empty()) {
        report.skipped = true;
        report.reason = "degenerate graph: no special factors of this length";
        return report;
    }

    report.loops_palindromic = true;
    std::size_t non_loop = 0;
    std::set<std::pair<std::uint32_t, std::uint32_t>> endpoint_pairs;
    bool multi_edge = false;
    UnionFind uf(g.vertices.size());
    for (const auto& e : g.edges) {
        if (e.loop) {
            if (!e.palindromic) report.loops_palindromic = false;
            continue;
        }
        ++non_loop;
        if (!endpoint_pairs.emplace(e.u, e.v).second) multi_edge = true;
        uf.unite(e.u, e.v);
    }
    bool connected = true;
    for (std::uint32_t i = 1; i < g.vertices.size(); ++i)
        if (uf.find(i) != uf.find(0)) connected = false;
    report.tree_after_loop_removal =
        connected && !multi_edge && non_loop == g.vertices.size() - 1;

    report.equivalence_pass =
        (t_value == 0) == (report.tree_after_loop_removal && report.loops_palindromic);
    return report;
}

std::string gn_adjacency_text(const GnGraph& g) {
    std::ostringstream os;
    for (const auto& e : g.edges) {
        os << g.alphabet.render(g.vertices[e.u].small) << '\t'
           << g.alphabet.render(g.vertices[e.v].small) << '\t'
           << g.alphabet.render(e.path) << '\t' << (e.loop ? "loop" : "tree") << '\n';
    }
    return os.str();
}

std::string gn_dot(const GnGraph& g) {
    std::ostringstream os;
    os << "graph g" << g.n << " {\n";
    for (const auto& v : g.vertices)
        os << "  \"" << g.alphabet.render(v.small) << "\";\n";
    for (const auto& e : g.edges) {
        os << "  \"" << g.alphabet.render(g.vertices[e.u].small) << "\" -- \""
           << g.alphabet.render(g.vertices[e.v].small) << "\" [label=\""
           << g.alphabet.render(e.path) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace pal
