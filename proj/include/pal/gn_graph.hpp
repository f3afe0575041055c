#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pal/factors.hpp"
#include "pal/word.hpp"

namespace pal {

/// Undirected multigraph on reversal classes {w, mirror(w)} of special
/// length-n factors; edges are reversal classes {e, mirror(e)} of n-simple
/// paths. A path between w and mirror(w) is a loop at their shared vertex.
struct GnGraph {
    std::size_t n = 0;
    bool degenerate = false;
    Alphabet alphabet;

    struct Vertex {
        std::string small;  // lexicographically smaller class member (symbol bytes)
        std::string large;
    };
    std::vector<Vertex> vertices;  // sorted by small member

    struct Edge {
        std::uint32_t u = 0, v = 0;  // vertex ids, u <= v
        std::string path;            // canonical min(e, mirror(e)) symbol bytes
        bool loop = false;
        bool palindromic = false;
    };
    std::vector<Edge> edges;    // one entry per distinct path class
    std::size_t truncated = 0;  // unclosed tail segment at the prefix end
};

GnGraph build_gn(const FactorIndex& idx, std::size_t n);

struct GnCheckReport {
    std::size_t n = 0;
    bool skipped = false;  // degenerate graph
    std::string reason;
    bool tree_after_loop_removal = false;
    bool loops_palindromic = false;
    long long t_value = 0;
    bool equivalence_pass = false;  // (T(n)==0) == (tree && palindromic loops)
};

GnCheckReport check_gn(const GnGraph& g, long long t_value);

/// One line per edge: vertex_a<TAB>vertex_b<TAB>path_word<TAB>loop|tree.
std::string gn_adjacency_text(const GnGraph& g);

/// DOT export; node label is the smaller member of the reversal class.
std::string gn_dot(const GnGraph& g);

}  // namespace pal
