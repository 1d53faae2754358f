#pragma once

#include <optional>

#include "stt/quiver.hpp"

namespace stt {

// The separated quiver: bipartite graph on {v} u {v'} with an edge v -- w'
// per arrow v -> w; multi-edges kept.
struct SeparatedQuiver {
    int n = 0;                              // vertices of the original quiver
    std::vector<std::pair<int, int>> edges; // (v, w') as (v, n + w)
};
SeparatedQuiver separated_quiver(const Quiver& q);

// Is this undirected graph a disjoint union of simply laced Dynkin diagrams
// (A_n, D_n, E6, E7, E8)? Multi-edges fail immediately.
bool is_dynkin_union(int n, const std::vector<std::pair<int, int>>& edges);

// A/rad^2 A is tau-tilting finite iff the separated quiver is a disjoint
// union of Dynkin diagrams; false certifies A itself tau-tilting infinite.
bool rad_square_zero_finite(const Quiver& q);

enum class InfinitePattern { Kronecker, Q1, Q2, Q3 };
std::string pattern_name(InfinitePattern p);

struct PatternWitness {
    InfinitePattern pattern;
    std::vector<std::string> vertices;  // host vertex names, pattern order
};

// First match (in Kronecker, Q1, Q2, Q3 order) of a tau-tilting infinite
// pattern as an exact subquiver, or nullopt.
std::optional<PatternWitness> contains_infinite_subquiver(const Quiver& q);

}  // namespace stt
