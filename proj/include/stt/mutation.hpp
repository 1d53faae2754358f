#pragma once

#include <map>

#include "stt/rep.hpp"

namespace stt {

using GVec = std::vector<long long>;
std::string gvec_str(const GVec& g);

// One indecomposable summand of a support tau-tilting pair, with its cached
// minimal presentation and g-vector.
struct PairSummand {
    Rep rep;
    Presentation pres;
    GVec g;
};

// A support tau-tilting pair (M, P). P is determined by the support: it is
// the sum of the projectives at vertices where M vanishes. The canonical key
// is the sorted list of summand g-vectors together with -e_j per P-vertex.
struct SttPair {
    std::vector<PairSummand> mods;  // sorted by g-vector
    std::vector<int> pverts;
    std::string key;

    int support_rank() const { return int(mods.size()); }
    std::vector<std::vector<int>> dim_vectors() const;
};

SttPair make_stt_pair(const BoundAlgebra& a, std::vector<Rep> summands, bool validate);
SttPair initial_pair(const BoundAlgebra& a, bool validate = true);

// M in Fac(N)? The evaluation map from copies of the targets onto m must be
// surjective.
bool fac_contains(const std::vector<const Rep*>& targets, const Rep& m);

// Minimal left add(targets)-approximation of m: the map, its codomain, and
// the cokernel. Built by stacking a Hom-basis map and greedily stripping
// summand copies in canonical order while the approximation property holds;
// a final check certifies left-minimality.
struct LeftApprox {
    std::vector<int> copies;  // indices into targets, with multiplicity
    Rep codomain;
    RepHom map;  // m -> codomain
    Rep coker;
};
LeftApprox min_left_approx(const Rep& m, const std::vector<const Rep*>& targets);

// Left mutation at summand k; requires mods[k] not in Fac(rest).
SttPair left_mutate(const BoundAlgebra& a, const SttPair& t, int k, bool validate = true);
bool left_mutable(const SttPair& t, int k);

struct HasseGraph {
    struct Node {
        std::string key;
        int rank = 0;
        std::vector<std::vector<int>> dims;  // sorted summand dimension vectors
    };
    struct Edge {
        int from = 0;
        int to = 0;
        int pos = 0;  // mutated summand index in the from-node
    };
    std::string algebra_name;
    uint32_t characteristic = 2;
    bool complete = false;
    std::vector<Node> nodes;  // discovery (BFS) order; node 0 is (A, 0)
    std::vector<Edge> edges;

    std::string to_json() const;
    std::string to_dot() const;
    // Degree regularity, unique source and sink; throws on violation.
    void validate_complete(int n_vertices) const;
};

struct EnumerateOptions {
    long long budget = 100000;
    int jobs = 1;
    bool validate_nodes = true;
    std::string algebra_name = "algebra";
};

HasseGraph enumerate_stt(const BoundAlgebra& a, const EnumerateOptions& opts = {});

// a_s = number of nodes with support rank s; requires a complete graph.
std::vector<long long> strata_counts(const HasseGraph& g, int n_vertices);

// The partial order: t1 <= t2 iff Hom(M1, tau M2) = 0 and the projective
// part of t2 is contained in the projective part of t1.
bool leq(const BoundAlgebra& a, const SttPair& t1, const SttPair& t2);

// Does reversing every Hasse edge of A give the Hasse quiver of A^op?
bool hasse_isomorphic_reversed(const BoundAlgebra& a, long long budget = 100000);

bool digraph_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1, int n2,
                        const std::vector<std::pair<int, int>>& e2);

}  // namespace stt
