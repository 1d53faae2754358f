#pragma once

#include <string>
#include <vector>

#include "stt/quiver.hpp"

namespace stt::schur {

// Partitions: weakly decreasing positive parts; serialized "6,5".
using Partition = std::vector<int>;

Partition parse_partition(const std::string& s);
std::string partition_str(const Partition& lam);
bool is_partition(const Partition& lam);
int partition_sum(const Partition& lam);

// p-core by repeated rim p-hook removal (beta-number implementation; the
// result is recomputed by direct rim-hook stripping and must agree).
Partition p_core(const Partition& lam, uint32_t p);

// Henke's digit functions. f counts products of binomials over p-adic
// digits; g and h test f(...) == 1.
long long henke_f(long long s, long long t, uint32_t p);
int henke_g(long long s, long long t, uint32_t p);
int henke_h(long long s, long long t, uint32_t p);

// Constituents chi^{(r-i,i)} of ch Y^{(r-k,k)}, as the list of partitions
// (r-i,i), i ascending. Requires 0 <= k <= r/2.
std::vector<Partition> young_character(uint32_t p, int r, int k);

// Number of arrows (0 or 1) between the vertices v^s and v^t of the quiver
// of S(2,r); symmetric in s,t.
int eh_arrow(uint32_t p, long long s, long long t);

// The quiver of the basic algebra of S(2,r): one vertex per two-part
// partition of r, an arrow pair per eh_arrow == 1, plus the block split.
struct S2RQuiver {
    Quiver quiver;                          // vertices labeled "r-k,k"
    std::vector<Partition> vertex_labels;   // by vertex index
    std::vector<Partition> cores;           // p-core per vertex
    std::vector<std::vector<int>> blocks;   // connected components
};
S2RQuiver s2r_quiver(uint32_t p, int r);

enum class Verdict { Semisimple, Finite, Tame, WildFinite, WildInfinite, Open };

std::string verdict_name(Verdict v);
// Single letter grid cell: S, F, T, W+, W-, W?
std::string verdict_cell(Verdict v);
// tau-tilting finite? (Open -> unknown, reported separately)
bool verdict_tau_finite(Verdict v);

struct Classification {
    Verdict verdict;
    std::string rule;  // provenance of the decision
};

// Representation-type / tau-tilting-finiteness classification of S(n,r).
// p = 0 means characteristic zero.
Classification classify(uint32_t p, int n, int r);

}  // namespace stt::schur
