#pragma once

// Brute-force support tau-tilting enumeration straight from the definition:
// enumerate all representations up to the regular module's dimension vector,
// keep one representative per isomorphism class of indecomposables, and test
// every candidate summand set. Independent of the mutation machinery; uses
// the literal Hom(M, tau M) = 0 route for rigidity.

#include <set>

#include "stt/rep.hpp"

namespace stt::oracle {

inline std::vector<int> regular_dims(const BoundAlgebra& a) {
    std::vector<int> d(a.num_vertices(), 0);
    for (const auto& b : a.basis()) d[b.target]++;
    return d;
}

inline bool nontrivial_idempotent(const RepHom& e) {
    bool idem = true, zero = true, ident = true;
    for (size_t v = 0; v < e.f.size(); ++v) {
        if (!(e.f[v].mul(e.f[v]) == e.f[v])) idem = false;
        if (!e.f[v].is_zero()) zero = false;
        if (!e.f[v].is_identity()) ident = false;
    }
    return idem && !zero && !ident;
}

inline bool brute_indecomposable(const Rep& m) {
    if (m.is_zero()) return false;
    auto homs = hom_basis(m, m);
    uint32_t p = m.A->characteristic();
    size_t h = homs.size();
    // quick scan of singles and pairs first: decomposables usually expose a
    // projection idempotent immediately
    auto make = [&](std::initializer_list<std::pair<size_t, uint32_t>> terms) {
        RepHom e;
        for (int d : m.dims) e.f.push_back(Matrix(d, d, p));
        for (auto [i, ci] : terms)
            for (size_t v = 0; v < e.f.size(); ++v) e.f[v] = e.f[v].add(homs[i].f[v].scaled(ci));
        return e;
    };
    for (size_t i = 0; i < h; ++i)
        for (uint32_t c = 1; c < p; ++c)
            if (nontrivial_idempotent(make({{i, c}}))) return false;
    for (size_t i = 0; i < h; ++i)
        for (size_t j = i + 1; j < h; ++j)
            for (uint32_t c1 = 1; c1 < p; ++c1)
                for (uint32_t c2 = 1; c2 < p; ++c2)
                    if (nontrivial_idempotent(make({{i, c1}, {j, c2}}))) return false;
    if (h > 18) throw std::runtime_error("oracle: End too large to enumerate");
    uint64_t total = 1;
    for (size_t i = 0; i < h; ++i) total *= p;
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        RepHom e;
        for (int d : m.dims) e.f.push_back(Matrix(d, d, p));
        for (size_t i = 0; i < h; ++i) {
            uint32_t ci = uint32_t(c % p);
            c /= p;
            if (!ci) continue;
            for (size_t v = 0; v < e.f.size(); ++v) e.f[v] = e.f[v].add(homs[i].f[v].scaled(ci));
        }
        if (nontrivial_idempotent(e)) return false;
    }
    return true;
}

inline bool brute_isomorphic(const Rep& x, const Rep& y) {
    if (x.dims != y.dims) return false;
    auto homs = hom_basis(x, y);
    uint32_t p = x.A->characteristic();
    size_t h = homs.size();
    if (h > 18) throw std::runtime_error("oracle: Hom too large to enumerate");
    uint64_t total = 1;
    for (size_t i = 0; i < h; ++i) total *= p;
    for (uint64_t code = 1; code < total; ++code) {
        uint64_t c = code;
        RepHom e;
        for (size_t v = 0; v < x.dims.size(); ++v)
            e.f.push_back(Matrix(x.dims[v], y.dims[v], p));
        for (size_t i = 0; i < h; ++i) {
            uint32_t ci = uint32_t(c % p);
            c /= p;
            if (!ci) continue;
            for (size_t v = 0; v < e.f.size(); ++v) e.f[v] = e.f[v].add(homs[i].f[v].scaled(ci));
        }
        bool inv = true;
        for (size_t v = 0; v < e.f.size(); ++v)
            if (e.f[v].rank() != x.dims[v]) inv = false;
        if (inv) return true;
    }
    return false;
}

// All indecomposable representations up to iso, dims bounded by the regular
// module. Only sensible for tiny algebras over F_2.
inline std::vector<Rep> all_indecomposables(const BoundAlgebra& a) {
    if (a.characteristic() != 2) throw std::runtime_error("oracle: F_2 only");
    std::vector<int> bound = regular_dims(a);
    int nv = a.num_vertices();
    const Quiver& q = a.quiver();
    std::vector<Rep> found;
    // iterate dimension vectors
    std::vector<int> dims(nv, 0);
    auto next_dims = [&]() {
        for (int v = 0; v < nv; ++v) {
            if (dims[v] < bound[v]) {
                dims[v]++;
                for (int w = 0; w < v; ++w) dims[w] = 0;
                return true;
            }
        }
        return false;
    };
    while (next_dims()) {
        // enumerate all arrow matrices over F_2
        std::vector<int> bits;
        for (const auto& ar : q.arrows) bits.push_back(dims[ar.from] * dims[ar.to]);
        int total_bits = 0;
        for (int b : bits) total_bits += b;
        if (total_bits > 24) throw std::runtime_error("oracle: search space too large");
        for (uint64_t code = 0; code < (1ull << total_bits); ++code) {
            Rep r = Rep::zero(a);
            r.dims = dims;
            uint64_t c = code;
            for (int ar = 0; ar < q.num_arrows(); ++ar) {
                Matrix x(dims[q.arrows[ar].from], dims[q.arrows[ar].to], 2);
                for (auto& cell : x.a) {
                    cell = uint32_t(c & 1);
                    c >>= 1;
                }
                r.act[ar] = x;
            }
            try {
                r.validate();
            } catch (const DataError&) {
                continue;
            }
            if (!brute_indecomposable(r)) continue;
            bool known = false;
            for (const auto& f : found)
                if (brute_isomorphic(f, r)) {
                    known = true;
                    break;
                }
            if (!known) found.push_back(r);
        }
    }
    return found;
}

struct BruteResult {
    long long total = 0;
    std::vector<long long> by_rank;
    std::multiset<std::vector<std::vector<int>>> dim_multisets;
};

// every subset of indecomposables, filtered by Definition 2.1
inline BruteResult brute_stt(const BoundAlgebra& a) {
    auto indecs = all_indecomposables(a);
    int nv = a.num_vertices();
    BruteResult res;
    res.by_rank.assign(nv + 1, 0);
    size_t n = indecs.size();
    if (n > 20) throw std::runtime_error("oracle: too many indecomposables");
    for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
        std::vector<const Rep*> chosen;
        for (size_t i = 0; i < n; ++i)
            if (mask & (1ull << i)) chosen.push_back(&indecs[i]);
        std::set<int> support;
        for (const Rep* r : chosen)
            for (int v = 0; v < nv; ++v)
                if (r->dims[v]) support.insert(v);
        if (chosen.size() != support.size()) continue;  // |M| must equal #supp
        Rep sum = Rep::direct_sum(a, chosen);
        if (!sum.is_zero() && !is_tau_rigid_literal(sum)) continue;
        res.total++;
        res.by_rank[int(chosen.size())]++;
        std::vector<std::vector<int>> dimset;
        for (const Rep* r : chosen) dimset.push_back(r->dims);
        std::sort(dimset.begin(), dimset.end());
        res.dim_multisets.insert(dimset);
    }
    return res;
}

}  // namespace stt::oracle
