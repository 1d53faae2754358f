#include "stt/mutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace stt {

std::string gvec_str(const GVec& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(g[i]);
    }
    return s + ")";
}

std::vector<std::vector<int>> SttPair::dim_vectors() const {
    std::vector<std::vector<int>> d;
    for (const auto& m : mods) d.push_back(m.rep.dims);
    std::sort(d.begin(), d.end());
    return d;
}

namespace {

std::string key_of(const std::vector<GVec>& gs, const std::vector<int>& pverts, int nv) {
    std::vector<GVec> all = gs;
    for (int v : pverts) {
        GVec e(nv, 0);
        e[v] = -1;
        all.push_back(e);
    }
    std::sort(all.begin(), all.end());
    std::string s;
    for (const auto& g : all) s += gvec_str(g);
    return s;
}

Rep sum_of(const BoundAlgebra& a, const std::vector<PairSummand>& mods) {
    std::vector<const Rep*> parts;
    for (const auto& m : mods) parts.push_back(&m.rep);
    return Rep::direct_sum(a, parts);
}

// block-diagonal presentation of the direct sum
Presentation sum_presentation(const BoundAlgebra& a, const std::vector<PairSummand>& mods) {
    Presentation pr;
    for (const auto& m : mods) {
        for (int v : m.pres.p1) pr.p1.push_back(v);
        for (int v : m.pres.p0) pr.p0.push_back(v);
    }
    int p0_total = int(pr.p0.size());
    int p0_off = 0;
    for (const auto& m : mods) {
        for (size_t s = 0; s < m.pres.p1.size(); ++s) {
            std::vector<Vec> row(p0_total, Vec(a.dim(), 0));
            for (size_t t = 0; t < m.pres.p0.size(); ++t) row[p0_off + int(t)] = m.pres.y[s][t];
            pr.y.push_back(row);
        }
        p0_off += int(m.pres.p0.size());
    }
    return pr;
}

}  // namespace

SttPair make_stt_pair(const BoundAlgebra& a, std::vector<Rep> summands, bool validate) {
    SttPair t;
    for (auto& r : summands) {
        PairSummand s;
        s.pres = minimal_presentation(r);
        s.g.assign(a.num_vertices(), 0);
        for (int v : s.pres.p0) s.g[v]++;
        for (int v : s.pres.p1) s.g[v]--;
        s.rep = std::move(r);
        t.mods.push_back(std::move(s));
    }
    std::sort(t.mods.begin(), t.mods.end(),
              [](const PairSummand& x, const PairSummand& y) { return x.g < y.g; });
    std::set<int> support;
    for (const auto& m : t.mods)
        for (int v = 0; v < a.num_vertices(); ++v)
            if (m.rep.dims[v] > 0) support.insert(v);
    for (int v = 0; v < a.num_vertices(); ++v)
        if (!support.count(v)) t.pverts.push_back(v);
    std::vector<GVec> gs;
    for (const auto& m : t.mods) gs.push_back(m.g);
    t.key = key_of(gs, t.pverts, a.num_vertices());
    if (validate) {
        if (int(t.mods.size()) + int(t.pverts.size()) != a.num_vertices())
            throw BuildError("pair violates |M| + |P| = |A|");
        for (size_t i = 1; i < t.mods.size(); ++i)
            if (t.mods[i - 1].g == t.mods[i].g) throw BuildError("pair with repeated g-vector");
        if (!t.mods.empty()) {
            Rep sum = sum_of(a, t.mods);
            Presentation pr = sum_presentation(a, t.mods);
            if (!hom_tau_vanishes(pr, sum)) throw BuildError("pair module part not tau-rigid");
        }
    }
    return t;
}

SttPair initial_pair(const BoundAlgebra& a, bool validate) {
    std::vector<Rep> projs;
    for (int v = 0; v < a.num_vertices(); ++v) projs.push_back(Rep::projective(a, v));
    return make_stt_pair(a, std::move(projs), validate);
}

bool fac_contains(const std::vector<const Rep*>& targets, const Rep& m) {
    if (m.is_zero()) return true;
    if (targets.empty()) return false;
    const BoundAlgebra& a = *m.A;
    for (size_t v = 0; v < m.dims.size(); ++v) {
        if (m.dims[v] == 0) continue;
        Matrix stacked(0, m.dims[v], a.characteristic());
        for (const Rep* t : targets)
            for (const auto& h : hom_basis(*t, m))
                if (h.f[v].rows > 0) stacked = stacked.vstack(h.f[v]);
        if (stacked.rank() != m.dims[v]) return false;
    }
    return true;
}

namespace {

// the approximation property for the candidate component list
bool is_left_approx(const Rep& m, const std::vector<const Rep*>& targets,
                    const std::vector<std::pair<int, RepHom>>& comps,
                    const std::vector<std::vector<RepHom>>& homs_mt,
                    const std::vector<std::vector<std::vector<RepHom>>>& homs_tt) {
    const BoundAlgebra& a = *m.A;
    uint32_t p = a.characteristic();
    for (size_t j = 0; j < targets.size(); ++j) {
        int hj = int(homs_mt[j].size());
        if (hj == 0) continue;
        // flatten Hom(M, T_j) coordinates
        int flat = 0;
        for (size_t v = 0; v < m.dims.size(); ++v) flat += m.dims[v] * targets[j]->dims[v];
        auto flatten = [&](const RepHom& h) {
            Vec out;
            out.reserve(flat);
            for (const auto& f : h.f)
                for (uint32_t c : f.a) out.push_back(c);
            return out;
        };
        std::vector<Vec> basis_rows;
        for (const auto& h : homs_mt[j]) basis_rows.push_back(flatten(h));
        Matrix basis_m = Matrix::from_rows(basis_rows, flat, p);
        std::vector<Vec> got;
        for (const auto& [i, phi] : comps) {
            for (const auto& psi : homs_tt[i][j]) {
                RepHom comp;
                for (size_t v = 0; v < m.dims.size(); ++v) comp.f.push_back(phi.f[v].mul(psi.f[v]));
                got.push_back(flatten(comp));
            }
        }
        if (got.empty()) return false;
        Matrix got_m = Matrix::from_rows(got, flat, p);
        if (got_m.rank() != basis_m.rank()) return false;
    }
    return true;
}

}  // namespace

LeftApprox min_left_approx(const Rep& m, const std::vector<const Rep*>& targets) {
    const BoundAlgebra& a = *m.A;
    std::vector<std::vector<RepHom>> homs_mt;
    std::vector<std::vector<std::vector<RepHom>>> homs_tt(targets.size());
    for (size_t i = 0; i < targets.size(); ++i) homs_mt.push_back(hom_basis(m, *targets[i]));
    for (size_t i = 0; i < targets.size(); ++i)
        for (size_t j = 0; j < targets.size(); ++j)
            homs_tt[i].push_back(hom_basis(*targets[i], *targets[j]));

    // start from the full Hom-basis stack; strip copies in canonical order
    std::vector<std::pair<int, RepHom>> comps;
    for (size_t i = 0; i < targets.size(); ++i)
        for (const auto& h : homs_mt[i]) comps.emplace_back(int(i), h);
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t c = 0; c < comps.size(); ++c) {
            std::vector<std::pair<int, RepHom>> cand = comps;
            cand.erase(cand.begin() + c);
            if (is_left_approx(m, targets, cand, homs_mt, homs_tt)) {
                comps = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    if (!is_left_approx(m, targets, comps, homs_mt, homs_tt))
        throw BuildError("internal: approximation lost during stripping");

    LeftApprox out;
    std::vector<const Rep*> parts;
    for (const auto& [i, h] : comps) {
        out.copies.push_back(i);
        parts.push_back(targets[i]);
    }
    out.codomain = Rep::direct_sum(a, parts);
    RepHom f;
    for (size_t v = 0; v < m.dims.size(); ++v) {
        Matrix fv(m.dims[v], out.codomain.dims[v], a.characteristic());
        int co = 0;
        for (const auto& [i, h] : comps) {
            for (int r = 0; r < m.dims[v]; ++r)
                for (int c2 = 0; c2 < targets[i]->dims[v]; ++c2)
                    fv.at(r, co + c2) = h.f[v].at(r, c2);
            co += targets[i]->dims[v];
        }
        f.f.push_back(fv);
    }
    out.map = f;

    // left-minimality check: f is minimal iff {eta in End(N') : f.eta = 0}
    // is a nil right ideal (nil one-sided ideals lie in the radical); a
    // non-nilpotent kernel element certifies a wasted summand

    if (!comps.empty()) {
        uint32_t p = a.characteristic();
        struct Blk {
            int ci, cj;
            const RepHom* psi;
        };
        std::vector<Blk> blocks;
        for (size_t ci = 0; ci < comps.size(); ++ci)
            for (size_t cj = 0; cj < comps.size(); ++cj)
                for (const auto& psi : homs_tt[comps[ci].first][comps[cj].first])
                    blocks.push_back({int(ci), int(cj), &psi});
        // f∘eta components: for column copy cj: sum_ci phi_ci ∘ psi_{ci,cj}
        int flat = 0;
        for (size_t v = 0; v < m.dims.size(); ++v) flat += m.dims[v] * out.codomain.dims[v];
        std::vector<Vec> cols;
        for (const auto& b : blocks) {
            Vec col(flat, 0);
            int pos = 0;
            for (size_t v = 0; v < m.dims.size(); ++v) {
                Matrix contrib = comps[b.ci].second.f[v].mul(b.psi->f[v]);
                // place into the cj block of the codomain columns
                int co = 0;
                for (int k = 0; k < b.cj; ++k) co += targets[comps[k].first]->dims[v];
                for (int r = 0; r < m.dims[v]; ++r)
                    for (int c2 = 0; c2 < contrib.cols; ++c2)
                        col[pos + r * out.codomain.dims[v] + co + c2] = contrib.at(r, c2);
                pos += m.dims[v] * out.codomain.dims[v];
            }
            cols.push_back(col);
        }
        if (!blocks.empty()) {
            Matrix sys = Matrix::from_rows(cols, flat, p);  // rows = block coords
            Matrix lk = sys.left_kernel();                  // combos with f∘eta = 0
            int lg = 1;
            while ((1 << lg) < std::max(out.codomain.total_dim(), 2)) ++lg;
            for (int r = 0; r < lk.rows; ++r) {
                // assemble eta on the codomain and test nilpotency
                std::vector<Matrix> eta;
                for (size_t v = 0; v < m.dims.size(); ++v)
                    eta.push_back(Matrix(out.codomain.dims[v], out.codomain.dims[v], p));
                for (size_t bi = 0; bi < blocks.size(); ++bi) {
                    uint32_t c = lk.at(r, int(bi));
                    if (!c) continue;
                    const Blk& b = blocks[bi];
                    for (size_t v = 0; v < m.dims.size(); ++v) {
                        int ro = 0, co = 0;
                        for (int k = 0; k < b.ci; ++k) ro += targets[comps[k].first]->dims[v];
                        for (int k = 0; k < b.cj; ++k) co += targets[comps[k].first]->dims[v];
                        const Matrix& psi = b.psi->f[v];
                        for (int i2 = 0; i2 < psi.rows; ++i2)
                            for (int j2 = 0; j2 < psi.cols; ++j2)
                                eta[v].at(ro + i2, co + j2) =
                                    fp::add(eta[v].at(ro + i2, co + j2), fp::mul(c, psi.at(i2, j2), p), p);
                    }
                }
                int rank = 0;
                for (size_t v = 0; v < m.dims.size(); ++v) rank += eta[v].pow(1ll << lg).rank();
                if (rank != 0) throw BuildError("left approximation not minimal");
            }
        }
    }
    out.coker = cokernel_rep(out.codomain, out.map);
    return out;
}

bool left_mutable(const SttPair& t, int k) {
    std::vector<const Rep*> rest;
    for (size_t i = 0; i < t.mods.size(); ++i)
        if (int(i) != k) rest.push_back(&t.mods[i].rep);
    return !fac_contains(rest, t.mods[k].rep);
}

SttPair left_mutate(const BoundAlgebra& a, const SttPair& t, int k, bool validate) {
    if (k < 0 || k >= int(t.mods.size())) throw DataError("mutation index out of range");
    std::vector<const Rep*> rest;
    std::vector<Rep> new_summands;
    for (size_t i = 0; i < t.mods.size(); ++i) {
        if (int(i) == k) continue;
        rest.push_back(&t.mods[i].rep);
        new_summands.push_back(t.mods[i].rep);
    }
    if (fac_contains(rest, t.mods[k].rep)) throw DataError("not a left-mutable position");
    LeftApprox ap = min_left_approx(t.mods[k].rep, rest);
    if (!ap.coker.is_zero()) {
        auto parts = decompose(ap.coker);
        int count = 0;
        for (auto& s : parts) count += s.multiplicity;
        if (count != 1) throw BuildError("mutation cokernel not indecomposable");
        new_summands.push_back(std::move(parts[0].rep));
    }
    return make_stt_pair(a, std::move(new_summands), validate);
}

HasseGraph enumerate_stt(const BoundAlgebra& a, const EnumerateOptions& opts) {
    if (opts.budget < 1) throw DataError("budget must be >= 1");
    HasseGraph g;
    g.algebra_name = opts.algebra_name;
    g.characteristic = a.characteristic();
    std::map<std::string, int> index;
    std::vector<SttPair> pairs;

    auto add_node = [&](SttPair&& t) {
        auto it = index.find(t.key);
        if (it != index.end()) {
            if (pairs[it->second].dim_vectors() != t.dim_vectors())
                throw BuildError("g-key collision with different dimension vectors");
            return it->second;
        }
        int id = int(g.nodes.size());
        index[t.key] = id;
        HasseGraph::Node n;
        n.key = t.key;
        n.rank = t.support_rank();
        n.dims = t.dim_vectors();
        g.nodes.push_back(std::move(n));
        pairs.push_back(std::move(t));
        return id;
    };

    add_node(initial_pair(a, opts.validate_nodes));
    size_t frontier_begin = 0;
    bool exceeded = int(g.nodes.size()) >= opts.budget;
    while (frontier_begin < pairs.size() && !exceeded) {
        size_t frontier_end = pairs.size();
        struct Expansion {
            int from, pos;
            SttPair pair;
        };
        std::vector<std::vector<Expansion>> results(frontier_end - frontier_begin);
        auto expand = [&](size_t lo, size_t hi) {
            for (size_t idx = lo; idx < hi; ++idx) {
                const SttPair& t = pairs[frontier_begin + idx];
                for (int k = 0; k < int(t.mods.size()); ++k) {
                    if (!left_mutable(t, k)) continue;
                    SttPair nxt = left_mutate(a, t, k, opts.validate_nodes);
                    results[idx].push_back({int(frontier_begin + idx), k, std::move(nxt)});
                }
            }
        };
        int jobs = std::max(1, opts.jobs);
        size_t count = frontier_end - frontier_begin;
        if (jobs == 1 || count < 2) {
            expand(0, count);
        } else {
            std::vector<std::thread> threads;
            size_t chunk = (count + jobs - 1) / jobs;
            for (int w = 0; w < jobs; ++w) {
                size_t lo = std::min(count, size_t(w) * chunk);
                size_t hi = std::min(count, size_t(w + 1) * chunk);
                if (lo < hi) threads.emplace_back(expand, lo, hi);
            }
            for (auto& th : threads) th.join();
        }
        // merge in frontier order; the budget cut point is the same whatever
        // the worker count, so the produced graph is schedule-independent
        for (auto& res : results) {
            for (auto& e : res) {
                int to = add_node(std::move(e.pair));
                g.edges.push_back({e.from, to, e.pos});
                if (int(g.nodes.size()) >= opts.budget) {
                    exceeded = true;
                    break;
                }
            }
            if (exceeded) break;
        }
        frontier_begin = frontier_end;
    }
    g.complete = !exceeded;
    if (g.complete) g.validate_complete(a.num_vertices());
    return g;
}

void HasseGraph::validate_complete(int n_vertices) const {
    std::vector<int> deg(nodes.size(), 0), indeg(nodes.size(), 0), outdeg(nodes.size(), 0);
    for (const auto& e : edges) {
        deg[e.from]++;
        deg[e.to]++;
        outdeg[e.from]++;
        indeg[e.to]++;
    }
    int sources = 0, sinks = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (deg[i] != n_vertices) throw BuildError("Hasse regularity violated");
        if (indeg[i] == 0) sources++;
        if (outdeg[i] == 0) sinks++;
    }
    if (sources != 1 || sinks != 1) throw BuildError("Hasse source/sink not unique");
}

std::vector<long long> strata_counts(const HasseGraph& g, int n_vertices) {
    if (!g.complete) throw DataError("incomplete graph");
    std::vector<long long> a(n_vertices + 1, 0);
    for (const auto& n : g.nodes) a[n.rank]++;
    return a;
}

std::string HasseGraph::to_json() const {
    nlohmann::ordered_json j;
    j["algebra"] = algebra_name;
    j["char"] = characteristic;
    j["status"] = complete ? "complete" : "budget-exceeded";
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return nodes[x].key < nodes[y].key; });
    nlohmann::ordered_json nj = nlohmann::ordered_json::array();
    for (int i : order) {
        nlohmann::ordered_json n;
        n["key"] = nodes[i].key;
        n["rank"] = nodes[i].rank;
        n["dims"] = nodes[i].dims;
        nj.push_back(n);
    }
    j["nodes"] = nj;
    std::vector<Edge> es = edges;
    std::sort(es.begin(), es.end(), [&](const Edge& x, const Edge& y) {
        auto kx = std::make_tuple(nodes[x.from].key, nodes[x.to].key, x.pos);
        auto ky = std::make_tuple(nodes[y.from].key, nodes[y.to].key, y.pos);
        return kx < ky;
    });
    nlohmann::ordered_json ej = nlohmann::ordered_json::array();
    for (const auto& e : es) {
        nlohmann::ordered_json x;
        x["from"] = nodes[e.from].key;
        x["to"] = nodes[e.to].key;
        x["pos"] = e.pos;
        ej.push_back(x);
    }
    j["edges"] = ej;
    return j.dump(2) + "\n";
}

std::string HasseGraph::to_dot() const {
    std::ostringstream os;
    os << "digraph sttilt {\n";
    os << "  rankdir=LR;\n";
    std::vector<int> order(nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i) order[i] = int(i);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return nodes[x].key < nodes[y].key; });
    for (int i : order)
        os << "  \"" << nodes[i].key << "\" [label=\"" << nodes[i].key << "\\nrank "
           << nodes[i].rank << "\", rank=" << nodes[i].rank << "];\n";
    std::vector<Edge> es = edges;
    std::sort(es.begin(), es.end(), [&](const Edge& x, const Edge& y) {
        auto kx = std::make_tuple(nodes[x.from].key, nodes[x.to].key, x.pos);
        auto ky = std::make_tuple(nodes[y.from].key, nodes[y.to].key, y.pos);
        return kx < ky;
    });
    for (const auto& e : es)
        os << "  \"" << nodes[e.from].key << "\" -> \"" << nodes[e.to].key << "\";\n";
    os << "}\n";
    return os.str();
}

bool leq(const BoundAlgebra& a, const SttPair& t1, const SttPair& t2) {
    std::set<int> p1(t1.pverts.begin(), t1.pverts.end());
    for (int v : t2.pverts)
        if (!p1.count(v)) return false;  // add(P2) must sit inside add(P1)
    if (t2.mods.empty()) return true;    // tau of 0 part vacuous; t2 = (0,A) minimum
    if (t1.mods.empty()) return true;
    Rep n = sum_of(a, t1.mods);
    Presentation pm = sum_presentation(a, t2.mods);
    return hom_tau_vanishes(pm, n);
}

namespace {

std::vector<int> refine_colors(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<long long> color(n, 0);
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<long long>> sig(n);
        for (int v = 0; v < n; ++v) sig[v].push_back(color[v]);
        std::vector<std::vector<long long>> outs(n), ins(n);
        for (auto [x, y] : edges) {
            outs[x].push_back(color[y]);
            ins[y].push_back(color[x]);
        }
        for (int v = 0; v < n; ++v) {
            std::sort(outs[v].begin(), outs[v].end());
            std::sort(ins[v].begin(), ins[v].end());
            sig[v].push_back(-1);
            sig[v].insert(sig[v].end(), outs[v].begin(), outs[v].end());
            sig[v].push_back(-2);
            sig[v].insert(sig[v].end(), ins[v].begin(), ins[v].end());
        }
        std::map<std::vector<long long>, long long> relabel;
        for (int v = 0; v < n; ++v) relabel.emplace(sig[v], 0);
        long long next = 0;
        for (auto& [k, v] : relabel) v = next++;
        std::vector<long long> nc(n);
        for (int v = 0; v < n; ++v) nc[v] = relabel[sig[v]];
        if (nc == color) break;
        color = nc;
    }
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v) out[v] = int(color[v]);
    return out;
}

bool match_backtrack(int n, const std::set<std::pair<int, int>>& e1set,
                     const std::set<std::pair<int, int>>& e2set, const std::vector<int>& c1,
                     const std::vector<int>& c2, std::vector<int>& map12, std::vector<bool>& used,
                     int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w] || c1[v] != c2[w]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) {
            bool f1 = e1set.count({v, u}) > 0, b1 = e1set.count({u, v}) > 0;
            bool f2 = e2set.count({w, map12[u]}) > 0, b2 = e2set.count({map12[u], w}) > 0;
            if (f1 != f2 || b1 != b2) ok = false;
        }
        if (!ok) continue;
        map12[v] = w;
        used[w] = true;
        if (match_backtrack(n, e1set, e2set, c1, c2, map12, used, v + 1)) return true;
        used[w] = false;
        map12[v] = -1;
    }
    return false;
}

}  // namespace

bool digraph_isomorphic(int n1, const std::vector<std::pair<int, int>>& e1, int n2,
                        const std::vector<std::pair<int, int>>& e2) {
    if (n1 != n2 || e1.size() != e2.size()) return false;
    std::vector<int> c1 = refine_colors(n1, e1), c2 = refine_colors(n2, e2);
    std::vector<int> h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return false;
    std::set<std::pair<int, int>> e1set(e1.begin(), e1.end()), e2set(e2.begin(), e2.end());
    std::vector<int> map12(n1, -1);
    std::vector<bool> used(n1, false);
    return match_backtrack(n1, e1set, e2set, c1, c2, map12, used, 0);
}

bool hasse_isomorphic_reversed(const BoundAlgebra& a, long long budget) {
    EnumerateOptions opts;
    opts.budget = budget;
    HasseGraph h = enumerate_stt(a, opts);
    if (!h.complete) throw DataError("budget exceeded while enumerating");
    BoundAlgebra op = a.opposite();
    HasseGraph hop = enumerate_stt(op, opts);
    if (!hop.complete) throw DataError("budget exceeded while enumerating opposite");
    std::vector<std::pair<int, int>> e1, e2;
    for (const auto& e : h.edges) e1.push_back({e.to, e.from});  // reversed
    for (const auto& e : hop.edges) e2.push_back({e.from, e.to});
    return digraph_isomorphic(int(h.nodes.size()), e1, int(hop.nodes.size()), e2);
}

}  // namespace stt
