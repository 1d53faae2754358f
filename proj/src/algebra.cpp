#include "stt/algebra.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace stt {

namespace {

constexpr size_t kPathLimit = 3'000'000;

struct PathTable {
    // key: [source, arrow indices...] -> global index
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> keys;  // global index -> key
    std::vector<int> source, target, length;
    std::vector<std::vector<int>> by_target;  // vertex -> paths ending there
    std::vector<std::vector<int>> by_source;

    int lookup(const std::vector<int>& key) const {
        auto it = index.find(key);
        return it == index.end() ? -1 : it->second;
    }
};

PathTable enumerate_paths(const Quiver& q, int cap) {
    PathTable t;
    t.by_target.resize(q.num_vertices());
    t.by_source.resize(q.num_vertices());
    auto push = [&](std::vector<int> key, int src, int tgt) {
        int id = int(t.keys.size());
        t.index[key] = id;
        t.keys.push_back(std::move(key));
        t.source.push_back(src);
        t.target.push_back(tgt);
        t.length.push_back(int(t.keys.back().size()) - 1);
        t.by_target[tgt].push_back(id);
        t.by_source[src].push_back(id);
        if (t.keys.size() > kPathLimit) throw BuildError("path explosion at cap");
        return id;
    };
    std::vector<int> frontier;
    for (int v = 0; v < q.num_vertices(); ++v) frontier.push_back(push({v}, v, v));
    for (int len = 1; len <= cap; ++len) {
        std::vector<int> next;
        for (int id : frontier) {
            for (int a = 0; a < q.num_arrows(); ++a) {
                if (q.arrows[a].from != t.target[id]) continue;
                std::vector<int> key = t.keys[id];
                key.push_back(a);
                next.push_back(push(std::move(key), t.source[id], q.arrows[a].to));
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return t;
}

// Incremental sparse elimination over F_p with a fixed coordinate order.
struct SparseElim {
    uint32_t p;
    std::map<int, std::vector<std::pair<int, uint32_t>>> rows;  // pivot -> row

    explicit SparseElim(uint32_t p_) : p(p_) {}

    // Reduces v in place against the current rows; returns the normal form.
    std::map<int, uint32_t> reduce(std::map<int, uint32_t> w) const {
        auto it = w.begin();
        while (it != w.end()) {
            auto r = rows.find(it->first);
            if (r == rows.end()) {
                ++it;
                continue;
            }
            int cur = it->first;
            uint32_t c = it->second;
            for (const auto& [k, v] : r->second) {
                uint32_t cur_v = 0;
                auto f = w.find(k);
                if (f != w.end()) cur_v = f->second;
                uint32_t nv = fp::sub(cur_v, fp::mul(c, v, p), p);
                if (nv == 0) {
                    if (f != w.end()) w.erase(f);
                } else {
                    w[k] = nv;
                }
            }
            it = w.lower_bound(cur);
        }
        return w;
    }

    bool insert(std::map<int, uint32_t> v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        uint32_t inv = fp::inv(v.begin()->second, p);
        std::vector<std::pair<int, uint32_t>> row;
        row.reserve(v.size());
        for (const auto& [k, c] : v) row.emplace_back(k, fp::mul(c, inv, p));
        rows[row[0].first] = std::move(row);
        return true;
    }
};

std::vector<int> word_of(const Path& path) {
    std::vector<int> key;
    key.push_back(path.source);
    for (int a : path.arrows) key.push_back(a);
    return key;
}

}  // namespace

BoundAlgebra BoundAlgebra::build(const Quiver& q, const std::vector<Relation>& rels,
                                 uint32_t p, int cap) {
    q.validate();
    if (!fp::is_prime(p)) throw DataError("characteristic must be prime");
    if (cap < 2) throw DataError("cap must be at least 2");

    std::vector<Relation> relations;
    for (const auto& r : rels) {
        if (r.terms.empty()) continue;  // vanished mod p
        int src = r.terms[0].path.source, tgt = r.terms[0].path.target(q);
        for (const auto& t : r.terms) {
            if (t.coeff == 0 || t.coeff >= p) throw DataError("relation coefficient out of range");
            if (t.path.length() < 2) throw DataError("relation term of length < 2");
            if (t.path.source != src || t.path.target(q) != tgt)
                throw DataError("relation type error: terms not parallel");
            if (t.path.length() > cap) throw DataError("cap smaller than a relation term");
        }
        relations.push_back(r);
    }

    PathTable pt = enumerate_paths(q, cap);
    int np = int(pt.keys.size());

    // Elimination order: long paths first, so surviving (basis) paths are the
    // short ones and echelon pivots rewrite long words into shorter ones.
    std::vector<int> order(np);
    for (int i = 0; i < np; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (pt.length[x] != pt.length[y]) return pt.length[x] > pt.length[y];
        return pt.keys[x] < pt.keys[y];
    });
    std::vector<int> rank_of(np);
    for (int i = 0; i < np; ++i) rank_of[order[i]] = i;

    SparseElim elim(p);
    for (const auto& rel : relations) {
        int rs = rel.terms[0].path.source;
        int rt = rel.terms[0].path.target(q);
        int rlen = 0;
        for (const auto& t : rel.terms) rlen = std::max(rlen, t.path.length());
        for (int u : pt.by_target[rs]) {
            if (pt.length[u] + rlen > cap) continue;
            for (int v : pt.by_source[rt]) {
                if (pt.length[u] + rlen + pt.length[v] > cap) continue;
                std::map<int, uint32_t> g;
                for (const auto& t : rel.terms) {
                    std::vector<int> key = pt.keys[u];
                    for (int a : t.path.arrows) key.push_back(a);
                    key.insert(key.end(), pt.keys[v].begin() + 1, pt.keys[v].end());
                    int id = pt.lookup(key);
                    if (id < 0) throw BuildError("internal: concatenated path missing");
                    int rk = rank_of[id];
                    uint32_t cur = g.count(rk) ? g[rk] : 0;
                    uint32_t nv = fp::add(cur, t.coeff, p);
                    if (nv == 0) g.erase(rk);
                    else g[rk] = nv;
                }
                if (!g.empty()) elim.insert(std::move(g));
            }
        }
    }

    // Admissibility witness: every path of full cap length must lie in the
    // span, otherwise nothing certifies that longer paths vanish.
    for (int i = 0; i < np; ++i) {
        if (pt.length[i] != cap) continue;
        std::map<int, uint32_t> e{{rank_of[i], 1u % p}};
        if (!elim.reduce(std::move(e)).empty())
            throw BuildError("not admissible at cap " + std::to_string(cap));
    }

    BoundAlgebra A;
    A.quiver_ = q;
    A.relations_ = relations;
    A.p_ = p;
    A.cap_ = cap;

    std::vector<int> basis_ids;
    for (int i = 0; i < np; ++i)
        if (!elim.rows.count(rank_of[i])) basis_ids.push_back(i);
    std::sort(basis_ids.begin(), basis_ids.end(), [&](int x, int y) {
        if (pt.length[x] != pt.length[y]) return pt.length[x] < pt.length[y];
        return pt.keys[x] < pt.keys[y];
    });

    int dim = int(basis_ids.size());
    std::vector<int> basis_pos(np, -1);
    for (int i = 0; i < dim; ++i) basis_pos[basis_ids[i]] = i;
    A.basis_.resize(dim);
    A.lazy_.assign(q.num_vertices(), -1);
    A.arrow_basis_.assign(q.num_arrows(), -1);
    for (int i = 0; i < dim; ++i) {
        int id = basis_ids[i];
        BasisPath b;
        b.source = pt.source[id];
        b.target = pt.target[id];
        b.arrows.assign(pt.keys[id].begin() + 1, pt.keys[id].end());
        A.max_len_ = std::max(A.max_len_, b.length());
        if (b.length() == 0) A.lazy_[b.source] = i;
        if (b.length() == 1) A.arrow_basis_[b.arrows[0]] = i;
        A.basis_[i] = std::move(b);
    }
    for (int v = 0; v < q.num_vertices(); ++v)
        if (A.lazy_[v] < 0) throw BuildError("internal: lazy path eliminated");
    for (int a = 0; a < q.num_arrows(); ++a)
        if (A.arrow_basis_[a] < 0) throw BuildError("ideal not admissible: contains an arrow");

    A.table_.assign(size_t(dim) * dim, Vec(dim, 0));
    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            const BasisPath& x = A.basis_[i];
            const BasisPath& y = A.basis_[j];
            if (x.target != y.source) continue;
            if (x.length() + y.length() >= cap) continue;  // class of any such path is 0
            std::vector<int> key;
            key.push_back(x.source);
            key.insert(key.end(), x.arrows.begin(), x.arrows.end());
            key.insert(key.end(), y.arrows.begin(), y.arrows.end());
            int id = pt.lookup(key);
            if (id < 0) throw BuildError("internal: product path missing");
            std::map<int, uint32_t> e{{rank_of[id], 1u % p}};
            auto nf = elim.reduce(std::move(e));
            Vec& out = A.table_[size_t(i) * dim + j];
            for (const auto& [rk, c] : nf) {
                int pos = basis_pos[order[rk]];
                if (pos < 0) throw BuildError("internal: normal form off basis");
                out[pos] = c;
            }
        }
    }

    A.verify(relations);
    return A;
}

void BoundAlgebra::verify(const std::vector<Relation>& rels) {
    int n = dim();
    uint32_t p = p_;
    // orthogonal idempotents and unit behavior
    for (int v = 0; v < quiver_.num_vertices(); ++v) {
        for (int w = 0; w < quiver_.num_vertices(); ++w) {
            const Vec& prod = table(lazy_[v], lazy_[w]);
            for (int m = 0; m < n; ++m) {
                uint32_t want = (v == w && m == lazy_[v]) ? 1u % p : 0u;
                if (prod[m] != want) throw BuildError("idempotent check failed");
            }
        }
    }
    for (int b = 0; b < n; ++b) {
        Vec eb(n, 0);
        eb[b] = 1 % p;
        if (table(lazy_[basis_[b].source], b) != eb || table(b, lazy_[basis_[b].target]) != eb)
            throw BuildError("unit check failed");
    }
    // associativity: all triples when small, deterministic sample otherwise
    auto check_triple = [&](int i, int j, int k) {
        Vec left(n, 0), right(n, 0);
        const Vec& ij = table(i, j);
        for (int m = 0; m < n; ++m)
            if (ij[m]) vec_addmul(left, table(m, k), ij[m], p);
        const Vec& jk = table(j, k);
        for (int m = 0; m < n; ++m)
            if (jk[m]) vec_addmul(right, table(i, m), jk[m], p);
        if (left != right) throw BuildError("associativity check failed");
    };
    if (n <= 64) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) check_triple(i, j, k);
    } else {
        std::mt19937 rng(0x5eed);
        for (int t = 0; t < 200'000; ++t)
            check_triple(int(rng() % n), int(rng() % n), int(rng() % n));
    }
    // relations vanish through the table (independent of the elimination route)
    for (const auto& r : rels) {
        Vec acc(n, 0);
        for (const auto& t : r.terms) vec_addmul(acc, elem_of_path(t.path), t.coeff, p);
        if (!vec_is_zero(acc)) throw BuildError("relation does not vanish in quotient");
    }
}

Vec BoundAlgebra::mul(const Vec& x, const Vec& y) const {
    int n = dim();
    Vec out(n, 0);
    for (int i = 0; i < n; ++i) {
        if (!x[i]) continue;
        for (int j = 0; j < n; ++j) {
            if (!y[j]) continue;
            uint32_t c = fp::mul(x[i], y[j], p_);
            vec_addmul(out, table(i, j), c, p_);
        }
    }
    return out;
}

Vec BoundAlgebra::elem_of_path(const Path& path) const {
    Vec v(dim(), 0);
    v[lazy_[path.source]] = 1 % p_;
    for (int a : path.arrows) {
        Vec av(dim(), 0);
        av[arrow_basis_[a]] = 1 % p_;
        v = mul(v, av);
    }
    return v;
}

Vec BoundAlgebra::elem_of_word(const std::vector<std::string>& names) const {
    if (names.empty()) throw DataError("empty word");
    Path path;
    path.source = quiver_.arrows[quiver_.arrow_index(names[0])].from;
    for (const auto& nm : names) path.arrows.push_back(quiver_.arrow_index(nm));
    path.target(quiver_);
    return elem_of_path(path);
}

Vec BoundAlgebra::unit() const {
    Vec v(dim(), 0);
    for (int u : lazy_) v[u] = 1 % p_;
    return v;
}

std::string BoundAlgebra::elem_to_string(const Vec& x) const {
    std::string s;
    for (int i = 0; i < dim(); ++i) {
        if (!x[i]) continue;
        if (!s.empty()) s += " + ";
        if (x[i] != 1) s += std::to_string(x[i]) + "*";
        Path p;
        p.source = basis_[i].source;
        p.arrows = basis_[i].arrows;
        s += p.to_string(quiver_);
    }
    return s.empty() ? "0" : s;
}

std::vector<std::vector<long long>> BoundAlgebra::cartan_matrix() const {
    int nv = quiver_.num_vertices();
    std::vector<std::vector<long long>> c(nv, std::vector<long long>(nv, 0));
    for (const auto& b : basis_) c[b.source][b.target]++;
    return c;
}

bool BoundAlgebra::is_central(const Vec& x) const {
    // commuting with the lazy paths and the arrows is enough
    auto comm = [&](const Vec& g) {
        return mul(x, g) == mul(g, x);
    };
    for (int v = 0; v < quiver_.num_vertices(); ++v) {
        Vec g(dim(), 0);
        g[lazy_[v]] = 1 % p_;
        if (!comm(g)) return false;
    }
    for (int a = 0; a < quiver_.num_arrows(); ++a) {
        Vec g(dim(), 0);
        g[arrow_basis_[a]] = 1 % p_;
        if (!comm(g)) return false;
    }
    return true;
}

BoundAlgebra::Center BoundAlgebra::center_basis() const {
    int n = dim();
    std::vector<int> gens;
    for (int v = 0; v < quiver_.num_vertices(); ++v) gens.push_back(lazy_[v]);
    for (int a = 0; a < quiver_.num_arrows(); ++a) gens.push_back(arrow_basis_[a]);
    Matrix constraints(int(gens.size()) * n, n, p_);
    int row = 0;
    for (int g : gens) {
        for (int m = 0; m < n; ++m) {
            for (int i = 0; i < n; ++i)
                constraints.at(row, i) = fp::sub(table(i, g)[m], table(g, i)[m], p_);
            ++row;
        }
    }
    Matrix z = constraints.right_kernel();  // rows = center elements
    Center c;
    for (int i = 0; i < z.rows; ++i) c.basis.push_back(z.row(i));
    // members of rad A = combinations with zero lazy-path coordinates
    if (z.rows > 0) {
        Matrix lazycols(z.rows, quiver_.num_vertices(), p_);
        for (int i = 0; i < z.rows; ++i)
            for (int v = 0; v < quiver_.num_vertices(); ++v)
                lazycols.at(i, v) = z.at(i, lazy_[v]);
        Matrix combos = lazycols.left_kernel();
        for (int i = 0; i < combos.rows; ++i) {
            Vec elem(n, 0);
            for (int j = 0; j < z.rows; ++j)
                if (combos.at(i, j)) vec_addmul(elem, z.row(j), combos.at(i, j), p_);
            c.in_radical.push_back(elem);
        }
    }
    return c;
}

BoundAlgebra BoundAlgebra::quotient_by_ideal(const std::vector<Vec>& gens) const {
    int nv = quiver_.num_vertices();
    std::set<int> removed;
    // (source,target)-components of the generators; lazy components kill vertices
    std::vector<std::vector<std::pair<uint32_t, const BasisPath*>>> rad_comps;
    std::map<std::pair<int, int>, int> comp_index;
    for (const auto& g : gens) {
        if (int(g.size()) != dim()) throw DataError("generator dimension mismatch");
        std::map<std::pair<int, int>, std::vector<std::pair<uint32_t, const BasisPath*>>> comps;
        for (int i = 0; i < dim(); ++i)
            if (g[i]) comps[{basis_[i].source, basis_[i].target}].emplace_back(g[i], &basis_[i]);
        for (auto& [st, terms] : comps) {
            bool lazy = false;
            for (auto& [c, b] : terms)
                if (b->length() == 0) lazy = true;
            if (lazy) {
                if (st.first != st.second) throw BuildError("internal: lazy off-diagonal");
                removed.insert(st.first);
            } else {
                rad_comps.push_back(terms);
            }
        }
    }
    std::vector<int> keep;
    for (int v = 0; v < nv; ++v)
        if (!removed.count(v)) keep.push_back(v);
    if (keep.empty()) throw BuildError("quotient is zero");

    auto touches_removed = [&](int source, const std::vector<int>& arrows) {
        if (removed.count(source)) return true;
        int v = source;
        for (int a : arrows) {
            v = quiver_.arrows[a].to;
            if (removed.count(v)) return true;
        }
        return false;
    };

    std::vector<int> old2new;
    Quiver nq = quiver_.induced_subquiver(keep, &old2new);
    auto remap = [&](const std::vector<int>& arrows, int source) {
        Path np_;
        np_.source = old2new[source];
        for (int a : arrows) np_.arrows.push_back(nq.arrow_index(quiver_.arrows[a].name));
        return np_;
    };

    std::vector<Relation> nrels;
    for (const auto& r : relations_) {
        Relation nr;
        for (const auto& t : r.terms) {
            if (touches_removed(t.path.source, t.path.arrows)) continue;
            nr.terms.push_back({t.coeff, remap(t.path.arrows, t.path.source)});
        }
        if (!nr.terms.empty()) nrels.push_back(nr);
    }
    for (const auto& comp : rad_comps) {
        Relation nr;
        for (const auto& [c, b] : comp) {
            if (touches_removed(b->source, b->arrows)) continue;
            if (b->length() < 2)
                throw DataError("unsupported quotient generator with an arrow component");
            nr.terms.push_back({c, remap(b->arrows, b->source)});
        }
        if (!nr.terms.empty()) nrels.push_back(nr);
    }
    return build(nq, nrels, p_, cap_);
}

BoundAlgebra BoundAlgebra::support_quotient(const std::vector<int>& keep) const {
    std::set<int> ks(keep.begin(), keep.end());
    std::vector<Vec> gens;
    for (int v = 0; v < quiver_.num_vertices(); ++v) {
        if (ks.count(v)) continue;
        Vec e(dim(), 0);
        e[lazy_[v]] = 1 % p_;
        gens.push_back(e);
    }
    return quotient_by_ideal(gens);
}

BoundAlgebra BoundAlgebra::opposite() const {
    Quiver rq = quiver_.reversed();
    std::vector<Relation> rrels;
    for (const auto& r : relations_) {
        Relation nr;
        for (const auto& t : r.terms) {
            Path p;
            p.source = t.path.target(quiver_);
            p.arrows.assign(t.path.arrows.rbegin(), t.path.arrows.rend());
            nr.terms.push_back({t.coeff, p});
        }
        rrels.push_back(nr);
    }
    return build(rq, rrels, p_, cap_);
}

std::vector<BoundAlgebra> BoundAlgebra::block_decompose() const {
    std::vector<BoundAlgebra> out;
    for (const auto& comp : quiver_.components()) {
        std::set<int> cs(comp.begin(), comp.end());
        std::vector<int> old2new;
        Quiver sq = quiver_.induced_subquiver(comp, &old2new);
        std::vector<Relation> srels;
        for (const auto& r : relations_) {
            if (!cs.count(r.terms[0].path.source)) continue;
            Relation nr;
            for (const auto& t : r.terms) {
                Path p;
                p.source = old2new[t.path.source];
                for (int a : t.path.arrows) p.arrows.push_back(sq.arrow_index(quiver_.arrows[a].name));
                nr.terms.push_back({t.coeff, p});
            }
            srels.push_back(nr);
        }
        out.push_back(build(sq, srels, p_, cap_));
    }
    return out;
}

bool BoundAlgebra::same_structure_constants(const BoundAlgebra& other) const {
    if (dim() != other.dim() || p_ != other.p_) return false;
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (basis_[i].source != other.basis_[i].source) return false;
        if (basis_[i].target != other.basis_[i].target) return false;
        if (basis_[i].arrows != other.basis_[i].arrows) return false;
    }
    return table_ == other.table_;
}

TruncatedAlgebra::TruncatedAlgebra(const BoundAlgebra& parent, std::vector<int> keep)
    : parent_(&parent), keep_(std::move(keep)) {
    if (keep_.empty()) throw DataError("idempotent truncation with empty vertex set");
    std::set<int> ks(keep_.begin(), keep_.end());
    const auto& q = parent.quiver();
    for (int i = 0; i < parent.dim(); ++i) {
        const auto& b = parent.basis()[i];
        if (!ks.count(b.source) || !ks.count(b.target)) continue;
        kept_.push_back(i);
        int v = b.source;
        for (int a : b.arrows) {
            v = q.arrows[a].to;
            if (!ks.count(v)) clean_ = false;
        }
    }
}

Vec TruncatedAlgebra::table(int i, int j) const {
    const Vec& full = parent_->table(kept_[i], kept_[j]);
    Vec out(kept_.size(), 0);
    for (size_t m = 0; m < kept_.size(); ++m) out[m] = full[kept_[m]];
    return out;
}

BoundAlgebra TruncatedAlgebra::as_bound_algebra() const {
    if (!clean_)
        throw BuildError("eAe is not presentable on the induced subquiver (path through removed vertex)");
    const BoundAlgebra& A = *parent_;
    const Quiver& q = A.quiver();
    std::vector<int> old2new;
    Quiver sq = q.induced_subquiver(keep_, &old2new);
    // evaluate every subquiver path in A and take the kernel sector by sector
    struct SPath {
        Path path;  // over sq
        Vec value;  // over kept basis coordinates
        int tgt;
    };
    std::map<std::pair<int, int>, std::vector<SPath>> sectors;
    std::vector<std::pair<Path, Vec>> frontier;
    std::vector<int> new2old_vertex(sq.num_vertices());
    for (size_t i = 0; i < keep_.size(); ++i) new2old_vertex[old2new[keep_[i]]] = keep_[i];
    auto eval_restrict = [&](const Vec& full) {
        Vec out(kept_.size(), 0);
        for (size_t m = 0; m < kept_.size(); ++m) out[m] = full[kept_[m]];
        return out;
    };
    for (int v = 0; v < sq.num_vertices(); ++v) {
        Path p;
        p.source = v;
        Vec e(A.dim(), 0);
        e[A.lazy_index(new2old_vertex[v])] = 1 % A.characteristic();
        frontier.emplace_back(p, e);
        sectors[{v, v}].push_back({p, eval_restrict(e), v});
    }
    for (int len = 1; len <= A.cap(); ++len) {
        std::vector<std::pair<Path, Vec>> next;
        for (const auto& [path, val] : frontier) {
            int tgt = path.target(sq);
            for (int a = 0; a < sq.num_arrows(); ++a) {
                if (sq.arrows[a].from != tgt) continue;
                Path np = path;
                np.arrows.push_back(a);
                Vec av(A.dim(), 0);
                av[A.arrow_basis_index(q.arrow_index(sq.arrows[a].name))] = 1 % A.characteristic();
                Vec nval = A.mul(val, av);
                next.emplace_back(np, nval);
                sectors[{np.source, sq.arrows[a].to}].push_back({np, eval_restrict(nval), sq.arrows[a].to});
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    std::vector<Relation> rels;
    for (auto& [st, paths] : sectors) {
        Matrix m(int(paths.size()), int(kept_.size()), A.characteristic());
        for (size_t i = 0; i < paths.size(); ++i) m.set_row(int(i), paths[i].value);
        Matrix lk = m.left_kernel();
        for (int r = 0; r < lk.rows; ++r) {
            Relation rel;
            for (int i = 0; i < lk.cols; ++i) {
                if (!lk.at(r, i)) continue;
                if (paths[i].path.length() < 2)
                    throw BuildError("internal: kernel touches a short path");
                rel.terms.push_back({lk.at(r, i), paths[i].path});
            }
            if (!rel.terms.empty()) rels.push_back(rel);
        }
    }
    BoundAlgebra out = BoundAlgebra::build(sq, rels, A.characteristic(), A.cap());
    if (out.dim() != dim()) throw BuildError("eAe presentation dimension mismatch");
    return out;
}

Vec path_elem(const BoundAlgebra& a, const std::vector<std::string>& arrow_names) {
    return a.elem_of_word(arrow_names);
}

Vec elem_sum(const BoundAlgebra& a, const std::vector<Vec>& xs) {
    Vec out(a.dim(), 0);
    for (const auto& x : xs) vec_addmul(out, x, 1 % a.characteristic(), a.characteristic());
    return out;
}

}  // namespace stt
