#include "stt/rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"

namespace stt {

namespace {

// basis indices of e_i A grouped by path target, in basis order
std::vector<std::vector<int>> proj_layout(const BoundAlgebra& a, int i) {
    std::vector<std::vector<int>> rows(a.num_vertices());
    for (int b = 0; b < a.dim(); ++b)
        if (a.basis()[b].source == i) rows[a.basis()[b].target].push_back(b);
    return rows;
}

// basis indices of paths v -> i (the dual layout used by nu P_i)
std::vector<std::vector<int>> inj_layout(const BoundAlgebra& a, int i) {
    std::vector<std::vector<int>> rows(a.num_vertices());
    for (int b = 0; b < a.dim(); ++b)
        if (a.basis()[b].target == i) rows[a.basis()[b].source].push_back(b);
    return rows;
}

Matrix path_action(const Rep& m, const BoundAlgebra::BasisPath& bp) {
    const BoundAlgebra& a = *m.A;
    Matrix x = Matrix::identity(m.dims[bp.source], a.characteristic());
    for (int arrow : bp.arrows) x = x.mul(m.act[arrow]);
    return x;
}

}  // namespace

int Rep::total_dim() const {
    int s = 0;
    for (int d : dims) s += d;
    return s;
}

void Rep::validate() const {
    const BoundAlgebra& a = *A;
    const Quiver& q = a.quiver();
    if (int(dims.size()) != q.num_vertices()) throw DataError("rep: dims size mismatch");
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        if (act[ar].rows != dims[q.arrows[ar].from] || act[ar].cols != dims[q.arrows[ar].to])
            throw DataError("rep: arrow matrix shape mismatch");
    }
    for (const auto& rel : a.relations()) {
        int s = rel.terms[0].path.source, t = rel.terms[0].path.target(q);
        Matrix acc(dims[s], dims[t], a.characteristic());
        for (const auto& term : rel.terms) {
            Matrix x = Matrix::identity(dims[s], a.characteristic());
            for (int arrow : term.path.arrows) x = x.mul(act[arrow]);
            acc = acc.add(x.scaled(term.coeff));
        }
        if (!acc.is_zero()) throw DataError("rep: relation does not annihilate");
    }
}

Rep Rep::zero(const BoundAlgebra& a) {
    Rep r;
    r.A = &a;
    r.dims.assign(a.num_vertices(), 0);
    r.act.assign(a.quiver().num_arrows(), Matrix(0, 0, a.characteristic()));
    return r;
}

Rep Rep::simple(const BoundAlgebra& a, int v) {
    Rep r = zero(a);
    r.dims[v] = 1;
    const Quiver& q = a.quiver();
    for (int i = 0; i < q.num_arrows(); ++i)
        r.act[i] = Matrix(r.dims[q.arrows[i].from], r.dims[q.arrows[i].to], a.characteristic());
    return r;
}

Rep Rep::projective(const BoundAlgebra& a, int v) {
    Rep r = zero(a);
    auto layout = proj_layout(a, v);
    for (int w = 0; w < a.num_vertices(); ++w) r.dims[w] = int(layout[w].size());
    const Quiver& q = a.quiver();
    std::vector<int> pos(a.dim(), -1);
    for (int w = 0; w < a.num_vertices(); ++w)
        for (size_t k = 0; k < layout[w].size(); ++k) pos[layout[w][k]] = int(k);
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].from, t = q.arrows[ar].to;
        Matrix x(r.dims[s], r.dims[t], a.characteristic());
        for (int i = 0; i < r.dims[s]; ++i) {
            const Vec& prod = a.table(layout[s][i], a.arrow_basis_index(ar));
            for (int b = 0; b < a.dim(); ++b) {
                if (!prod[b]) continue;
                if (a.basis()[b].source != v || a.basis()[b].target != t)
                    throw BuildError("internal: projective action off layout");
                x.at(i, pos[b]) = prod[b];
            }
        }
        r.act[ar] = x;
    }
    return r;
}

Rep Rep::direct_sum(const BoundAlgebra& a, const std::vector<const Rep*>& parts) {
    Rep r = zero(a);
    for (int v = 0; v < a.num_vertices(); ++v)
        for (const Rep* p : parts) r.dims[v] += p->dims[v];
    const Quiver& q = a.quiver();
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].from, t = q.arrows[ar].to;
        Matrix x(r.dims[s], r.dims[t], a.characteristic());
        int ro = 0, co = 0;
        for (const Rep* p : parts) {
            for (int i = 0; i < p->dims[s]; ++i)
                for (int j = 0; j < p->dims[t]; ++j) x.at(ro + i, co + j) = p->act[ar].at(i, j);
            ro += p->dims[s];
            co += p->dims[t];
        }
        r.act[ar] = x;
    }
    return r;
}

Matrix Rep::elem_action(const Vec& x, int s, int t) const {
    const BoundAlgebra& a = *A;
    Matrix out(dims[s], dims[t], a.characteristic());
    for (int b = 0; b < a.dim(); ++b) {
        if (!x[b]) continue;
        const auto& bp = a.basis()[b];
        if (bp.source != s || bp.target != t) continue;
        out = out.add(path_action(*this, bp).scaled(x[b]));
    }
    return out;
}

std::string Rep::dims_str() const {
    std::string s = "(";
    for (size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + ")";
}

std::string Rep::to_json(const std::string& name) const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["char"] = A->characteristic();
    j["dims"] = dims;
    nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
    for (int ar = 0; ar < A->quiver().num_arrows(); ++ar) {
        std::vector<std::vector<uint32_t>> rows;
        for (int i = 0; i < act[ar].rows; ++i) {
            std::vector<uint32_t> row;
            for (int k = 0; k < act[ar].cols; ++k) row.push_back(act[ar].at(i, k));
            rows.push_back(row);
        }
        arrows[A->quiver().arrows[ar].name] = rows;
    }
    j["arrows"] = arrows;
    return j.dump(2) + "\n";
}

std::vector<RepHom> hom_basis(const Rep& m, const Rep& n) {
    if (m.A != n.A) throw DataError("hom: different algebras");
    const BoundAlgebra& a = *m.A;
    const Quiver& q = a.quiver();
    int nv = q.num_vertices();
    std::vector<int> off(nv + 1, 0);
    for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dims[v] * n.dims[v];
    int unknowns = off[nv];
    if (unknowns == 0) return {};
    std::vector<Vec> rows;
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].from, t = q.arrows[ar].to;
        // X^M_a * F_t = F_s * X^N_a
        for (int i = 0; i < m.dims[s]; ++i) {
            for (int j = 0; j < n.dims[t]; ++j) {
                Vec row(unknowns, 0);
                for (int k = 0; k < m.dims[t]; ++k) {
                    uint32_t c = m.act[ar].at(i, k);
                    if (c) {
                        int idx = off[t] + k * n.dims[t] + j;
                        row[idx] = fp::add(row[idx], c, a.characteristic());
                    }
                }
                for (int l = 0; l < n.dims[s]; ++l) {
                    uint32_t c = n.act[ar].at(l, j);
                    if (c) {
                        int idx = off[s] + i * n.dims[s] + l;
                        row[idx] = fp::sub(row[idx], c, a.characteristic());
                    }
                }
                if (!vec_is_zero(row)) rows.push_back(row);
            }
        }
    }
    Matrix constraints = Matrix::from_rows(rows, unknowns, a.characteristic());
    Matrix kern = rows.empty() ? Matrix::identity(unknowns, a.characteristic())
                               : constraints.right_kernel();
    std::vector<RepHom> out;
    for (int r = 0; r < kern.rows; ++r) {
        RepHom h;
        for (int v = 0; v < nv; ++v) {
            Matrix f(m.dims[v], n.dims[v], a.characteristic());
            for (int i = 0; i < m.dims[v]; ++i)
                for (int j = 0; j < n.dims[v]; ++j) f.at(i, j) = kern.at(r, off[v] + i * n.dims[v] + j);
            h.f.push_back(f);
        }
        out.push_back(std::move(h));
    }
    return out;
}

int hom_dim(const Rep& m, const Rep& n) { return int(hom_basis(m, n).size()); }

Rep sub_rep(const Rep& m, const std::vector<Matrix>& rows, RepHom* inclusion) {
    const BoundAlgebra& a = *m.A;
    const Quiver& q = a.quiver();
    std::vector<Matrix> basis;
    for (int v = 0; v < q.num_vertices(); ++v) basis.push_back(rows[v].row_basis());
    Rep r = Rep::zero(a);
    for (int v = 0; v < q.num_vertices(); ++v) r.dims[v] = basis[v].rows;
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].from, t = q.arrows[ar].to;
        Matrix img = basis[s].mul(m.act[ar]);  // rows in span(basis[t]) if stable
        auto y = basis[t].solve_left(img);
        if (!y) throw BuildError("sub_rep: rows not arrow-stable");
        r.act[ar] = *y;
    }
    if (inclusion) inclusion->f = basis;
    return r;
}

Rep quotient_rep(const Rep& m, const std::vector<Matrix>& rows, RepHom* projection) {
    const BoundAlgebra& a = *m.A;
    const Quiver& q = a.quiver();
    int nv = q.num_vertices();
    std::vector<Matrix> proj(nv, Matrix());
    std::vector<Matrix> sub(nv, Matrix());
    for (int v = 0; v < nv; ++v) {
        Matrix::Rref rr = rows[v].rref();
        sub[v] = rows[v].row_basis();
        std::vector<bool> piv(m.dims[v], false);
        for (int c : rr.pivots) piv[c] = true;
        std::vector<int> comp;
        for (int c = 0; c < m.dims[v]; ++c)
            if (!piv[c]) comp.push_back(c);
        // T = [sub; comp] is a basis of F^{d_v}; pi(x) = the comp coordinates
        // of x over T, i.e. the last columns of T^{-1}
        Matrix compm(int(comp.size()), m.dims[v], a.characteristic());
        for (size_t i = 0; i < comp.size(); ++i) compm.at(int(i), comp[i]) = 1 % a.characteristic();
        Matrix T = sub[v].vstack(compm);
        Matrix Tinv = T.solve_right(Matrix::identity(T.rows, a.characteristic())).value();
        Matrix P(m.dims[v], int(comp.size()), a.characteristic());
        for (int i = 0; i < m.dims[v]; ++i)
            for (size_t j = 0; j < comp.size(); ++j)
                P.at(i, int(j)) = Tinv.at(i, sub[v].rows + int(j));
        proj[v] = P;
    }
    Rep r = Rep::zero(a);
    for (int v = 0; v < nv; ++v) r.dims[v] = proj[v].cols;
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].from, t = q.arrows[ar].to;
        // action on classes: lift complement basis, act, project
        std::vector<bool> piv(m.dims[s], false);
        for (int c : rows[s].rref().pivots) piv[c] = true;
        std::vector<int> comp;
        for (int c = 0; c < m.dims[s]; ++c)
            if (!piv[c]) comp.push_back(c);
        Matrix x(int(comp.size()), r.dims[t], a.characteristic());
        for (size_t i = 0; i < comp.size(); ++i) {
            Vec lift(m.dims[s], 0);
            lift[comp[i]] = 1 % a.characteristic();
            Matrix lm = Matrix::from_rows({lift}, m.dims[s], a.characteristic());
            Matrix img = lm.mul(m.act[ar]).mul(proj[t]);
            for (int j = 0; j < r.dims[t]; ++j) x.at(int(i), j) = img.at(0, j);
        }
        r.act[ar] = x;
    }
    if (projection) projection->f = proj;
    return r;
}

Rep kernel_rep(const Rep& m, const RepHom& f, RepHom* inclusion) {
    std::vector<Matrix> rows;
    for (size_t v = 0; v < m.dims.size(); ++v) rows.push_back(f.f[v].left_kernel());
    return sub_rep(m, rows, inclusion);
}

Rep image_rep(const Rep& n, const RepHom& f) {
    std::vector<Matrix> rows;
    for (size_t v = 0; v < n.dims.size(); ++v) rows.push_back(f.f[v].row_basis());
    return sub_rep(n, rows);
}

Rep cokernel_rep(const Rep& n, const RepHom& f) {
    std::vector<Matrix> rows;
    for (size_t v = 0; v < n.dims.size(); ++v) rows.push_back(f.f[v].row_basis());
    return quotient_rep(n, rows);
}

std::vector<Matrix> radical_rows(const Rep& m) {
    const BoundAlgebra& a = *m.A;
    const Quiver& q = a.quiver();
    std::vector<Matrix> rows;
    for (int v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(0, m.dims[v], a.characteristic());
        for (int ar = 0; ar < q.num_arrows(); ++ar)
            if (q.arrows[ar].to == v && m.act[ar].rows > 0) acc = acc.vstack(m.act[ar]);
        rows.push_back(acc.row_basis());
    }
    return rows;
}

Rep radical_rep(const Rep& m) { return sub_rep(m, radical_rows(m)); }

std::vector<int> top_multiplicities(const Rep& m) {
    auto rad = radical_rows(m);
    std::vector<int> t;
    for (size_t v = 0; v < m.dims.size(); ++v) t.push_back(m.dims[v] - rad[v].rows);
    return t;
}

std::pair<Rep, RepHom> projective_cover(const Rep& m, std::vector<int>* vertices) {
    const BoundAlgebra& a = *m.A;
    int nv = a.num_vertices();
    auto rad = radical_rows(m);
    // generators: complement of rad at each vertex
    std::vector<int> verts;
    std::vector<Vec> gens;  // row vectors in m at the matching vertex
    for (int v = 0; v < nv; ++v) {
        std::vector<bool> piv(m.dims[v], false);
        for (int c : rad[v].rref().pivots) piv[c] = true;
        for (int c = 0; c < m.dims[v]; ++c) {
            if (piv[c]) continue;
            Vec g(m.dims[v], 0);
            g[c] = 1 % a.characteristic();
            verts.push_back(v);
            gens.push_back(g);
        }
    }
    std::vector<Rep> projs;
    std::vector<const Rep*> parts;
    for (int v : verts) projs.push_back(Rep::projective(a, v));
    for (auto& p : projs) parts.push_back(&p);
    Rep p0 = Rep::direct_sum(a, parts);
    // cover map: copy k generator e_{verts[k]} -> gens[k]; basis path q of the
    // copy maps to gens[k] * act(q)
    RepHom psi;
    for (int w = 0; w < nv; ++w) {
        Matrix f(p0.dims[w], m.dims[w], a.characteristic());
        int row = 0;
        for (size_t k = 0; k < verts.size(); ++k) {
            auto layout = proj_layout(a, verts[k]);
            for (int b : layout[w]) {
                Matrix ga = Matrix::from_rows({gens[k]}, m.dims[verts[k]], a.characteristic());
                Matrix img = ga.mul(path_action(m, a.basis()[b]));
                for (int j = 0; j < m.dims[w]; ++j) f.at(row, j) = img.at(0, j);
                ++row;
            }
        }
        psi.f.push_back(f);
    }
    // surjectivity (projective covers always are)
    for (int w = 0; w < nv; ++w)
        if (psi.f[w].rank() != m.dims[w]) throw BuildError("internal: cover not surjective");
    if (vertices) *vertices = verts;
    return {p0, psi};
}

Presentation minimal_presentation(const Rep& m) {
    const BoundAlgebra& a = *m.A;
    Presentation pr;
    auto [p0, psi] = projective_cover(m, &pr.p0);
    // kernel of the cover inside P0
    RepHom incl;
    Rep k = kernel_rep(p0, psi, &incl);
    if (k.is_zero()) return pr;  // P1 empty
    std::vector<int> k_verts;
    auto [kp0, kpsi] = projective_cover(k, &k_verts);
    pr.p1 = k_verts;
    // P1 -> K -> P0 composed, vertexwise
    std::vector<Matrix> comp;
    for (size_t v = 0; v < m.dims.size(); ++v) comp.push_back(kpsi.f[v].mul(incl.f[v]));
    // extract algebra components: generator of copy s of P1 sits at vertex
    // p1[s]; its image row in P0 at vertex p1[s] decomposes over the copies of
    // P0 as elements of e_{p0[t]} A e_{p1[s]}
    // row offset of copy s generator inside P1-at-vertex-p1[s]: copies are laid
    // out in order, each contributing proj_layout rows per vertex
    std::vector<std::vector<std::vector<int>>> p1_layouts, p0_layouts;
    for (int v : pr.p1) p1_layouts.push_back(proj_layout(a, v));
    for (int v : pr.p0) p0_layouts.push_back(proj_layout(a, v));
    for (size_t s = 0; s < pr.p1.size(); ++s) {
        int vs = pr.p1[s];
        // row index of the lazy path of copy s at vertex vs
        int row = 0;
        for (size_t s2 = 0; s2 < s; ++s2) row += int(p1_layouts[s2][vs].size());
        int lazy_pos = -1;
        for (size_t i = 0; i < p1_layouts[s][vs].size(); ++i)
            if (a.basis()[p1_layouts[s][vs][i]].length() == 0) lazy_pos = int(i);
        if (lazy_pos < 0) throw BuildError("internal: lazy position missing");
        row += lazy_pos;
        std::vector<Vec> ys;
        int col = 0;
        for (size_t t = 0; t < pr.p0.size(); ++t) {
            Vec y(a.dim(), 0);
            for (size_t i = 0; i < p0_layouts[t][vs].size(); ++i)
                y[p0_layouts[t][vs][i]] = comp[vs].at(row, col + int(i));
            col += int(p0_layouts[t][vs].size());
            ys.push_back(y);
        }
        pr.y.push_back(ys);
    }
    // minimality checks: image in rad P0, no zero column of P1
    for (size_t s = 0; s < pr.p1.size(); ++s) {
        bool nonzero = false;
        for (const auto& y : pr.y[s]) {
            for (int b = 0; b < a.dim(); ++b) {
                if (!y[b]) continue;
                if (a.basis()[b].length() == 0) throw BuildError("presentation not minimal");
                nonzero = true;
            }
        }
        if (!nonzero) throw BuildError("presentation has a dead summand");
    }
    return pr;
}

Rep nu_projective(const BoundAlgebra& a, int i) {
    Rep r = Rep::zero(a);
    auto layout = inj_layout(a, i);
    for (int v = 0; v < a.num_vertices(); ++v) r.dims[v] = int(layout[v].size());
    const Quiver& q = a.quiver();
    for (int ar = 0; ar < q.num_arrows(); ++ar) {
        int s = q.arrows[ar].from, t = q.arrows[ar].to;
        Matrix x(r.dims[s], r.dims[t], a.characteristic());
        for (int row = 0; row < r.dims[s]; ++row) {
            int qpath = layout[s][row];
            for (int colp = 0; colp < r.dims[t]; ++colp) {
                int ppath = layout[t][colp];
                // coefficient of q in a*p
                x.at(row, colp) = a.table(a.arrow_basis_index(ar), ppath)[qpath];
            }
        }
        r.act[ar] = x;
    }
    return r;
}

namespace {

// nu of the presentation map, as a RepHom out of the nu-projective sum.
std::pair<Rep, RepHom> nu_of_presentation(const BoundAlgebra& a, const Presentation& pr) {
    std::vector<Rep> e1s, e0s;
    for (int v : pr.p1) e1s.push_back(nu_projective(a, v));
    for (int v : pr.p0) e0s.push_back(nu_projective(a, v));
    std::vector<const Rep*> p1parts, p0parts;
    for (auto& e : e1s) p1parts.push_back(&e);
    for (auto& e : e0s) p0parts.push_back(&e);
    Rep nu_p1 = e1s.empty() ? Rep::zero(a) : Rep::direct_sum(a, p1parts);
    Rep nu_p0 = e0s.empty() ? Rep::zero(a) : Rep::direct_sum(a, p0parts);
    RepHom f;
    std::vector<std::vector<std::vector<int>>> l1, l0;
    for (int v : pr.p1) l1.push_back(inj_layout(a, v));
    for (int v : pr.p0) l0.push_back(inj_layout(a, v));
    for (int k = 0; k < a.num_vertices(); ++k) {
        Matrix m(nu_p1.dims[k], nu_p0.dims[k], a.characteristic());
        int ro = 0;
        for (size_t s = 0; s < pr.p1.size(); ++s) {
            for (size_t ip = 0; ip < l1[s][k].size(); ++ip) {
                int ppath = l1[s][k][ip];  // path k -> p1[s]
                int co = 0;
                for (size_t t = 0; t < pr.p0.size(); ++t) {
                    const Vec& y = pr.y[s][t];  // element of e_{p0[t]} A e_{p1[s]}
                    for (size_t jq = 0; jq < l0[t][k].size(); ++jq) {
                        int qpath = l0[t][k][jq];  // path k -> p0[t]
                        // entry = coeff of ppath in qpath * y
                        Vec eq(a.dim(), 0);
                        eq[qpath] = 1 % a.characteristic();
                        Vec prod = a.mul(eq, y);
                        m.at(ro + int(ip), co + int(jq)) = prod[ppath];
                    }
                    co += int(l0[t][k].size());
                }
            }
            ro += int(l1[s][k].size());
        }
        f.f.push_back(m);
    }
    return {nu_p1, f};
}

}  // namespace

Rep tau(const Rep& m) {
    if (m.is_zero()) throw DataError("tau of the zero module");
    const BoundAlgebra& a = *m.A;
    Presentation pr = minimal_presentation(m);
    if (pr.p1.empty()) return Rep::zero(a);
    auto [nu_p1, nu_f] = nu_of_presentation(a, pr);
    return kernel_rep(nu_p1, nu_f);
}

bool hom_tau_vanishes(const Presentation& pm, const Rep& n) {
    const BoundAlgebra& a = *n.A;
    if (pm.p1.empty()) return true;  // M projective
    int rows_total = 0, cols_total = 0;
    for (int v : pm.p0) rows_total += n.dims[v];
    for (int v : pm.p1) cols_total += n.dims[v];
    if (cols_total == 0) return true;
    Matrix g(rows_total, cols_total, a.characteristic());
    int co = 0;
    for (size_t s = 0; s < pm.p1.size(); ++s) {
        int ro = 0;
        for (size_t t = 0; t < pm.p0.size(); ++t) {
            Matrix blk = n.elem_action(pm.y[s][t], pm.p0[t], pm.p1[s]);
            for (int i = 0; i < blk.rows; ++i)
                for (int j = 0; j < blk.cols; ++j) g.at(ro + i, co + j) = blk.at(i, j);
            ro += n.dims[pm.p0[t]];
        }
        co += n.dims[pm.p1[s]];
    }
    return g.rank() == cols_total;
}

bool is_tau_rigid(const Rep& m) {
    if (m.is_zero()) return true;
    Presentation pr = minimal_presentation(m);
    return hom_tau_vanishes(pr, m);
}

bool is_tau_rigid_literal(const Rep& m) {
    if (m.is_zero()) return true;
    Rep t = tau(m);
    if (t.is_zero()) return true;
    return hom_dim(m, t) == 0;
}

namespace {

struct EndAlgebra {
    const Rep* x;
    std::vector<RepHom> basis;
    int n = 0;           // total module dimension
    int flat_len = 0;

    Vec flatten(const RepHom& h) const {
        Vec out;
        for (const auto& f : h.f)
            for (uint32_t c : f.a) out.push_back(c);
        return out;
    }
    RepHom unflatten(const Vec& v) const {
        RepHom h;
        size_t pos = 0;
        for (size_t vtx = 0; vtx < x->dims.size(); ++vtx) {
            Matrix f(x->dims[vtx], x->dims[vtx], x->A->characteristic());
            for (auto& c : f.a) c = v[pos++];
            h.f.push_back(f);
        }
        return h;
    }
    RepHom compose(const RepHom& g, const RepHom& h) const {  // g then h
        RepHom out;
        for (size_t v = 0; v < g.f.size(); ++v) out.f.push_back(g.f[v].mul(h.f[v]));
        return out;
    }
    RepHom identity() const {
        RepHom h;
        for (int d : x->dims) h.f.push_back(Matrix::identity(d, x->A->characteristic()));
        return h;
    }
    RepHom sub(const RepHom& g, const RepHom& h) const {
        RepHom out;
        for (size_t v = 0; v < g.f.size(); ++v) out.f.push_back(g.f[v].sub(h.f[v]));
        return out;
    }
    RepHom power(const RepHom& h, int log2_steps) const {
        RepHom out = h;
        for (int i = 0; i < log2_steps; ++i) out = compose(out, out);
        return out;
    }
    int hom_rank(const RepHom& h) const {
        int r = 0;
        for (const auto& f : h.f) r += f.rank();
        return r;
    }
    bool is_nilpotent(const RepHom& h, int log2_steps) const {
        return hom_rank(power(h, log2_steps)) == 0;
    }
};

int ceil_log2(int n) {
    int e = 0;
    while ((1 << e) < n) ++e;
    return e;
}

// Certifies End(X) local by exhibiting rad = span(basis - scalars) as a
// codimension-1 nilpotent ideal. Returns false when no certificate exists.
bool certify_local(const EndAlgebra& E) {
    uint32_t p = E.x->A->characteristic();
    int d = int(E.basis.size());
    if (d == 1) return true;
    int lg = ceil_log2(std::max(E.n, 2)) + 1;
    std::vector<Vec> rad_rows;
    RepHom id = E.identity();
    for (const auto& b : E.basis) {
        bool found = false;
        for (uint32_t c = 0; c < p && !found; ++c) {
            RepHom shifted = b;
            for (size_t v = 0; v < shifted.f.size(); ++v)
                shifted.f[v] = shifted.f[v].sub(id.f[v].scaled(c));
            if (E.is_nilpotent(shifted, lg)) {
                rad_rows.push_back(E.flatten(shifted));
                found = true;
            }
        }
        if (!found) return false;
    }
    Matrix R = Matrix::from_rows(rad_rows, E.flat_len, p).row_basis();
    if (R.rows != d - 1) return false;
    // two-sided ideal
    for (int i = 0; i < R.rows; ++i) {
        RepHom r = E.unflatten(R.row(i));
        for (const auto& b : E.basis) {
            if (!R.rowspace_contains(E.flatten(E.compose(r, b)))) return false;
            if (!R.rowspace_contains(E.flatten(E.compose(b, r)))) return false;
        }
    }
    // nilpotent: R^k shrinks to zero
    Matrix S = R;
    for (int iter = 0; iter <= E.n + 1; ++iter) {
        if (S.rows == 0) return true;
        std::vector<Vec> prod_rows;
        for (int i = 0; i < S.rows; ++i)
            for (int j = 0; j < R.rows; ++j)
                prod_rows.push_back(E.flatten(E.compose(E.unflatten(S.row(i)), E.unflatten(R.row(j)))));
        Matrix S2 = Matrix::from_rows(prod_rows, E.flat_len, p).row_basis();
        if (S2.rows >= S.rows) return false;  // not shrinking -> not nilpotent
        S = S2;
    }
    return S.rows == 0;
}

void decompose_into(const Rep& x, std::vector<Rep>& out);

// Attempt a Fitting split along phi - c*id; true if split happened.
bool try_split(const Rep& x, const EndAlgebra& E, const RepHom& phi, std::vector<Rep>& out) {
    uint32_t p = x.A->characteristic();
    int lg = ceil_log2(std::max(E.n, 2)) + 1;
    RepHom id = E.identity();
    for (uint32_t c = 0; c < p; ++c) {
        RepHom psi = phi;
        for (size_t v = 0; v < psi.f.size(); ++v) psi.f[v] = psi.f[v].sub(id.f[v].scaled(c));
        RepHom pn = E.power(psi, lg);
        int r = E.hom_rank(pn);
        if (r == 0 || r == E.n) continue;
        // stability
        RepHom pn2 = E.compose(pn, pn);
        if (E.hom_rank(pn2) != r) continue;
        std::vector<Matrix> im_rows, ker_rows;
        bool ok = true;
        for (size_t v = 0; v < x.dims.size(); ++v) {
            Matrix im = pn.f[v].row_basis();
            Matrix ker = pn.f[v].left_kernel();
            if (im.rows + ker.rows != x.dims[v]) ok = false;
            im_rows.push_back(im);
            ker_rows.push_back(ker);
        }
        if (!ok) continue;
        Rep a = sub_rep(x, im_rows);
        Rep b = sub_rep(x, ker_rows);
        if (a.total_dim() + b.total_dim() != x.total_dim()) continue;
        decompose_into(a, out);
        decompose_into(b, out);
        return true;
    }
    return false;
}

void decompose_into(const Rep& x, std::vector<Rep>& out) {
    if (x.is_zero()) return;
    EndAlgebra E;
    E.x = &x;
    E.basis = hom_basis(x, x);
    E.n = x.total_dim();
    E.flat_len = 0;
    for (int d : x.dims) E.flat_len += d * d;
    if (E.basis.size() == 1) {
        out.push_back(x);
        return;
    }
    for (const auto& b : E.basis)
        if (try_split(x, E, b, out)) return;
    for (size_t i = 0; i < E.basis.size(); ++i)
        for (size_t j = 0; j < E.basis.size(); ++j)
            if (try_split(x, E, E.compose(E.basis[i], E.basis[j]), out)) return;
    if (certify_local(E)) {
        out.push_back(x);
        return;
    }
    // deterministic random combinations before giving up
    std::mt19937 rng(0xC0FFEE ^ (uint32_t(x.total_dim()) << 8) ^ uint32_t(E.basis.size()));
    uint32_t p = x.A->characteristic();
    for (int tries = 0; tries < 256; ++tries) {
        RepHom phi;
        for (int d : x.dims) phi.f.push_back(Matrix(d, d, p));
        for (const auto& b : E.basis) {
            uint32_t c = rng() % p;
            if (!c) continue;
            for (size_t v = 0; v < phi.f.size(); ++v) phi.f[v] = phi.f[v].add(b.f[v].scaled(c));
        }
        if (try_split(x, E, phi, out)) return;
    }
    throw BuildError("non-split brick: endomorphism ring neither splits nor certifies local (dim " +
                     std::to_string(x.total_dim()) + ")");
}

}  // namespace

bool indec_isomorphic(const Rep& x, const Rep& y) {
    if (x.dims != y.dims) return false;
    auto homs = hom_basis(x, y);
    for (const auto& h : homs) {
        bool invertible = true;
        for (size_t v = 0; v < h.f.size(); ++v)
            if (h.f[v].rank() != x.dims[v]) invertible = false;
        if (invertible) return true;
    }
    return false;
}

std::vector<Summand> decompose(const Rep& m) {
    std::vector<Rep> parts;
    decompose_into(m, parts);
    std::vector<Summand> out;
    for (auto& p : parts) {
        bool matched = false;
        for (auto& s : out) {
            if (indec_isomorphic(s.rep, p)) {
                ++s.multiplicity;
                matched = true;
                break;
            }
        }
        if (!matched) out.push_back({std::move(p), 1});
    }
    return out;
}

std::vector<long long> g_vector(const Rep& m) {
    const BoundAlgebra& a = *m.A;
    std::vector<long long> g(a.num_vertices(), 0);
    if (m.is_zero()) return g;
    Presentation pr = minimal_presentation(m);
    for (int v : pr.p0) g[v]++;
    for (int v : pr.p1) g[v]--;
    return g;
}

}  // namespace stt
