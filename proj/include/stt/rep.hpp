#pragma once

#include "stt/algebra.hpp"

namespace stt {

// A right module as a quiver representation: a dimension per vertex and one
// matrix per arrow. Module elements are row vectors; an arrow a: i -> j acts
// as m -> m * act[a] sending the vertex-i component into the vertex-j one.
struct Rep {
    const BoundAlgebra* A = nullptr;
    std::vector<int> dims;
    std::vector<Matrix> act;  // per arrow, dims[from] x dims[to]

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    void validate() const;  // relations annihilate, shapes match

    static Rep zero(const BoundAlgebra& a);
    static Rep simple(const BoundAlgebra& a, int v);
    static Rep projective(const BoundAlgebra& a, int v);
    static Rep direct_sum(const BoundAlgebra& a, const std::vector<const Rep*>& parts);

    // Action matrix of an algebra element restricted to source s, target t.
    Matrix elem_action(const Vec& x, int s, int t) const;

    std::string dims_str() const;
    std::string to_json(const std::string& name) const;
};

// A homomorphism M -> N: one matrix per vertex, m -> m * f[v].
struct RepHom {
    std::vector<Matrix> f;
};

// Basis of Hom_A(M, N) by solving the intertwiner equations.
std::vector<RepHom> hom_basis(const Rep& m, const Rep& n);
int hom_dim(const Rep& m, const Rep& n);

// Subrepresentation spanned by arrow-stable row spaces, with its inclusion.
Rep sub_rep(const Rep& m, const std::vector<Matrix>& rows, RepHom* inclusion = nullptr);
// Quotient of m by the subrepresentation spanned by `rows`.
Rep quotient_rep(const Rep& m, const std::vector<Matrix>& rows, RepHom* projection = nullptr);
// Kernel of f: m -> n inside m; image and cokernel of f inside its codomain n.
Rep kernel_rep(const Rep& m, const RepHom& f, RepHom* inclusion = nullptr);
Rep image_rep(const Rep& n, const RepHom& f);
Rep cokernel_rep(const Rep& n, const RepHom& f);

// rad M = image of the arrow ideal; top multiplicities per vertex.
std::vector<Matrix> radical_rows(const Rep& m);
Rep radical_rep(const Rep& m);
std::vector<int> top_multiplicities(const Rep& m);

// Minimal projective presentation P1 -> P0 -> M -> 0.
struct Presentation {
    std::vector<int> p0;               // projective vertices of P0
    std::vector<int> p1;               // projective vertices of P1
    std::vector<std::vector<Vec>> y;   // y[s][t] in e_{p0[t]} A e_{p1[s]}
};

// Projective cover P0 -> M (cover vertices + the map).
std::pair<Rep, RepHom> projective_cover(const Rep& m, std::vector<int>* vertices = nullptr);
Presentation minimal_presentation(const Rep& m);

// Nakayama functor on projectives: nu P_i = D(A e_i) as a representation.
Rep nu_projective(const BoundAlgebra& a, int i);
// tau M via 0 -> tau M -> nu P1 -> nu P0.
Rep tau(const Rep& m);

// Fast path: Hom(N, tau M) == 0 iff Hom(f1,N) is surjective for the minimal
// presentation f1 of M. The literal tau-based route is the debug oracle.
bool hom_tau_vanishes(const Presentation& pm, const Rep& n);
bool is_tau_rigid(const Rep& m);
bool is_tau_rigid_literal(const Rep& m);  // dim Hom(M, tau M) == 0 directly

// Krull-Schmidt decomposition. Indecomposability is certified by exhibiting
// End(X) = F*id + (nilpotent ideal); if the endomorphism structure cannot be
// split or certified, throws BuildError("non-split brick ...").
struct Summand {
    Rep rep;
    int multiplicity = 1;
};
std::vector<Summand> decompose(const Rep& m);

// Isomorphism test for indecomposables with split local endomorphism rings.
bool indec_isomorphic(const Rep& x, const Rep& y);

// g-vector of a module from its minimal presentation.
std::vector<long long> g_vector(const Rep& m);

}  // namespace stt
