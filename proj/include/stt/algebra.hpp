#pragma once

#include <memory>

#include "stt/matrix.hpp"
#include "stt/quiver.hpp"

namespace stt {

// A bound quiver algebra FQ/I with an exact path basis and multiplication
// table over F_p. Construction is self-verifying: the ideal span is built
// from honest products u·r·v (no truncation), every path of length cap must
// reduce to zero, the table is checked associative, the relations are checked
// to evaluate to zero, and a dimension argument then pins A = FQ/<relations>
// exactly.
class BoundAlgebra {
  public:
    struct BasisPath {
        int source = 0;
        int target = 0;
        std::vector<int> arrows;
        int length() const { return int(arrows.size()); }
    };

    static BoundAlgebra build(const Quiver& q, const std::vector<Relation>& rels,
                              uint32_t p, int cap);

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    uint32_t characteristic() const { return p_; }
    int cap() const { return cap_; }
    int dim() const { return int(basis_.size()); }
    int num_vertices() const { return quiver_.num_vertices(); }
    const std::vector<BasisPath>& basis() const { return basis_; }
    int lazy_index(int v) const { return lazy_[v]; }
    int arrow_basis_index(int a) const { return arrow_basis_[a]; }
    int radical_length() const { return max_len_; }  // longest basis path

    // Product of two basis elements, as coefficients over the basis.
    const Vec& table(int i, int j) const { return table_[size_t(i) * dim() + j]; }
    Vec mul(const Vec& x, const Vec& y) const;
    Vec elem_of_path(const Path& path) const;  // class of an arbitrary path word
    Vec elem_of_word(const std::vector<std::string>& arrow_names) const;
    Vec unit() const;
    std::string elem_to_string(const Vec& x) const;

    // c[i][j] = number of basis paths from vertex i to vertex j
    // (= dim Hom(P_i, P_j), the path-count table between vertices).
    std::vector<std::vector<long long>> cartan_matrix() const;

    // Basis of the center, and the sub-list lying in rad A.
    struct Center {
        std::vector<Vec> basis;
        std::vector<Vec> in_radical;
    };
    Center center_basis() const;
    bool is_central(const Vec& x) const;

    // A/<gens>. Generators with lazy-path components remove vertices
    // (e_v in the ideal); radical components become new relations.
    BoundAlgebra quotient_by_ideal(const std::vector<Vec>& gens) const;
    // A/AeA for e = sum of the lazy paths outside `keep`.
    BoundAlgebra support_quotient(const std::vector<int>& keep) const;

    BoundAlgebra opposite() const;
    std::vector<BoundAlgebra> block_decompose() const;

    bool same_structure_constants(const BoundAlgebra& other) const;

  private:
    Quiver quiver_;
    std::vector<Relation> relations_;
    uint32_t p_ = 2;
    int cap_ = 12;
    int max_len_ = 0;
    std::vector<BasisPath> basis_;
    std::vector<int> lazy_;         // vertex -> basis index of e_v
    std::vector<int> arrow_basis_;  // arrow -> basis index
    std::vector<Vec> table_;

    void verify(const std::vector<Relation>& rels);
};

// eAe for an idempotent e given by a vertex subset: the structure constants
// on the kept-endpoint basis. Not always presentable by the induced
// subquiver; as_bound_algebra() re-derives a certified presentation when no
// kept basis path travels through a removed vertex.
class TruncatedAlgebra {
  public:
    TruncatedAlgebra(const BoundAlgebra& parent, std::vector<int> keep);

    int dim() const { return int(kept_.size()); }
    uint32_t characteristic() const { return parent_->characteristic(); }
    const std::vector<int>& kept_basis() const { return kept_; }
    const std::vector<int>& kept_vertices() const { return keep_; }
    Vec table(int i, int j) const;  // product over the kept basis
    bool presentable_on_subquiver() const { return clean_; }
    BoundAlgebra as_bound_algebra() const;

  private:
    const BoundAlgebra* parent_;
    std::vector<int> keep_;
    std::vector<int> kept_;  // indices into parent basis
    bool clean_ = true;
};

// Convenience for tests and the catalog: an algebra element from a word.
Vec path_elem(const BoundAlgebra& a, const std::vector<std::string>& arrow_names);
Vec elem_sum(const BoundAlgebra& a, const std::vector<Vec>& xs);

}  // namespace stt
