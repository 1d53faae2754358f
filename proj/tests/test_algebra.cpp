#include "doctest.h"
#include "stt/catalog.hpp"

using namespace stt;

namespace {

std::vector<long long> row_sums(const BoundAlgebra& a) {
    std::vector<long long> s;
    for (const auto& row : a.cartan_matrix()) {
        long long t = 0;
        for (auto c : row) t += c;
        s.push_back(t);
    }
    return s;
}

}  // namespace

TEST_CASE("build: the worked example, the D3 quotient, the point algebra") {
    BoundAlgebra ex = catalog("Example26");
    CHECK(ex.dim() == 4);
    CHECK(ex.radical_length() == 1);  // basis e1, e2, a, b

    BoundAlgebra d3t = catalog("D3_tilde");
    CHECK(d3t.dim() == 12);
    CHECK(row_sums(d3t) == std::vector<long long>{3, 5, 4});

    BoundAlgebra pt = catalog("A_1");
    CHECK(pt.dim() == 1);
}

TEST_CASE("build rejects non-admissible ideals at the cap") {
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    // no relations: the loop never dies
    CHECK_THROWS_AS(BoundAlgebra::build(q, {}, 2, 6), BuildError);
    // x^3 = x^2 is not admissible either (x^2 survives every power)
    Relation r = make_relation(q, 2, {{1, {"x", "x", "x"}}, {-1, {"x", "x"}}});
    CHECK_THROWS_AS(BoundAlgebra::build(q, {r}, 2, 6), BuildError);
}

TEST_CASE("cartan matrices of D4, P4, and a semisimple algebra") {
    CHECK(catalog("D4").cartan_matrix() ==
          std::vector<std::vector<long long>>{
              {1, 1, 0, 1}, {1, 3, 1, 2}, {0, 1, 2, 0}, {1, 2, 0, 2}});
    CHECK(catalog("P4").cartan_matrix() ==
          std::vector<std::vector<long long>>{
              {2, 2, 1, 1}, {2, 4, 2, 2}, {1, 2, 2, 1}, {1, 2, 1, 2}});
    // semisimple F x F
    Quiver q;
    q.vertices = {"1", "2"};
    BoundAlgebra ss = BoundAlgebra::build(q, {}, 2, 2);
    CHECK(ss.cartan_matrix() == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});
    // dim = sum of Cartan entries
    for (const char* n : {"D3", "D4", "R4", "H4", "K4", "U4", "L5", "N5", "M4", "P4"}) {
        BoundAlgebra a = catalog(n);
        long long total = 0;
        for (const auto& row : a.cartan_matrix())
            for (auto c : row) total += c;
        CHECK(total == a.dim());
    }
}

TEST_CASE("center: the known central elements are found") {
    BoundAlgebra d3 = catalog("D3");
    auto c3 = d3.center_basis();
    Matrix in_rad = Matrix::from_rows({}, d3.dim(), 2);
    {
        std::vector<Vec> rows;
        for (const auto& z : c3.in_radical) rows.push_back(z);
        in_rad = Matrix::from_rows(rows, d3.dim(), 2);
    }
    CHECK(in_rad.rowspace_contains(d3.elem_of_word({"a2", "b2"})));
    CHECK(in_rad.rowspace_contains(d3.elem_of_word({"b2", "b1", "a1", "a2"})));

    BoundAlgebra r4 = catalog("R4");
    auto cr = r4.center_basis();
    std::vector<Vec> rows;
    for (const auto& z : cr.in_radical) rows.push_back(z);
    Matrix rad_r4 = Matrix::from_rows(rows, r4.dim(), 2);
    CHECK(rad_r4.rowspace_contains(r4.elem_of_word({"b1", "a1"})));
    Vec mixed = r4.elem_of_word({"b2", "a2"});
    vec_addmul(mixed, r4.elem_of_word({"b3", "a3"}), 1, 2);
    CHECK(rad_r4.rowspace_contains(mixed));
    CHECK(r4.is_central(mixed));

    // commutative algebra: center is everything
    Quiver q;
    q.vertices = {"1"};
    q.arrows = {{"x", 0, 0}};
    Relation rel = make_relation(q, 2, {{1, {"x", "x"}}});
    BoundAlgebra fx2 = BoundAlgebra::build(q, {rel}, 2, 4);
    CHECK(fx2.center_basis().basis.size() == 2);

    // H4 and K4 central elements from the proofs
    BoundAlgebra h4 = catalog("H4");
    Vec h_mix = h4.elem_of_word({"b2", "a2"});
    vec_addmul(h_mix, h4.elem_of_word({"b3", "a3"}), 1, 2);
    CHECK(h4.is_central(h4.elem_of_word({"b1", "a1"})));
    CHECK(h4.is_central(h_mix));
    BoundAlgebra k4 = catalog("K4");
    Vec k_mix = k4.elem_of_word({"b1", "a1"});
    vec_addmul(k_mix, k4.elem_of_word({"a3", "b3"}), 1, 2);
    CHECK(k4.is_central(k_mix));
    CHECK(k4.is_central(k4.elem_of_word({"b3", "b2", "a2", "a3"})));
    // Brauer line: a1 b1 is central
    BoundAlgebra lam = catalog("Lambda_3");
    CHECK(lam.is_central(lam.elem_of_word({"a1", "b1"})));
}

TEST_CASE("quotients: central reduction, zero generator, Brauer line") {
    BoundAlgebra d3 = catalog("D3");
    std::vector<Vec> gens{d3.elem_of_word({"a2", "b2"}), d3.elem_of_word({"b2", "b1", "a1", "a2"})};
    BoundAlgebra q = d3.quotient_by_ideal(gens);
    CHECK(q.dim() == 12);
    CHECK(q.same_structure_constants(catalog("D3_tilde")));

    BoundAlgebra same = d3.quotient_by_ideal({Vec(d3.dim(), 0)});
    CHECK(same.dim() == d3.dim());
    CHECK(same.same_structure_constants(d3));

    for (int m : {2, 3, 4}) {
        BoundAlgebra lam = catalog("Lambda_" + std::to_string(m));
        BoundAlgebra am = catalog("A_" + std::to_string(m));
        BoundAlgebra quo = lam.quotient_by_ideal({lam.elem_of_word({"a1", "b1"})});
        CHECK(quo.dim() == am.dim());
        CHECK(quo.cartan_matrix() == am.cartan_matrix());
    }
    // quotient by the unit is zero
    BoundAlgebra ex = catalog("Example26");
    CHECK_THROWS_AS(ex.quotient_by_ideal({ex.unit()}), BuildError);
}

TEST_CASE("idempotent truncation") {
    // D4_tilde restricted to vertex 1 and the central vertex: the 2-simple
    // algebra of the b_{i,j} computation (3 tau-tilting modules downstream)
    BoundAlgebra d4t = catalog("D4_tilde");
    TruncatedAlgebra tr(d4t, {0, 1});
    CHECK(tr.dim() == 5);
    CHECK(tr.presentable_on_subquiver());
    BoundAlgebra small = tr.as_bound_algebra();
    CHECK(small.dim() == 5);
    CHECK(small.num_vertices() == 2);
    CHECK(small.cartan_matrix() == catalog("A_2").cartan_matrix());

    // keep everything: same algebra
    BoundAlgebra d3 = catalog("D3");
    TruncatedAlgebra full(d3, {0, 1, 2});
    CHECK(full.as_bound_algebra().same_structure_constants(d3));

    // U4 + F restricted to the U4 block
    BoundAlgebra s35 = catalog("S(3,5)_p2");
    TruncatedAlgebra u4part(s35, {0, 1, 2, 3});
    BoundAlgebra u4 = u4part.as_bound_algebra();
    CHECK(u4.dim() == catalog("U4").dim());
    CHECK(u4.cartan_matrix() == catalog("U4").cartan_matrix());

    // a through-path case is stored as structure constants only
    BoundAlgebra a3 = [] {
        Quiver q;
        q.vertices = {"1", "2", "3"};
        q.arrows = {{"a", 0, 1}, {"b", 1, 2}};
        return BoundAlgebra::build(q, {}, 2, 4);
    }();
    TruncatedAlgebra thru(a3, {0, 2});
    CHECK(thru.dim() == 3);  // e1, e3, ab
    CHECK_FALSE(thru.presentable_on_subquiver());
    CHECK_THROWS_AS(thru.as_bound_algebra(), BuildError);
    CHECK_FALSE(vec_is_zero(thru.table(0, 0)));  // e1 * e1 = e1
}

namespace {

// rebuild an algebra after a/b arrow-name swap (undoes the self-duality of
// the symmetric presentations)
BoundAlgebra swap_ab(const BoundAlgebra& a) {
    auto flip = [](std::string s) {
        s[0] = (s[0] == 'a') ? 'b' : 'a';
        return s;
    };
    Quiver renamed = a.quiver();
    for (auto& ar : renamed.arrows) ar.name = flip(ar.name);
    std::sort(renamed.arrows.begin(), renamed.arrows.end(),
              [](const Quiver::Arrow& x, const Quiver::Arrow& y) { return x.name < y.name; });
    std::vector<Relation> rels;
    for (const auto& r : a.relations()) {
        std::vector<std::pair<long long, std::vector<std::string>>> terms;
        for (const auto& t : r.terms) {
            std::vector<std::string> word;
            for (int ai : t.path.arrows) word.push_back(flip(a.quiver().arrows[ai].name));
            terms.emplace_back(t.coeff, word);
        }
        rels.push_back(make_relation(renamed, a.characteristic(), terms));
    }
    return BoundAlgebra::build(renamed, rels, a.characteristic(), a.cap());
}

}  // namespace

TEST_CASE("opposite algebra") {
    // the worked example has a symmetric presentation: op = itself up to a<->b
    BoundAlgebra ex = catalog("Example26");
    CHECK(swap_ab(ex.opposite()).same_structure_constants(ex));
    for (const char* n : {"D3", "K4", "M4"}) {
        BoundAlgebra a = catalog(n);
        BoundAlgebra opop = a.opposite().opposite();
        CHECK(opop.same_structure_constants(a));
        CHECK(a.opposite().dim() == a.dim());
    }
    // A_m is isomorphic to its opposite after swapping a_i <-> b_i
    for (int m : {2, 3, 4}) {
        BoundAlgebra am = catalog("A_" + std::to_string(m));
        BoundAlgebra rebuilt = swap_ab(am.opposite());
        CHECK(rebuilt.dim() == am.dim());
        CHECK(rebuilt.cartan_matrix() == am.cartan_matrix());
    }
}

TEST_CASE("block decomposition") {
    BoundAlgebra s211 = catalog("S(2,11)_p2");
    auto blocks = s211.block_decompose();
    REQUIRE(blocks.size() == 3);
    CHECK(blocks[0].dim() == 14);  // D3
    CHECK(blocks[1].dim() == 5);   // A_2
    CHECK(blocks[2].dim() == 1);   // F
    CHECK(blocks[0].cartan_matrix() == catalog("D3").cartan_matrix());

    CHECK(catalog("D3").block_decompose().size() == 1);

    Quiver q;
    q.vertices = {"1", "2"};
    BoundAlgebra ff = BoundAlgebra::build(q, {}, 2, 2);
    CHECK(ff.block_decompose().size() == 2);
}

TEST_CASE("algebra JSON round trip") {
    BoundAlgebra d3 = catalog("D3");
    AlgebraFile f;
    f.name = "D3";
    f.characteristic = d3.characteristic();
    f.cap = d3.cap();
    f.quiver = d3.quiver();
    for (const auto& rel : d3.relations()) {
        std::vector<std::pair<long long, std::vector<std::string>>> raw;
        for (const auto& t : rel.terms) {
            std::vector<std::string> word;
            for (int ar : t.path.arrows) word.push_back(d3.quiver().arrows[ar].name);
            raw.emplace_back(t.coeff, word);
        }
        f.relations.push_back(raw);
    }
    std::string text = algebra_to_json(f);
    AlgebraFile g = parse_algebra_json(text);
    CHECK(g.characteristic == 2);
    std::vector<Relation> rels;
    for (const auto& raw : g.relations) rels.push_back(make_relation(g.quiver, 2, raw));
    BoundAlgebra rebuilt = BoundAlgebra::build(g.quiver, rels, g.characteristic, g.cap);
    CHECK(rebuilt.same_structure_constants(d3));
}
