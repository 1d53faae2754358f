#include "stt/catalog.hpp"

#include <functional>
#include <map>

#include "stt/schur.hpp"

namespace stt {

namespace {

struct Entry {
    Quiver quiver;
    std::vector<std::vector<std::pair<long long, std::vector<std::string>>>> relations;
    uint32_t default_char = 2;
    int default_cap = 12;
};

Quiver line_quiver(int m) {
    Quiver q;
    for (int i = 1; i <= m; ++i) q.vertices.push_back(std::to_string(i));
    for (int i = 1; i < m; ++i) {
        q.arrows.push_back({"a" + std::to_string(i), i - 1, i});
        q.arrows.push_back({"b" + std::to_string(i), i, i - 1});
    }
    return q;
}

// 1 <-> 2 <-> 3 horizontally, 2 <-> 4 vertically (central vertex 2).
Quiver star_quiver(const std::vector<std::string>& arrow_names) {
    Quiver q;
    q.vertices = {"1", "2", "3", "4"};
    // arrow_names: {1->2, 2->1, 2->4, 4->2, 2->3, 3->2}
    q.arrows.push_back({arrow_names[0], 0, 1});
    q.arrows.push_back({arrow_names[1], 1, 0});
    q.arrows.push_back({arrow_names[2], 1, 3});
    q.arrows.push_back({arrow_names[3], 3, 1});
    q.arrows.push_back({arrow_names[4], 1, 2});
    q.arrows.push_back({arrow_names[5], 2, 1});
    return q;
}

using W = std::vector<std::string>;
using RawRel = std::vector<std::pair<long long, W>>;

Entry example26() {
    Entry e;
    e.quiver.vertices = {"1", "2"};
    e.quiver.arrows = {{"a", 0, 1}, {"b", 1, 0}};
    e.relations = {{{1, {"a", "b"}}}, {{1, {"b", "a"}}}};
    e.default_cap = 6;
    return e;
}

Entry brauer_line(int m) {
    Entry e;
    e.quiver = line_quiver(m);
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto b = [](int i) { return "b" + std::to_string(i); };
    for (int i = 1; i <= m - 2; ++i) {
        e.relations.push_back({{1, {a(i), a(i + 1)}}});
        e.relations.push_back({{1, {b(i + 1), b(i)}}});
        e.relations.push_back({{1, {b(i), a(i)}}, {-1, {a(i + 1), b(i + 1)}}});
    }
    if (m >= 2) {
        e.relations.push_back({{1, {a(1), b(1), a(1)}}});
        e.relations.push_back({{1, {b(1), a(1), b(1)}}});
        e.relations.push_back({{1, {a(m - 1), b(m - 1), a(m - 1)}}});
        e.relations.push_back({{1, {b(m - 1), a(m - 1), b(m - 1)}}});
    }
    e.default_cap = 8;
    return e;
}

Entry rep_finite_block(int m) {
    Entry e = brauer_line(m);
    e.relations.clear();
    auto a = [](int i) { return "a" + std::to_string(i); };
    auto b = [](int i) { return "b" + std::to_string(i); };
    if (m >= 2) e.relations.push_back({{1, {a(1), b(1)}}});
    for (int i = 1; i <= m - 2; ++i) {
        e.relations.push_back({{1, {a(i), a(i + 1)}}});
        e.relations.push_back({{1, {b(i + 1), b(i)}}});
        e.relations.push_back({{1, {b(i), a(i)}}, {-1, {a(i + 1), b(i + 1)}}});
    }
    e.default_cap = 8;
    return e;
}

Entry d3() {
    Entry e;
    e.quiver = line_quiver(3);
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"b2", "a2"}}},
        {{1, {"a1", "a2", "b2"}}},
        {{1, {"a2", "b2", "b1"}}},
    };
    e.default_cap = 10;
    return e;
}

Entry d4() {
    Entry e;
    e.quiver = star_quiver({"a1", "b1", "b2", "a2", "b3", "a3"});
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a2", "b2"}}},
        {{1, {"a3", "b1"}}},
        {{1, {"a3", "b2"}}},
        {{1, {"a1", "b3"}}},
        {{1, {"a2", "b3"}}},
        {{1, {"a1", "b2", "a2"}}},
        {{1, {"b2", "a2", "b1"}}},
        {{1, {"b2", "a2"}}, {-1, {"b3", "a3"}}},
    };
    e.default_cap = 10;
    return e;
}

Entry r4() {
    Entry e;
    e.quiver = line_quiver(4);
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a1", "a2"}}},
        {{1, {"b2", "b1"}}},
        {{1, {"a2", "b2"}}, {-1, {"b1", "a1"}}},
        {{1, {"a3", "b3"}}, {-1, {"b2", "a2"}}},
    };
    e.default_cap = 10;
    return e;
}

Entry h4() {
    Entry e;
    e.quiver = star_quiver({"a1", "b1", "b2", "a2", "a3", "b3"});
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a1", "b2"}}},
        {{1, {"a2", "b1"}}},
        {{1, {"a2", "b2"}}},
        {{1, {"a1", "a3"}}},
        {{1, {"b3", "b1"}}},
        {{1, {"a3", "b3"}}, {-1, {"b1", "a1"}}, {-1, {"b2", "a2"}}},
    };
    e.default_cap = 10;
    return e;
}

Entry k4() {
    Entry e;
    e.quiver = line_quiver(4);
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a2", "b2"}}},
        {{1, {"b3", "a3"}}},
        {{1, {"a1", "a2", "a3"}}},
        {{1, {"b3", "b2", "b1"}}},
        {{1, {"b1", "a1", "a2"}}, {-1, {"a2", "a3", "b3"}}},
        {{1, {"b2", "b1", "a1"}}, {-1, {"a3", "b3", "b2"}}},
    };
    e.default_cap = 12;
    return e;
}

Entry u4() {
    Entry e;
    e.quiver = line_quiver(4);
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a2", "b2"}}},
        {{1, {"a1", "a2", "a3"}}},
        {{1, {"b3", "b2", "b1"}}},
        {{1, {"a3", "b3"}}, {-1, {"b2", "a2"}}},
    };
    e.default_cap = 12;
    return e;
}

Entry n5() {
    Entry e;
    e.quiver = line_quiver(5);
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a2", "b2"}}},
        {{1, {"a3", "b3"}}},
        {{1, {"b4", "a4"}}},
        {{1, {"a1", "a2", "a3", "a4"}}},
        {{1, {"b4", "b3", "b2", "b1"}}},
        {{1, {"b2", "a2"}}, {-1, {"a3", "a4", "b4", "b3"}}},
        {{1, {"a2", "a3", "a4", "b4"}}, {-1, {"b1", "a1", "a2", "a3"}}},
        {{1, {"b3", "b2", "b1", "a1"}}, {-1, {"a4", "b4", "b3", "b2"}}},
    };
    e.default_cap = 12;
    return e;
}

Entry l5() {
    Entry e;
    // vertices named by the Young-module partitions of the S(2,8) block
    e.quiver.vertices = {"5,3", "4,4", "6,2", "7,1", "8"};
    e.quiver.arrows = {
        {"a1", 0, 1}, {"b1", 1, 0},
        {"a2", 1, 2}, {"b2", 2, 1},
        {"a3", 2, 3}, {"b3", 3, 2},
        {"a4", 1, 4}, {"b4", 4, 1},
    };
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a1", "a4"}}},
        {{1, {"b3", "a3"}}},
        {{1, {"b2", "a2"}}},
        {{1, {"b4", "a4"}}},
        {{1, {"b4", "b1"}}},
        {{1, {"b4", "a2", "b2"}}},
        {{1, {"a1", "a2", "a3"}}},
        {{1, {"a2", "b2", "a4"}}},
        {{1, {"b3", "b2", "b1"}}},
        {{1, {"b1", "a1", "a2"}}, {-1, {"a2", "a3", "b3"}}},
        {{1, {"b2", "b1", "a1"}}, {-1, {"a3", "b3", "b2"}}},
        {{1, {"a2", "b2", "b1", "a1"}}, {-1, {"b1", "a1", "a2", "b2"}}},
    };
    e.default_cap = 12;
    return e;
}

Entry m4() {
    Entry e;
    e.quiver = star_quiver({"a1", "b1", "a3", "b3", "a2", "b2"});
    // quiver: 1<->2<->3 and 2<->4 with a3: 2->4, b3: 4->2
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"b3", "a3"}}},
        {{1, {"a1", "a2"}}},
        {{1, {"b2", "b1"}}},
        {{1, {"a1", "a3", "b3"}}},
        {{1, {"a3", "b3", "b1"}}},
        {{1, {"b1", "a1"}}, {-1, {"a2", "b2"}}},
    };
    e.default_cap = 10;
    return e;
}

Entry p4() {
    Entry e;
    // preprojective algebra of Dynkin type D4; central vertex 2
    e.quiver.vertices = {"1", "2", "3", "4"};
    e.quiver.arrows = {
        {"a1", 0, 1}, {"b1", 1, 0},
        {"a3", 2, 1}, {"b3", 1, 2},
        {"a4", 3, 1}, {"b4", 1, 3},
    };
    e.relations = {
        {{1, {"a1", "b1"}}},
        {{1, {"a3", "b3"}}},
        {{1, {"a4", "b4"}}},
        {{1, {"b1", "a1"}}, {1, {"b3", "a3"}}, {1, {"b4", "a4"}}},
    };
    e.default_cap = 12;
    return e;
}

Entry point_algebra() {
    Entry e;
    e.quiver.vertices = {"1"};
    e.default_cap = 2;
    return e;
}

Entry direct_sum(const std::vector<Entry>& blocks) {
    Entry e;
    e.default_cap = 2;
    for (size_t b = 0; b < blocks.size(); ++b) {
        std::string pre = "b" + std::to_string(b + 1) + "_";
        int off = e.quiver.num_vertices();
        for (const auto& v : blocks[b].quiver.vertices) e.quiver.vertices.push_back(pre + v);
        for (const auto& a : blocks[b].quiver.arrows)
            e.quiver.arrows.push_back({pre + a.name, a.from + off, a.to + off});
        for (const auto& rel : blocks[b].relations) {
            RawRel nr;
            for (const auto& [c, word] : rel) {
                W nw;
                for (const auto& an : word) nw.push_back(pre + an);
                nr.emplace_back(c, nw);
            }
            e.relations.push_back(nr);
        }
        e.default_cap = std::max(e.default_cap, blocks[b].default_cap);
    }
    return e;
}

std::map<std::string, std::function<Entry()>> entry_builders() {
    std::map<std::string, std::function<Entry()>> m;
    m["Example26"] = example26;
    m["D3"] = d3;
    m["D4"] = d4;
    m["R4"] = r4;
    m["H4"] = h4;
    m["K4"] = k4;
    m["U4"] = u4;
    m["N5"] = n5;
    m["L5"] = l5;
    m["M4"] = m4;
    m["P4"] = p4;
    m["F"] = point_algebra;
    auto A = [](int k) { return [k]() { return rep_finite_block(k); }; };
    auto comp = [](std::vector<std::function<Entry()>> parts, uint32_t chr) {
        return [parts, chr]() {
            std::vector<Entry> blocks;
            for (const auto& f : parts) blocks.push_back(f());
            Entry e = direct_sum(blocks);
            e.default_char = chr;
            return e;
        };
    };
    m["S(2,4)_p2"] = comp({d3}, 2);
    m["S(2,9)_p2"] = comp({d3, point_algebra, point_algebra}, 2);
    m["S(2,11)_p2"] = comp({d3, A(2), point_algebra}, 2);
    m["S(2,6)_p2"] = comp({k4}, 2);
    m["S(2,13)_p2"] = comp({k4, A(2), point_algebra}, 2);
    m["S(2,15)_p2"] = comp({k4, A(2), point_algebra, point_algebra}, 2);
    m["S(2,8)_p2"] = comp({l5}, 2);
    m["S(2,17)_p2"] = comp({l5, A(2), point_algebra, point_algebra}, 2);
    m["S(2,19)_p2"] = comp({d3, l5, point_algebra, point_algebra}, 2);
    m["S(3,4)_p2"] = comp({m4}, 2);
    m["S(3,5)_p2"] = comp({u4, point_algebra}, 2);
    m["S(4,5)_p2"] = comp({u4, A(2)}, 2);
    m["S(5,5)_p2"] = comp({n5, A(2)}, 2);
    m["S(2,9)_p3"] = comp({d4, point_algebra}, 3);
    m["S(2,10)_p3"] = comp({d4, point_algebra, point_algebra}, 3);
    m["S(2,11)_p3"] = comp({d4, A(2)}, 3);
    m["S(3,7)_p3"] = comp({r4, A(2), A(2)}, 3);
    m["S(3,8)_p3"] = comp({r4, h4, A(2)}, 3);
    return m;
}

BoundAlgebra build_entry(const Entry& e, uint32_t char_override, int cap_override) {
    uint32_t p = char_override ? char_override : e.default_char;
    int cap = cap_override ? cap_override : e.default_cap;
    Quiver q = e.quiver;
    q.validate();
    std::vector<Relation> rels;
    for (const auto& raw : e.relations) {
        Relation r = make_relation(q, p, raw);
        if (!r.terms.empty()) rels.push_back(r);
    }
    return BoundAlgebra::build(q, rels, p, cap);
}

BoundAlgebra central_quotient(const std::string& base, uint32_t char_override, int cap_override,
                              const std::vector<std::vector<W>>& gen_words) {
    BoundAlgebra a = catalog(base, char_override, cap_override);
    std::vector<Vec> gens;
    for (const auto& words : gen_words) {
        Vec g(a.dim(), 0);
        for (const auto& w : words)
            vec_addmul(g, a.elem_of_word(w), 1 % a.characteristic(), a.characteristic());
        gens.push_back(g);
    }
    return a.quotient_by_ideal(gens);
}

Quiver grid_quiver(const std::vector<std::string>& vertices,
                   const std::vector<std::pair<int, int>>& pair_edges) {
    Quiver q;
    q.vertices = vertices;
    for (auto [i, j] : pair_edges) {
        q.arrows.push_back({"x" + std::to_string(i) + "_" + std::to_string(j), i, j});
        q.arrows.push_back({"x" + std::to_string(j) + "_" + std::to_string(i), j, i});
    }
    q.validate();
    return q;
}

}  // namespace

BoundAlgebra catalog(const std::string& name, uint32_t char_override, int cap_override) {
    static const auto builders = entry_builders();
    auto it = builders.find(name);
    if (it != builders.end()) return build_entry(it->second(), char_override, cap_override);
    if (name.rfind("A_", 0) == 0) {
        int m = std::stoi(name.substr(2));
        if (m < 1) throw DataError("A_m needs m >= 1");
        if (m == 1) return build_entry(point_algebra(), char_override, cap_override);
        Entry e = rep_finite_block(m);
        return build_entry(e, char_override, cap_override);
    }
    if (name.rfind("Lambda_", 0) == 0) {
        int m = std::stoi(name.substr(7));
        if (m < 1) throw DataError("Lambda_m needs m >= 1");
        if (m == 1) return build_entry(point_algebra(), char_override, cap_override);
        return build_entry(brauer_line(m), char_override, cap_override);
    }
    if (name == "D3_tilde")
        return central_quotient("D3", char_override, cap_override,
                                {{{"a2", "b2"}}, {{"b2", "b1", "a1", "a2"}}});
    if (name == "D4_tilde")
        return central_quotient("D4", char_override, cap_override,
                                {{{"b2", "a2"}}, {{"a3", "b3"}}, {{"a2", "b1", "a1", "b2"}}});
    if (name == "R4_tilde")
        return central_quotient("R4", char_override, cap_override,
                                {{{"b1", "a1"}}, {{"b2", "a2"}, {"b3", "a3"}}});
    if (name == "H4_tilde")
        return central_quotient("H4", char_override, cap_override,
                                {{{"b1", "a1"}}, {{"b2", "a2"}, {"b3", "a3"}},
                                 {{"b3", "b2", "a2", "a3"}}});
    if (name == "K4_tilde")
        return central_quotient("K4", char_override, cap_override,
                                {{{"b1", "a1"}, {"a3", "b3"}}, {{"b3", "b2", "a2", "a3"}}});
    if (name == "U4_tilde")
        return central_quotient("U4", char_override, cap_override,
                                {{{"b2", "a2"}, {"b3", "a3"}}, {{"b2", "b1", "a1", "a2"}}});
    throw DataError("unknown catalog algebra: " + name);
}

bool catalog_has(const std::string& name) {
    try {
        catalog(name);
        return true;
    } catch (...) {
        return false;
    }
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names = {"A_1",  "A_2",  "A_3",  "A_4",  "A_5",  "Lambda_2",
                                      "Lambda_3", "Example26", "D3", "D4", "R4", "H4",
                                      "K4", "U4", "N5", "L5", "M4", "P4", "F",
                                      "D3_tilde", "D4_tilde", "R4_tilde", "H4_tilde",
                                      "K4_tilde", "U4_tilde"};
    for (const auto& [k, v] : entry_builders())
        if (std::find(names.begin(), names.end(), k) == names.end()) names.push_back(k);
    return names;
}

Quiver catalog_quiver(const std::string& name) {
    // s2_<r>_p<p>: generated from the two-part arrow recursion
    if (name.rfind("s2_", 0) == 0) {
        auto rest = name.substr(3);
        auto sep = rest.find("_p");
        if (sep != std::string::npos) {
            int r = std::stoi(rest.substr(0, sep));
            uint32_t p = std::stoul(rest.substr(sep + 2));
            return schur::s2r_quiver(p, r).quiver;
        }
    }
    // block quivers of the wild cases, shipped as shape data
    if (name == "s3_6_p2")
        return grid_quiver({"1", "2", "3", "4", "5", "6"},
                           {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
    if (name == "s3_7_p2")
        return grid_quiver({"1", "2", "3", "4", "5", "6"},
                           {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {1, 5}, {3, 4}});
    if (name == "s3_8_p2")
        return grid_quiver({"1", "2", "3", "4", "5", "6", "7", "8", "9"},
                           {{0, 1}, {1, 2}, {0, 6}, {2, 8}, {1, 4}, {3, 4}, {4, 7}, {5, 7},
                            {6, 7}, {7, 8}});
    if (name == "s4_4_p2" || name == "s4_8_p3")
        return grid_quiver({"1", "2", "3", "4", "5"}, {{0, 1}, {0, 3}, {1, 4}, {2, 3}, {3, 4}});
    if (name == "s3_6_p3" || name == "s3_2p_p5")
        return grid_quiver({"1", "2", "3", "4", "5", "6"},
                           {{0, 2}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {4, 5}});
    if (name == "s3_10_p3")
        return grid_quiver({"1", "2", "3", "4", "5", "6"},
                           {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
    if (name == "s4_7_p3")
        return grid_quiver({"1", "2", "3", "4", "5", "6", "7"},
                           {{0, 3}, {0, 1}, {3, 4}, {3, 6}, {1, 2}, {1, 4}, {4, 5}, {4, 6},
                            {2, 6}});
    throw DataError("unknown catalog quiver: " + name);
}

bool catalog_quiver_has(const std::string& name) {
    try {
        catalog_quiver(name);
        return true;
    } catch (...) {
        return false;
    }
}

std::vector<std::string> catalog_quiver_names() {
    return {"s2_10_p2", "s2_11_p2", "s2_21_p2", "s2_12_p3", "s3_6_p2", "s3_7_p2", "s3_8_p2",
            "s4_4_p2", "s3_6_p3", "s3_10_p3", "s4_7_p3", "s4_8_p3", "s3_2p_p5"};
}

}  // namespace stt
