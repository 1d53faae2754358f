#include "stt/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"

namespace stt {

int Quiver::vertex_index(const std::string& name) const {
    for (size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == name) return int(i);
    throw DataError("unknown vertex: " + name);
}

int Quiver::arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
        if (arrows[i].name == name) return int(i);
    throw DataError("unknown arrow: " + name);
}

void Quiver::validate() const {
    std::set<std::string> vn(vertices.begin(), vertices.end());
    if (vn.size() != vertices.size()) throw DataError("duplicate vertex names");
    std::set<std::string> an;
    for (const auto& a : arrows) {
        if (!an.insert(a.name).second) throw DataError("duplicate arrow name: " + a.name);
        if (a.from < 0 || a.from >= num_vertices() || a.to < 0 || a.to >= num_vertices())
            throw DataError("arrow endpoint out of range: " + a.name);
    }
}

std::vector<std::vector<int>> Quiver::components() const {
    int n = num_vertices();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& a : arrows) {
                int w = -1;
                if (a.from == v) w = a.to;
                else if (a.to == v) w = a.from;
                if (w >= 0 && comp[w] < 0) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<int>> out(nc);
    for (int v = 0; v < n; ++v) out[comp[v]].push_back(v);
    return out;
}

Quiver Quiver::induced_subquiver(const std::vector<int>& keep, std::vector<int>* vertex_map) const {
    std::vector<int> old2new(num_vertices(), -1);
    Quiver q;
    for (int v : keep) {
        old2new[v] = int(q.vertices.size());
        q.vertices.push_back(vertices[v]);
    }
    for (const auto& a : arrows)
        if (old2new[a.from] >= 0 && old2new[a.to] >= 0)
            q.arrows.push_back({a.name, old2new[a.from], old2new[a.to]});
    if (vertex_map) *vertex_map = old2new;
    return q;
}

Quiver Quiver::reversed() const {
    Quiver q = *this;
    for (auto& a : q.arrows) std::swap(a.from, a.to);
    return q;
}

int Path::target(const Quiver& q) const {
    int v = source;
    for (int a : arrows) {
        if (q.arrows[a].from != v) throw DataError("path does not compose");
        v = q.arrows[a].to;
    }
    return v;
}

std::string Path::to_string(const Quiver& q) const {
    if (arrows.empty()) return "e_" + q.vertices[source];
    std::string s;
    for (size_t i = 0; i < arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[arrows[i]].name;
    }
    return s;
}

std::string Relation::to_string(const Quiver& q) const {
    std::string s;
    for (size_t i = 0; i < terms.size(); ++i) {
        if (i) s += " + ";
        if (terms[i].coeff != 1) s += std::to_string(terms[i].coeff) + "*";
        s += terms[i].path.to_string(q);
    }
    return s;
}

Relation make_relation(const Quiver& q, uint32_t p,
                       const std::vector<std::pair<long long, std::vector<std::string>>>& terms) {
    Relation r;
    int src = -1, tgt = -1;
    for (const auto& [coeff, word] : terms) {
        uint32_t c = fp::reduce_int(coeff, p);
        if (word.empty()) throw DataError("relation term with empty path");
        Path path;
        path.source = q.arrows[q.arrow_index(word[0])].from;
        for (const auto& an : word) path.arrows.push_back(q.arrow_index(an));
        int t = path.target(q);  // throws if the word does not compose
        if (src < 0) {
            src = path.source;
            tgt = t;
        } else if (src != path.source || tgt != t) {
            throw DataError("relation terms are not parallel");
        }
        if (path.length() < 2) throw DataError("relation term of length < 2");
        if (c != 0) r.terms.push_back({c, path});
    }
    return r;  // may be empty when all coefficients vanish mod p
}

namespace {

using nlohmann::ordered_json;

Quiver quiver_from_json(const ordered_json& j) {
    Quiver q;
    for (const auto& v : j.at("vertices")) q.vertices.push_back(v.get<std::string>());
    for (const auto& a : j.at("arrows")) {
        Quiver::Arrow ar;
        ar.name = a.at("name").get<std::string>();
        q.arrows.push_back(ar);
    }
    // resolve endpoints after all vertices are known
    size_t i = 0;
    for (const auto& a : j.at("arrows")) {
        q.arrows[i].from = q.vertex_index(a.at("from").get<std::string>());
        q.arrows[i].to = q.vertex_index(a.at("to").get<std::string>());
        ++i;
    }
    q.validate();
    return q;
}

ordered_json quiver_json(const Quiver& q) {
    ordered_json j;
    j["vertices"] = q.vertices;
    ordered_json arrows = ordered_json::array();
    for (const auto& a : q.arrows) {
        ordered_json aj;
        aj["name"] = a.name;
        aj["from"] = q.vertices[a.from];
        aj["to"] = q.vertices[a.to];
        arrows.push_back(aj);
    }
    j["arrows"] = arrows;
    return j;
}

}  // namespace

AlgebraFile parse_algebra_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DataError(std::string("bad JSON: ") + e.what());
    }
    AlgebraFile f;
    f.name = j.value("name", "unnamed");
    f.characteristic = j.value("char", 2u);
    f.cap = j.value("cap", 12);
    f.quiver = quiver_from_json(j);
    if (j.contains("relations")) {
        for (const auto& rel : j.at("relations")) {
            std::vector<std::pair<long long, std::vector<std::string>>> terms;
            for (const auto& t : rel) {
                long long c = t.at("coeff").get<long long>();
                std::vector<std::string> word;
                for (const auto& an : t.at("path")) word.push_back(an.get<std::string>());
                terms.emplace_back(c, word);
            }
            f.relations.push_back(std::move(terms));
        }
    }
    return f;
}

std::string algebra_to_json(const AlgebraFile& f) {
    ordered_json j;
    j["name"] = f.name;
    j["char"] = f.characteristic;
    j["cap"] = f.cap;
    ordered_json qj = quiver_json(f.quiver);
    j["vertices"] = qj["vertices"];
    j["arrows"] = qj["arrows"];
    ordered_json rels = ordered_json::array();
    for (const auto& rel : f.relations) {
        ordered_json rj = ordered_json::array();
        for (const auto& [c, word] : rel) {
            ordered_json tj;
            tj["coeff"] = c;
            tj["path"] = word;
            rj.push_back(tj);
        }
        rels.push_back(rj);
    }
    j["relations"] = rels;
    return j.dump(2) + "\n";
}

Quiver parse_quiver_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw DataError(std::string("bad JSON: ") + e.what());
    }
    return quiver_from_json(j);
}

std::string quiver_to_json(const Quiver& q, const std::string& name) {
    ordered_json j;
    j["name"] = name;
    ordered_json qj = quiver_json(q);
    j["vertices"] = qj["vertices"];
    j["arrows"] = qj["arrows"];
    return j.dump(2) + "\n";
}

}  // namespace stt
