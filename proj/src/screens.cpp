#include "stt/screens.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace stt {

SeparatedQuiver separated_quiver(const Quiver& q) {
    SeparatedQuiver s;
    s.n = q.num_vertices();
    for (const auto& a : q.arrows) s.edges.push_back({a.from, s.n + a.to});
    return s;
}

namespace {

bool component_is_dynkin(const std::vector<int>& verts,
                         const std::map<int, std::vector<int>>& adj, int edge_count) {
    int n = int(verts.size());
    if (edge_count != n - 1) return false;  // must be a tree
    std::vector<int> deg;
    int deg3 = 0, branch = -1;
    for (int v : verts) {
        int d = int(adj.at(v).size());
        if (d > 3) return false;
        if (d == 3) {
            ++deg3;
            branch = v;
        }
    }
    if (deg3 == 0) return true;  // path = A_n
    if (deg3 > 1) return false;
    // branch lengths from the unique degree-3 vertex
    std::vector<int> lens;
    for (int s : adj.at(branch)) {
        int len = 1, prev = branch, cur = s;
        while (int(adj.at(cur).size()) == 2) {
            int nxt = adj.at(cur)[0] == prev ? adj.at(cur)[1] : adj.at(cur)[0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end());
    if (lens[0] != 1) return false;
    if (lens[1] == 1) return true;  // D_n
    if (lens[1] == 2 && lens[2] >= 2 && lens[2] <= 4) return true;  // E6, E7, E8
    return false;
}

}  // namespace

bool is_dynkin_union(int n, const std::vector<std::pair<int, int>>& edges) {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a == b) return false;  // loop
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) return false;  // multi-edge
    }
    std::map<int, std::vector<int>> adj;
    for (int v = 0; v < n; ++v) adj[v];
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::set<int> unvisited;
    for (int v = 0; v < n; ++v) unvisited.insert(v);
    while (!unvisited.empty()) {
        int start = *unvisited.begin();
        std::vector<int> comp{start};
        unvisited.erase(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (unvisited.count(w)) {
                    unvisited.erase(w);
                    comp.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        int ec = 0;
        std::set<int> cs(comp.begin(), comp.end());
        for (auto [a, b] : edges)
            if (cs.count(a)) ++ec;
        if (!component_is_dynkin(comp, adj, ec)) return false;
    }
    return true;
}

bool rad_square_zero_finite(const Quiver& q) {
    SeparatedQuiver s = separated_quiver(q);
    return is_dynkin_union(2 * s.n, s.edges);
}

std::string pattern_name(InfinitePattern p) {
    switch (p) {
        case InfinitePattern::Kronecker: return "Kronecker";
        case InfinitePattern::Q1: return "Q1";
        case InfinitePattern::Q2: return "Q2";
        case InfinitePattern::Q3: return "Q3";
    }
    return "?";
}

namespace {

// pattern arrows over vertices 0..k-1
std::vector<std::pair<int, int>> pattern_arrows(InfinitePattern p, int& nverts) {
    switch (p) {
        case InfinitePattern::Kronecker:
            nverts = 2;
            return {{0, 1}, {0, 1}};
        case InfinitePattern::Q1:
            // double 4-cycle 0-1-3-2-0
            nverts = 4;
            return {{0, 1}, {1, 0}, {1, 3}, {3, 1}, {3, 2}, {2, 3}, {2, 0}, {0, 2}};
        case InfinitePattern::Q2: {
            // doubled star: center 0, leaves 1..4
            nverts = 5;
            std::vector<std::pair<int, int>> e;
            for (int l = 1; l <= 4; ++l) {
                e.push_back({0, l});
                e.push_back({l, 0});
            }
            return e;
        }
        case InfinitePattern::Q3: {
            // doubled H: centers 0,1 adjacent; 0-2, 0-3, 1-4, 1-5
            nverts = 6;
            std::vector<std::pair<int, int>> e;
            auto both = [&](int x, int y) {
                e.push_back({x, y});
                e.push_back({y, x});
            };
            both(0, 1);
            both(0, 2);
            both(0, 3);
            both(1, 4);
            both(1, 5);
            return e;
        }
    }
    nverts = 0;
    return {};
}

bool match_pattern(const Quiver& q, const std::vector<std::pair<int, int>>& pat, int pn,
                   std::vector<int>& assign, std::vector<bool>& used, int v,
                   const std::map<std::pair<int, int>, int>& arrow_count) {
    if (v == pn) return true;
    int n = q.num_vertices();
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        assign[v] = w;
        used[w] = true;
        bool ok = true;
        // check all pattern arrows with both ends assigned
        std::map<std::pair<int, int>, int> needed;
        for (auto [x, y] : pat)
            if (x <= v && y <= v) needed[{assign[x], assign[y]}]++;
        for (const auto& [key, cnt] : needed) {
            auto it = arrow_count.find(key);
            if (it == arrow_count.end() || it->second < cnt) {
                ok = false;
                break;
            }
        }
        if (ok && match_pattern(q, pat, pn, assign, used, v + 1, arrow_count)) return true;
        used[w] = false;
        assign[v] = -1;
    }
    return false;
}

}  // namespace

std::optional<PatternWitness> contains_infinite_subquiver(const Quiver& q) {
    std::map<std::pair<int, int>, int> arrow_count;
    for (const auto& a : q.arrows) arrow_count[{a.from, a.to}]++;
    // Kronecker is a cheap local test; among the three shapes the star is
    // matched first (a host can contain several patterns at once).
    for (InfinitePattern p : {InfinitePattern::Kronecker, InfinitePattern::Q2,
                              InfinitePattern::Q1, InfinitePattern::Q3}) {
        int pn = 0;
        auto pat = pattern_arrows(p, pn);
        if (q.num_vertices() < pn) continue;
        std::vector<int> assign(pn, -1);
        std::vector<bool> used(q.num_vertices(), false);
        if (match_pattern(q, pat, pn, assign, used, 0, arrow_count)) {
            PatternWitness w;
            w.pattern = p;
            for (int v : assign) w.vertices.push_back(q.vertices[v]);
            return w;
        }
    }
    return std::nullopt;
}

}  // namespace stt
