#include "stt/schur.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace stt::schur {

Partition parse_partition(const std::string& s) {
    Partition lam;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        lam.push_back(std::stoi(part));
    }
    if (!is_partition(lam)) throw DataError("not a partition: " + s);
    return lam;
}

std::string partition_str(const Partition& lam) {
    if (lam.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < lam.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(lam[i]);
    }
    return s;
}

bool is_partition(const Partition& lam) {
    for (size_t i = 0; i < lam.size(); ++i) {
        if (lam[i] <= 0) return false;
        if (i && lam[i] > lam[i - 1]) return false;
    }
    return true;
}

int partition_sum(const Partition& lam) {
    int r = 0;
    for (int x : lam) r += x;
    return r;
}

namespace {

Partition normalize(Partition lam) {
    std::sort(lam.rbegin(), lam.rend());
    while (!lam.empty() && lam.back() == 0) lam.pop_back();
    return lam;
}

// Beta-numbers route: slide beads down their runners until none can move.
Partition p_core_beta(const Partition& lam, uint32_t p) {
    int n = int(lam.size()) + 1;
    std::set<int> beta;
    for (int i = 0; i < n; ++i) {
        int part = i < int(lam.size()) ? lam[i] : 0;
        beta.insert(part + (n - 1 - i));
    }
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = beta.begin(); it != beta.end(); ++it) {
            int b = *it;
            if (b >= int(p) && !beta.count(b - int(p))) {
                beta.erase(it);
                beta.insert(b - int(p));
                moved = true;
                break;
            }
        }
    }
    std::vector<int> sorted(beta.rbegin(), beta.rend());
    Partition core;
    for (size_t i = 0; i < sorted.size(); ++i) core.push_back(sorted[i] - (int(sorted.size()) - 1 - int(i)));
    return normalize(core);
}

// Second route, different removal order: removing a rim p-hook subtracts p
// from one first-column hook length while keeping them distinct; strip the
// largest admissible hook first.
Partition p_core_hooks(const Partition& lam, uint32_t p) {
    int n = int(lam.size());
    std::vector<int> hooks;  // first-column hook lengths lam_i + n - 1 - i
    for (int i = 0; i < n; ++i) hooks.push_back(lam[i] + n - 1 - i);
    bool moved = true;
    while (moved) {
        moved = false;
        // remove in a different order than the beta route: largest first
        std::sort(hooks.rbegin(), hooks.rend());
        for (size_t i = 0; i < hooks.size(); ++i) {
            int h = hooks[i] - int(p);
            if (h < 0) continue;
            if (std::find(hooks.begin(), hooks.end(), h) == hooks.end()) {
                hooks[i] = h;
                moved = true;
                break;
            }
        }
    }
    std::sort(hooks.rbegin(), hooks.rend());
    Partition core;
    for (size_t i = 0; i < hooks.size(); ++i) core.push_back(hooks[i] - (int(hooks.size()) - 1 - int(i)));
    return normalize(core);
}

}  // namespace

Partition p_core(const Partition& lam, uint32_t p) {
    if (!fp::is_prime(p)) throw DataError("p must be prime");
    Partition a = p_core_beta(lam, p);
    Partition b = p_core_hooks(lam, p);
    if (a != b) throw BuildError("p-core removal order disagreement");
    return a;
}

long long henke_f(long long s, long long t, uint32_t p) {
    auto binom_small = [](long long m, long long n) -> long long {
        if (n < 0 || n > m) return 0;
        long long r = 1;
        for (long long i = 0; i < n; ++i) r = r * (m - i) / (i + 1);
        return r;
    };
    long long f = 1;
    while (s > 0 || t > 0) {
        long long sk = s % p, tk = t % p;
        f *= binom_small(int(p) - 1 - sk, int(p) - 1 - tk);
        if (f == 0) return 0;
        s /= p;
        t /= p;
    }
    return f;
}

int henke_g(long long s, long long t, uint32_t p) { return henke_f(2 * t, s + t, p) == 1 ? 1 : 0; }

int henke_h(long long s, long long t, uint32_t p) {
    return henke_f(2 * t + 1, s + t + 1, p) == 1 ? 1 : 0;
}

std::vector<Partition> young_character(uint32_t p, int r, int k) {
    if (k < 0 || 2 * k > r) throw DataError("young_character needs 0 <= k <= r/2");
    std::vector<Partition> out;
    int half = r / 2;
    for (int i = 0; i <= half; ++i) {
        int c = (r % 2 == 0) ? henke_g(half - i, half - k, p) : henke_h(half - i, half - k, p);
        if (c) {
            Partition mu{r - i};
            if (i > 0) mu.push_back(i);
            out.push_back(mu);
        }
    }
    return out;
}

int eh_arrow(uint32_t p, long long s, long long t) {
    if (s == t) return 0;
    if (s < t) std::swap(s, t);
    long long s0 = s % p, t0 = t % p, s1 = s / p, t1 = t / p;
    if (p == 2) {
        if (s0 == 1 && t0 == 1) return eh_arrow(p, s1, t1);
        if (s0 == 0 && t0 == 0) {
            if ((s1 - t1) % 2 == 0) return eh_arrow(p, s1, t1);
            if (t1 + 1 == s1 && s1 % 2 != 0) return 1;
        }
        return 0;
    }
    if (s0 == t0) return eh_arrow(p, s1, t1);
    if (s0 + t0 == int(p) - 2 && t1 + 1 == s1 && s1 % p != 0) return 1;
    return 0;
}

S2RQuiver s2r_quiver(uint32_t p, int r) {
    if (r < 1) throw DataError("s2r_quiver needs r >= 1");
    if (!fp::is_prime(p)) throw DataError("p must be prime");
    S2RQuiver out;
    for (int k = 0; k <= r / 2; ++k) {
        Partition lam{r - k};
        if (k > 0) lam.push_back(k);
        out.vertex_labels.push_back(lam);
        out.quiver.vertices.push_back(partition_str(lam));
        out.cores.push_back(p_core(lam, p));
    }
    int nv = out.quiver.num_vertices();
    auto s_of = [&](int v) -> long long {
        const Partition& lam = out.vertex_labels[v];
        return static_cast<long long>(lam[0]) - (lam.size() > 1 ? lam[1] : 0);
    };
    for (int i = 0; i < nv; ++i) {
        for (int j = i + 1; j < nv; ++j) {
            if (eh_arrow(p, s_of(i), s_of(j)) == 1) {
                out.quiver.arrows.push_back({"x" + std::to_string(i) + "_" + std::to_string(j), i, j});
                out.quiver.arrows.push_back({"x" + std::to_string(j) + "_" + std::to_string(i), j, i});
            }
        }
    }
    out.quiver.validate();
    out.blocks = out.quiver.components();
    // components refine blocks: equal p-cores inside a component
    for (const auto& comp : out.blocks)
        for (int v : comp)
            if (out.cores[v] != out.cores[comp[0]])
                throw BuildError("quiver component crosses a block");
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Semisimple: return "semisimple";
        case Verdict::Finite: return "finite";
        case Verdict::Tame: return "tame";
        case Verdict::WildFinite: return "wild-finite";
        case Verdict::WildInfinite: return "wild-infinite";
        case Verdict::Open: return "open";
    }
    return "?";
}

std::string verdict_cell(Verdict v) {
    switch (v) {
        case Verdict::Semisimple: return "S";
        case Verdict::Finite: return "F";
        case Verdict::Tame: return "T";
        case Verdict::WildFinite: return "W+";
        case Verdict::WildInfinite: return "W-";
        case Verdict::Open: return "W?";
    }
    return "?";
}

bool verdict_tau_finite(Verdict v) {
    return v == Verdict::Semisimple || v == Verdict::Finite || v == Verdict::Tame ||
           v == Verdict::WildFinite;
}

Classification classify(uint32_t p, int n, int r) {
    if (n < 1 || r < 1) throw DataError("classify needs n, r >= 1");
    if (p != 0 && !fp::is_prime(p)) throw DataError("p must be prime or zero");
    if (n > r) {
        Classification c = classify(p, r, r);
        c.rule += "; S(n,r) ~ S(r,r) for n > r";
        return c;
    }
    long long pp = p;
    if (p == 0 || pp > r || (p == 2 && n == 2 && r == 3))
        return {Verdict::Semisimple, "semisimple: p=0, p>r, or (p,n,r)=(2,2,3)"};
    // representation-finite
    if (n == 2 && (pp * pp > r || (p == 2 && (r == 5 || r == 7))))
        return {Verdict::Finite, "representation-finite: n=2, r<p^2 or (2,2,5),(2,2,7)"};
    if (n >= 3 && r < 2 * pp)
        return {Verdict::Finite, "representation-finite: n>=3, r<2p"};
    // tame
    if ((p == 2 && n == 2 && (r == 4 || r == 9 || r == 11)) ||
        (p == 3 && n == 2 && (r == 9 || r == 10 || r == 11)) ||
        (p == 3 && n == 3 && (r == 7 || r == 8)))
        return {Verdict::Tame, "tame (all tame Schur algebras are tau-tilting finite)"};
    // wild but tau-tilting finite
    if (p == 2 && ((n == 2 && (r == 6 || r == 13 || r == 15)) || (n == 3 && r == 5) ||
                   (n == 4 && r == 5)))
        return {Verdict::WildFinite, "wild, tau-tilting finite: (2,6),(2,13),(2,15),(3,5),(4,5) at p=2"};
    // open cases
    if (p == 2 && n == 2 && (r == 8 || r == 17 || r == 19))
        return {Verdict::Open, "open: p=2, n=2, r=8,17,19"};
    if (p == 2 && n == 3 && r == 4) return {Verdict::Open, "open: p=2, n=3, r=4"};
    if (p == 2 && n >= 5 && r == 5) return {Verdict::Open, "open: p=2, n>=5, r=5"};
    if (p >= 5 && n == 2 && pp * pp <= r && r <= pp * pp + pp - 1)
        return {Verdict::Open, "open: p>=5, n=2, p^2 <= r <= p^2+p-1"};
    return {Verdict::WildInfinite, "wild, tau-tilting infinite"};
}

}  // namespace stt::schur
