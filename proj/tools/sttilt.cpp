#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "stt/catalog.hpp"
#include "stt/mutation.hpp"
#include "stt/schur.hpp"
#include "stt/screens.hpp"

using namespace stt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitData = 2;
constexpr int kExitBuild = 3;
constexpr int kExitBudget = 10;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw DataError("cannot write file: " + path);
    out << text;
}

BoundAlgebra resolve_algebra(const std::string& source, uint32_t char_override, int cap_override) {
    if (std::filesystem::exists(source)) {
        AlgebraFile f = parse_algebra_json(read_file(source));
        uint32_t p = char_override ? char_override : f.characteristic;
        int cap = cap_override ? cap_override : f.cap;
        std::vector<Relation> rels;
        for (const auto& raw : f.relations) {
            Relation r = make_relation(f.quiver, p, raw);
            if (!r.terms.empty()) rels.push_back(r);
        }
        return BoundAlgebra::build(f.quiver, rels, p, cap);
    }
    return catalog(source, char_override, cap_override);
}

Quiver resolve_quiver(const std::string& source) {
    if (std::filesystem::exists(source)) return parse_quiver_json(read_file(source));
    if (catalog_quiver_has(source)) return catalog_quiver(source);
    return catalog(source).quiver();
}

std::string strata_str(const std::vector<long long>& s) {
    std::string out = "[";
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

int cmd_alg_show(const std::string& source, uint32_t chr, int cap) {
    BoundAlgebra a = resolve_algebra(source, chr, cap);
    std::cout << "algebra " << source << "\n";
    std::cout << "char " << a.characteristic() << ", cap " << a.cap() << "\n";
    std::cout << "dim " << a.dim() << "\n";
    std::cout << "vertices:";
    for (const auto& v : a.quiver().vertices) std::cout << " " << v;
    std::cout << "\narrows:";
    for (const auto& ar : a.quiver().arrows)
        std::cout << " " << ar.name << ":" << a.quiver().vertices[ar.from] << "->"
                  << a.quiver().vertices[ar.to];
    std::cout << "\ncartan matrix:\n";
    for (const auto& row : a.cartan_matrix()) {
        std::cout << "  [";
        for (size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
        std::cout << "]\n";
    }
    auto c = a.center_basis();
    std::cout << "center dim " << c.basis.size() << "; center in rad dim " << c.in_radical.size()
              << "\n";
    for (const auto& z : c.in_radical) std::cout << "  central: " << a.elem_to_string(z) << "\n";
    auto blocks = a.block_decompose();
    std::cout << "blocks " << blocks.size() << ":";
    for (const auto& b : blocks) std::cout << " dim=" << b.dim();
    std::cout << "\n";
    return kExitOk;
}

int cmd_stt(const std::string& source, uint32_t chr, int cap, long long budget, int jobs,
            const std::string& out, const std::string& format, bool strata) {
    BoundAlgebra a = resolve_algebra(source, chr, cap);
    EnumerateOptions opts;
    opts.budget = budget;
    opts.jobs = jobs;
    opts.algebra_name = source;
    HasseGraph g = enumerate_stt(a, opts);
    std::string line = "nodes=" + std::to_string(g.nodes.size()) +
                       " status=" + (g.complete ? std::string("complete") : "budget-exceeded");
    if (g.complete && strata) line += " strata=" + strata_str(strata_counts(g, a.num_vertices()));
    if (!out.empty()) {
        if (format == "dot") write_file(out, g.to_dot());
        else write_file(out, g.to_json());
    }
    std::cout << line << "\n";
    return g.complete ? kExitOk : kExitBudget;
}

int cmd_screen(const std::string& source) {
    Quiver q = resolve_quiver(source);
    auto w = contains_infinite_subquiver(q);
    bool rad2 = rad_square_zero_finite(q);
    if (w) {
        std::cout << "INFINITE via " << pattern_name(w->pattern) << " on {";
        for (size_t i = 0; i < w->vertices.size(); ++i)
            std::cout << (i ? "," : "") << "(" << w->vertices[i] << ")";
        std::cout << "}\n";
    } else if (!rad2) {
        std::cout << "INFINITE via separated quiver (rad-square-zero test)\n";
    } else {
        std::cout << "no obstruction from the quiver shape\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"support tau-tilting enumeration for bound quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    uint32_t chr = 0;
    long long budget = 100000;
    int jobs = 1, cap = 0;
    std::string out, format = "json";
    app.add_option("--char", chr, "characteristic override (prime)");
    app.add_option("--budget", budget, "node budget for enumeration");
    app.add_option("--jobs", jobs, "worker threads");
    app.add_option("--cap", cap, "path length cap override");
    app.add_option("--out", out, "output file path");
    app.add_option("--format", format, "output format: json|dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* alg = app.add_subcommand("alg", "algebra inspection");
    alg->fallthrough();
    auto* alg_show = alg->add_subcommand("show", "dimensions, Cartan matrix, center, blocks");
    alg_show->fallthrough();
    std::string alg_name;
    alg_show->add_option("algebra", alg_name, "catalog name or JSON file")->required();
    auto* alg_export = alg->add_subcommand("export", "write catalog entries as JSON files");
    alg_export->fallthrough();
    std::string export_dir;
    alg_export->add_option("--dir", export_dir, "output directory")->required();

    auto* stt_cmd = app.add_subcommand("stt", "enumerate support tau-tilting pairs");
    stt_cmd->fallthrough();
    std::string stt_name;
    bool strata = false;
    stt_cmd->add_option("algebra", stt_name, "catalog name or JSON file")->required();
    stt_cmd->add_flag("--strata", strata, "print support-rank strata");

    auto* screen = app.add_subcommand("screen", "tau-tilting infinity screens");
    screen->fallthrough();
    auto* screen_q = screen->add_subcommand("quiver", "match infinite patterns in a quiver");
    screen_q->fallthrough();
    std::string screen_name;
    screen_q->add_option("quiver", screen_name, "quiver JSON file or catalog name")->required();

    auto* schur_cmd = app.add_subcommand("schur", "Schur algebra combinatorics");
    schur_cmd->fallthrough();
    uint32_t sp = 2;
    int sr = 0, sk = 0, sn = 0, nmax = 6, rmax = 23;
    std::string partition;
    bool dot = false;
    auto* sch_char = schur_cmd->add_subcommand("character", "Young module character");
    sch_char->fallthrough();
    sch_char->add_option("--p", sp)->required();
    sch_char->add_option("--r", sr)->required();
    sch_char->add_option("--k", sk)->required();
    auto* sch_quiver = schur_cmd->add_subcommand("quiver", "quiver of S(2,r)");
    sch_quiver->fallthrough();
    sch_quiver->add_option("--p", sp)->required();
    sch_quiver->add_option("--r", sr)->required();
    sch_quiver->add_flag("--dot", dot, "emit DOT instead of JSON");
    auto* sch_pcore = schur_cmd->add_subcommand("pcore", "p-core of a partition");
    sch_pcore->fallthrough();
    sch_pcore->add_option("--p", sp)->required();
    sch_pcore->add_option("--partition", partition)->required();
    auto* sch_classify = schur_cmd->add_subcommand("classify", "classification of S(n,r)");
    sch_classify->fallthrough();
    sch_classify->add_option("--p", sp)->required();
    sch_classify->add_option("--n", sn)->required();
    sch_classify->add_option("--r", sr)->required();
    auto* sch_table = schur_cmd->add_subcommand("table", "classification grid");
    sch_table->fallthrough();
    sch_table->add_option("--p", sp)->required();
    sch_table->add_option("--nmax", nmax);
    sch_table->add_option("--rmax", rmax);

    CLI11_PARSE(app, argc, argv);

    try {
        if (alg_show->parsed()) return cmd_alg_show(alg_name, chr, cap);
        if (alg_export->parsed()) {
            std::filesystem::create_directories(export_dir);
            for (const auto& name : catalog_names()) {
                BoundAlgebra a = catalog(name);
                AlgebraFile f;
                f.name = name;
                f.characteristic = a.characteristic();
                f.cap = a.cap();
                f.quiver = a.quiver();
                for (const auto& rel : a.relations()) {
                    std::vector<std::pair<long long, std::vector<std::string>>> raw;
                    for (const auto& t : rel.terms) {
                        std::vector<std::string> word;
                        for (int ar : t.path.arrows) word.push_back(a.quiver().arrows[ar].name);
                        raw.emplace_back(t.coeff, word);
                    }
                    f.relations.push_back(raw);
                }
                std::string fname = name;
                for (auto& ch : fname)
                    if (ch == '(' || ch == ')' || ch == ',') ch = '_';
                write_file(export_dir + "/" + fname + ".json", algebra_to_json(f));
            }
            for (const auto& name : catalog_quiver_names())
                write_file(export_dir + "/" + name + ".json",
                           quiver_to_json(catalog_quiver(name), name));
            std::cout << "exported catalog to " << export_dir << "\n";
            return kExitOk;
        }
        if (stt_cmd->parsed())
            return cmd_stt(stt_name, chr, cap, budget, jobs, out, format, strata);
        if (screen_q->parsed()) return cmd_screen(screen_name);
        if (sch_char->parsed()) {
            auto parts = schur::young_character(sp, sr, sk);
            std::cout << "ch Y^(" << sr - sk << (sk ? "," + std::to_string(sk) : "") << ") =";
            for (size_t i = 0; i < parts.size(); ++i)
                std::cout << (i ? " + " : " ") << "chi^(" << schur::partition_str(parts[i]) << ")";
            std::cout << "\n";
            return kExitOk;
        }
        if (sch_quiver->parsed()) {
            auto s = schur::s2r_quiver(sp, sr);
            std::string text = dot ? [&] {
                std::ostringstream os;
                os << "graph s2r {\n";
                for (const auto& v : s.quiver.vertices) os << "  \"" << v << "\";\n";
                for (const auto& a : s.quiver.arrows)
                    if (a.from < a.to)
                        os << "  \"" << s.quiver.vertices[a.from] << "\" -- \""
                           << s.quiver.vertices[a.to] << "\";\n";
                os << "}\n";
                return os.str();
            }() : quiver_to_json(s.quiver, "S(2," + std::to_string(sr) + ")_p" + std::to_string(sp));
            if (!out.empty()) write_file(out, text);
            else std::cout << text;
            std::cout << "blocks:";
            for (const auto& b : s.blocks) {
                std::cout << " {";
                for (size_t i = 0; i < b.size(); ++i)
                    std::cout << (i ? "," : "") << "(" << s.quiver.vertices[b[i]] << ")";
                std::cout << "}";
            }
            std::cout << "\n";
            return kExitOk;
        }
        if (sch_pcore->parsed()) {
            auto lam = schur::parse_partition(partition);
            std::cout << schur::partition_str(schur::p_core(lam, sp)) << "\n";
            return kExitOk;
        }
        if (sch_classify->parsed()) {
            auto c = schur::classify(sp, sn, sr);
            std::cout << schur::verdict_name(c.verdict);
            if (schur::verdict_tau_finite(c.verdict)) std::cout << " -> tau-tilting finite";
            else if (c.verdict == schur::Verdict::WildInfinite) std::cout << " -> tau-tilting infinite";
            else std::cout << " -> tau-tilting finiteness open";
            std::cout << "  [" << c.rule << "]\n";
            return kExitOk;
        }
        if (sch_table->parsed()) {
            std::cout << "S(n,r) over p=" << sp << "  (S semisimple, F finite, T tame, W+ wild"
                      << " tau-finite, W- wild tau-infinite, W? open)\n";
            std::cout << "n\\r";
            for (int r = 1; r <= rmax; ++r) std::cout << "\t" << r;
            std::cout << "\n";
            for (int n = 2; n <= nmax; ++n) {
                std::cout << n;
                for (int r = 1; r <= rmax; ++r)
                    std::cout << "\t" << schur::verdict_cell(schur::classify(sp, n, r).verdict);
                std::cout << "\n";
            }
            return kExitOk;
        }
        std::cerr << "no subcommand\n";
        return kExitData;
    } catch (const BuildError& e) {
        std::cerr << "build error: " << e.what() << "\n";
        return kExitBuild;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
