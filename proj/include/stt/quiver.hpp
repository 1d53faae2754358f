#pragma once

#include <map>
#include <string>
#include <vector>

#include "stt/fp.hpp"

namespace stt {

// Input/data errors (bad files, unknown names, ill-typed relations).
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Algebra construction failures (non-admissible ideal, certification failure).
struct BuildError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int from = 0;
        int to = 0;
    };
    std::vector<Arrow> arrows;

    int num_vertices() const { return int(vertices.size()); }
    int num_arrows() const { return int(arrows.size()); }
    int vertex_index(const std::string& name) const;
    int arrow_index(const std::string& name) const;
    void validate() const;

    // Connected components of the underlying graph, each a sorted vertex list.
    std::vector<std::vector<int>> components() const;
    Quiver induced_subquiver(const std::vector<int>& keep,
                             std::vector<int>* vertex_map = nullptr) const;
    Quiver reversed() const;
};

// A path: start vertex plus an arrow-index word, composed left to right
// (in the word a1 a2, a1 is traversed first). Empty word = lazy path e_v.
struct Path {
    int source = 0;
    std::vector<int> arrows;

    int target(const Quiver& q) const;
    int length() const { return int(arrows.size()); }
    std::string to_string(const Quiver& q) const;
};

// One relation: a linear combination of parallel paths (same source/target).
struct Relation {
    struct Term {
        uint32_t coeff = 1;
        Path path;
    };
    std::vector<Term> terms;

    int source() const { return terms.at(0).path.source; }
    std::string to_string(const Quiver& q) const;
};

// Build a relation from (integer coefficient, arrow-name word) pairs.
Relation make_relation(const Quiver& q, uint32_t p,
                       const std::vector<std::pair<long long, std::vector<std::string>>>& terms);

// JSON (de)serialization.
// Algebra file: { "name", "char", "cap", "vertices", "arrows":
//   [{"name","from","to"}], "relations": [[{"coeff","path"}...], ...] }
struct AlgebraFile {
    std::string name;
    uint32_t characteristic = 2;
    int cap = 12;
    Quiver quiver;
    // relations kept as raw (coeff, arrow-name word) terms until a field is fixed
    std::vector<std::vector<std::pair<long long, std::vector<std::string>>>> relations;
};

AlgebraFile parse_algebra_json(const std::string& text);
std::string algebra_to_json(const AlgebraFile& f);
Quiver parse_quiver_json(const std::string& text);
std::string quiver_to_json(const Quiver& q, const std::string& name);

}  // namespace stt
