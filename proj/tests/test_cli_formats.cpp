#include "doctest.h"
#include "json.hpp"
#include "stt/catalog.hpp"
#include "stt/mutation.hpp"

using namespace stt;

TEST_CASE("hasse JSON carries the contract fields") {
    BoundAlgebra a = catalog("Example26");
    EnumerateOptions opts;
    opts.algebra_name = "Example26";
    HasseGraph g = enumerate_stt(a, opts);
    auto j = nlohmann::ordered_json::parse(g.to_json());
    CHECK(j.at("algebra") == "Example26");
    CHECK(j.at("char") == 2);
    CHECK(j.at("status") == "complete");
    CHECK(j.at("nodes").size() == 6);
    CHECK(j.at("edges").size() == 6);
    for (const auto& n : j.at("nodes")) {
        CHECK(n.contains("key"));
        CHECK(n.contains("rank"));
        CHECK(n.contains("dims"));
    }
    for (const auto& e : j.at("edges")) {
        CHECK(e.contains("from"));
        CHECK(e.contains("to"));
        CHECK(e.contains("pos"));
    }
    // keys sorted
    std::string prev;
    for (const auto& n : j.at("nodes")) {
        std::string k = n.at("key");
        CHECK(prev <= k);
        prev = k;
    }
}

TEST_CASE("dot export") {
    BoundAlgebra a = catalog("Example26");
    EnumerateOptions opts;
    HasseGraph g = enumerate_stt(a, opts);
    std::string dot = g.to_dot();
    CHECK(dot.rfind("digraph", 0) == 0);
    CHECK(std::count(dot.begin(), dot.end(), '>') == 6);
    CHECK(dot.find("rank=2") != std::string::npos);
}

TEST_CASE("quiver JSON round trip") {
    Quiver q = catalog_quiver("s3_6_p3");
    std::string text = quiver_to_json(q, "s3_6_p3");
    Quiver back = parse_quiver_json(text);
    CHECK(back.vertices == q.vertices);
    CHECK(back.num_arrows() == q.num_arrows());
}

TEST_CASE("identical runs produce identical artifacts") {
    BoundAlgebra a = catalog("D3");
    EnumerateOptions opts;
    opts.algebra_name = "D3";
    std::string j1 = enumerate_stt(a, opts).to_json();
    std::string j2 = enumerate_stt(catalog("D3"), opts).to_json();
    CHECK(j1 == j2);
}
