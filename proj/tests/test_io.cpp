#include "doctest.h"
#include "nsco/io.hpp"
#include "nsco/zoo.hpp"

#include <cstdio>
#include <filesystem>
#include <sstream>

using namespace nsco;

TEST_CASE("bm round trip on standard input") {
    std::string text =
        "# a comment\n"
        "3 5\n"
        "10011\n"
        "01010\n"
        "00111\n"
        "labels: p q r s t\n";
    std::istringstream in(text);
    LoadedMatroid lm = parse_bm(in);
    CHECK(lm.perm.empty());
    CHECK(lm.matroid.r() == 3);
    CHECK(lm.matroid.n() == 5);
    CHECK(lm.matroid.labels() == std::vector<std::string>{"p", "q", "r", "s", "t"});

    std::istringstream again(emit_bm(lm.matroid));
    LoadedMatroid back = parse_bm(again);
    CHECK(back.matroid == lm.matroid);
    std::istringstream once_more(emit_bm(back.matroid));
    CHECK(emit_bm(parse_bm(once_more).matroid) == emit_bm(lm.matroid));
}

TEST_CASE("bm standardizes non-standard input and reports the permutation") {
    std::istringstream in("2 3\n110\n011\n");
    LoadedMatroid lm = parse_bm(in);
    CHECK(!lm.perm.empty());
    CHECK(lm.matroid.r() == 2);
    CHECK(lm.matroid.n() == 3);
    // Default labels follow the input columns through the permutation.
    for (int j = 0; j < 3; ++j)
        CHECK(lm.matroid.label(j) == std::to_string(lm.perm[j] + 1));
}

TEST_CASE("bm parse errors") {
    auto bad = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_bm(in), ParseError);
    };
    bad("");
    bad("2\n10\n01\n");
    bad("2 2\n10\n0\n");
    bad("2 2\n10\n0x\n");
    bad("1 2\n10\nlabels: a\n");
    bad("1 2\n10\nstray\n");
}

TEST_CASE("graph parsing") {
    std::istringstream in("# triangle\n3 3\n1 2\n2 3\n1 3\n");
    SimpleGraph g = parse_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges.size() == 3);
    BinaryMatroid m = graph_matroid(g);
    CHECK(m.r() == 2);
    CHECK(m.n() == 3);

    auto bad = [](const std::string& text) {
        std::istringstream in2(text);
        CHECK_THROWS_AS(parse_graph(in2), ParseError);
    };
    bad("3 1\n1 4\n");
    bad("3 1\n2 2\n");
    bad("3 2\n1 2\n");
}

TEST_CASE("catalog layer round trip") {
    CatalogLayer layer;
    layer.level = 4;
    layer.items.push_back(catalog_root(s8()));
    CatalogItem child = catalog_root(fano());
    child.parent_key = layer.items[0].key.hex();
    child.vec = {0, 2, 1};
    child.ytilde_corank = 2;
    layer.items.push_back(child);

    CatalogMeta meta;
    meta.level = 4;
    meta.thresholds = "proof";
    meta.threshold_value = 1;
    meta.diag.candidates = 1296;
    meta.kept = 2;

    std::string path = (std::filesystem::temp_directory_path() / "nsco_layer_test.cat").string();
    write_layer_file(path, layer, meta);
    CatalogMeta meta2;
    CatalogLayer back = read_layer_file(path, &meta2);

    REQUIRE(back.items.size() == 2);
    CHECK(back.level == 4);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(back.items[i].key == layer.items[i].key);
        CHECK(back.items[i].matrix == layer.items[i].matrix);
        CHECK(back.items[i].parent_key == layer.items[i].parent_key);
        CHECK(back.items[i].vec == layer.items[i].vec);
        CHECK(back.items[i].ytilde_corank == layer.items[i].ytilde_corank);
    }
    CHECK(meta2.thresholds == "proof");
    CHECK(meta2.threshold_value == 1);
    CHECK(meta2.diag.candidates == 1296);
    CHECK(meta2.kept == 2);
    std::remove(path.c_str());
    std::remove((path + ".meta.json").c_str());
}

TEST_CASE("json reports are deterministic and carry the schema fields") {
    BinaryMatroid m = fano();
    NscReport r = report(m);
    std::string j1 = nsc_report_json("nsc name:fano", m, r);
    std::string j2 = nsc_report_json("nsc name:fano", m, r);
    CHECK(j1 == j2);
    for (const char* field : {"tool_version", "command", "matroid", "nsc", "meets", "avoids",
                              "dep", "Y", "Ytilde", "ytilde_corank", "verdict", "witnesses",
                              "incomplete"})
        CHECK(j1.find(std::string("\"") + field + "\"") != std::string::npos);

    DriverReport d;
    d.name = "demo";
    d.add("a check", true, "detail");
    d.add("a failing check", false, "witness");
    std::string dj = driver_report_json(d);
    CHECK(dj == driver_report_json(d));
    CHECK(dj.find("\"verdict\": \"fail\"") != std::string::npos);
    CHECK(dj.find("witness") != std::string::npos);
}
