#include "doctest.h"
#include "nsco/drivers.hpp"
#include "nsco/io.hpp"
#include "nsco/zoo.hpp"

#include <filesystem>
#include <set>

using namespace nsco;

namespace {

void require_passed(const DriverReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.name, ": ", c.label, " :: ", c.detail);
        CHECK(c.pass);
    }
}

}  // namespace

TEST_CASE("initial cases driver") {
    DriverReport rep = verify_initial_cases();
    require_passed(rep);
    CHECK(rep.checks.size() == 5);
}

TEST_CASE("k33 family driver") { require_passed(verify_k33_family()); }

TEST_CASE("extremal driver (short ranges)") { require_passed(verify_extremal(4, 5, 3, 4)); }

TEST_CASE("rank-4 classification") {
    const auto& classes = rank4_classes();
    CHECK(classes.size() == 20);
    std::set<std::string> names;
    long listed = 0;
    for (const auto& cls : classes) {
        CHECK(!cls.name.empty());
        CHECK(names.insert(cls.name).second);
        CHECK(cls.matroid.r() == 4);
        CHECK(cls.size >= 7);
        CHECK(cls.size <= 15);
        CHECK(cls.subset_count >= 1);
        if (cls.listed) ++listed;
    }
    CHECK(listed == 19);
    require_passed(classify_rank4());
}

TEST_CASE("comput (a) and (b) drivers") {
    require_passed(verify_comput('a'));
    require_passed(verify_comput('b'));
}

TEST_CASE("threshold monotonicity: weaker NSC threshold keeps a superset") {
    CatalogLayer seeds;
    seeds.level = 4;
    seeds.items.push_back(catalog_root(s8()));
    auto keys_at = [&](int thr) {
        ExtendOptions opt;
        opt.nsc_corank_threshold = thr;
        std::set<std::string> keys;
        for (const auto& item : enumerate_extensions(seeds, opt).items)
            keys.insert(item.key.hex());
        return keys;
    };
    std::set<std::string> weak = keys_at(0), strong = keys_at(1);
    CHECK(std::includes(weak.begin(), weak.end(), strong.begin(), strong.end()));
    CHECK(weak.size() >= strong.size());
}

TEST_CASE("search thresholds follow the proof and printed schemes") {
    CHECK(search_threshold(ThresholdScheme::kProof, 6) == 1);
    CHECK(search_threshold(ThresholdScheme::kProof, 7) == 1);
    CHECK(search_threshold(ThresholdScheme::kProof, 8) == 2);
    CHECK(search_threshold(ThresholdScheme::kProof, 9) == 3);
    CHECK(search_threshold(ThresholdScheme::kPrinted, 6) == 1);
    CHECK(search_threshold(ThresholdScheme::kPrinted, 7) == 2);
    CHECK(search_threshold(ThresholdScheme::kPrinted, 9) == 2);
}

TEST_CASE("conjecture search to rank 6 with persistence and resume") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "nsco_search_test";
    fs::remove_all(dir);

    SearchOptions opt;
    opt.max_rank = 6;
    opt.catalog_dir = dir.string();
    SearchReport rep = conjecture_search(opt);
    require_passed(rep.report);
    REQUIRE(rep.layers.size() == 1);
    CHECK(rep.layers[0].candidates == 69984);
    CHECK(rep.layers[0].kept >= 1);
    CHECK(rep.layers[0].max_corank <= 2);
    CHECK(fs::exists(dir / "layer_6.cat"));
    CHECK(fs::exists(dir / "layer_6.cat.meta.json"));

    // Resume reloads the persisted layer with the same contents.
    opt.resume = true;
    SearchReport again = conjecture_search(opt);
    require_passed(again.report);
    CHECK(again.layers[0].resumed);
    CHECK(again.layers[0].kept == rep.layers[0].kept);
    CHECK(again.layers[0].candidates == rep.layers[0].candidates);

    // A mismatched configuration is refused.
    opt.thresholds = ThresholdScheme::kPrinted;
    CHECK_THROWS_AS(conjecture_search(opt), CatalogMismatch);
    fs::remove_all(dir);
}
