#pragma once

// Verification drivers. Each reproduces one computational lemma as a list of
// named checks with witnesses; conjecture_search runs the layered extension
// search with catalog persistence.

#include <string>
#include <vector>

#include "nsco/extend.hpp"
#include "nsco/matroid.hpp"

namespace nsco {

struct DriverCheck {
    std::string label;
    bool pass = false;
    std::string detail;  // witness or measurement, empty if uninteresting
};

struct DriverReport {
    std::string name;
    std::vector<DriverCheck> checks;
    bool incomplete = false;

    bool passed() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(const std::string& label, bool pass, std::string detail = "") {
        checks.push_back({label, pass, std::move(detail)});
    }
};

DriverReport verify_initial_cases();
DriverReport verify_k33_family();

struct Rank4Class {
    CanonicalKey key;
    BinaryMatroid matroid;  // representative PG(3,2) restriction
    std::string name;       // matched construction, empty if unmatched
    int size = 0;
    long subset_count = 0;  // point subsets of PG(3,2) in the class
    bool listed = true;     // false for PG(3,2) itself
};

// All rank-4 3-connected restrictions of PG(3,2), one per isomorphism class,
// sorted by (size, key) and matched against the named constructions.
const std::vector<Rank4Class>& rank4_classes();

DriverReport classify_rank4();

// part in {'a','b','c','d'}; k = number of Gamma steps for part (a)'s
// series-split audit (only the last step filters on cosimplicity).
DriverReport verify_comput(char part, int k = 1);

// n ranges are inclusive.
DriverReport verify_extremal(int spike_lo = 4, int spike_hi = 7, int k3n_lo = 3, int k3n_hi = 5);

enum class ThresholdScheme { kProof, kPrinted };

// Minimum dual ytilde corank a survivor of the given layer must reach.
int search_threshold(ThresholdScheme scheme, int level);

struct SearchOptions {
    int max_rank = 9;
    ThresholdScheme thresholds = ThresholdScheme::kProof;
    std::string catalog_dir;  // empty = no persistence
    bool resume = false;
    bool full_vectors = false;
    int scan_limit = 26;
    int threads = 1;  // scheduling hint; never affects output
};

struct SearchLayerSummary {
    int level = 0;
    long candidates = 0;
    long enumerated = 0;
    long kept = 0;
    int max_corank = 0;
    std::vector<std::string> counterexample_keys;  // survivors with corank >= 3
    bool incomplete = false;
    bool resumed = false;
};

struct SearchReport {
    DriverReport report;
    std::vector<SearchLayerSummary> layers;
};

SearchReport conjecture_search(const SearchOptions& opt);

}  // namespace nsco
