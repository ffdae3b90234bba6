#pragma once

// File formats (.bm matrices, .g graphs), catalog layer persistence and the
// JSON report serializers shared by the CLI and the acceptance harness.

#include <iosfwd>
#include <string>
#include <vector>

#include "nsco/drivers.hpp"
#include "nsco/extend.hpp"
#include "nsco/nsc.hpp"
#include "nsco/zoo.hpp"

namespace nsco {

inline constexpr const char* kToolVersion = "1.0.0";

class ParseError : public MatroidError {
public:
    using MatroidError::MatroidError;
};
class CatalogMismatch : public MatroidError {
public:
    using MatroidError::MatroidError;
};

struct LoadedMatroid {
    BinaryMatroid matroid;
    // perm[new_col] = input column index; empty when the input was already
    // in standard form.
    std::vector<int> perm;
};

// .bm: line 1 "r n"; r lines of n characters from {0,1}; optional trailing
// "labels: l1 l2 ..."; '#' starts a comment. Default labels are "1".."n" in
// input column order. Non-standard input is standardized.
LoadedMatroid parse_bm(std::istream& in);
LoadedMatroid parse_bm_file(const std::string& path);
std::string emit_bm(const BinaryMatroid& m);

// .g: line 1 "V E"; E lines "u v", 1-based vertex indices.
SimpleGraph parse_graph(std::istream& in);
SimpleGraph parse_graph_file(const std::string& path);

struct CatalogMeta {
    int level = 0;
    std::string thresholds = "none";  // "proof" | "printed" | "none"
    int threshold_value = -1;
    bool full_vectors = false;
    ExtendDiag diag;
    long kept = 0;
};

// One record per line: key_hex r n rows_hex parent_key vector provenance_rank
// with '-' for the empty parent key and vector. A sibling <path>.meta.json
// carries the meta block.
std::string layer_records(const CatalogLayer& layer);
void write_layer_file(const std::string& path, const CatalogLayer& layer, const CatalogMeta& meta);
CatalogLayer read_layer_file(const std::string& path, CatalogMeta* meta = nullptr);

// JSON renderers. All output is deterministic: object keys appear in fixed
// order and every run of the same computation yields identical bytes.
std::string nsc_report_json(const std::string& command, const BinaryMatroid& m,
                            const NscReport& rep, bool incomplete = false);
std::string driver_report_json(const DriverReport& rep);
std::string search_report_json(const SearchReport& rep);

}  // namespace nsco
