#include "nsco/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace nsco {

namespace {

using ojson = nlohmann::ordered_json;

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string out = pos == std::string::npos ? line : line.substr(0, pos);
    while (!out.empty() && (out.back() == '\r' || out.back() == ' ' || out.back() == '\t'))
        out.pop_back();
    return out;
}

// Next non-blank content line, comments removed.
bool next_line(std::istream& in, std::string& out) {
    std::string raw;
    while (std::getline(in, raw)) {
        out = strip_comment(raw);
        if (!out.empty()) return true;
    }
    return false;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream iss(s);
    std::vector<std::string> out;
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

bool is_standard(const BitMatrix& a) {
    if (a.cols() < a.rows()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.rows(); ++j)
            if (a.get(i, j) != (i == j)) return false;
    return true;
}

}  // namespace

LoadedMatroid parse_bm(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("bm: empty input");
    auto head = split_ws(line);
    if (head.size() != 2) throw ParseError("bm: header must be 'r n'");
    int r, n;
    try {
        r = std::stoi(head[0]);
        n = std::stoi(head[1]);
    } catch (const std::exception&) {
        throw ParseError("bm: header must be 'r n'");
    }
    if (r < 0 || n < 0 || r > BitMatrix::kMaxRows || n > BitMatrix::kMaxCols)
        throw ParseError("bm: dimensions out of range");

    BitMatrix a(r, n);
    for (int i = 0; i < r; ++i) {
        if (!next_line(in, line)) throw ParseError("bm: missing row " + std::to_string(i + 1));
        if (static_cast<int>(line.size()) != n)
            throw ParseError("bm: row " + std::to_string(i + 1) + " has wrong length");
        for (int j = 0; j < n; ++j) {
            if (line[j] == '1')
                a.set(i, j, true);
            else if (line[j] != '0')
                throw ParseError("bm: rows must be 0/1 characters");
        }
    }

    std::vector<std::string> labels = numbered(n);
    if (next_line(in, line)) {
        if (line.rfind("labels:", 0) != 0) throw ParseError("bm: unexpected trailing line");
        labels = split_ws(line.substr(7));
        if (static_cast<int>(labels.size()) != n)
            throw ParseError("bm: labels line must name every column");
    }

    LoadedMatroid out;
    if (is_standard(a)) {
        out.matroid = BinaryMatroid::from_standard(a, labels);
        return out;
    }
    StandardForm sf = standardize(a);
    std::vector<std::string> perm_labels(n);
    for (int j = 0; j < n; ++j) perm_labels[j] = labels[sf.perm[j]];
    out.matroid = BinaryMatroid::from_standard(sf.matrix, perm_labels);
    out.perm = sf.perm;
    return out;
}

LoadedMatroid parse_bm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_bm(in);
}

std::string emit_bm(const BinaryMatroid& m) {
    std::ostringstream out;
    out << m.r() << ' ' << m.n() << '\n';
    for (int i = 0; i < m.r(); ++i) {
        for (int j = 0; j < m.n(); ++j) out << (m.rep().get(i, j) ? '1' : '0');
        out << '\n';
    }
    out << "labels:";
    for (const auto& l : m.labels()) out << ' ' << l;
    out << '\n';
    return out.str();
}

SimpleGraph parse_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("g: empty input");
    auto head = split_ws(line);
    if (head.size() != 2) throw ParseError("g: header must be 'V E'");
    int nv, ne;
    try {
        nv = std::stoi(head[0]);
        ne = std::stoi(head[1]);
    } catch (const std::exception&) {
        throw ParseError("g: header must be 'V E'");
    }
    if (nv < 0 || ne < 0) throw ParseError("g: negative counts");

    SimpleGraph g;
    g.vertex_names = numbered(nv);
    for (int e = 0; e < ne; ++e) {
        if (!next_line(in, line)) throw ParseError("g: missing edge " + std::to_string(e + 1));
        auto tok = split_ws(line);
        if (tok.size() != 2) throw ParseError("g: edge lines are 'u v'");
        int u, v;
        try {
            u = std::stoi(tok[0]);
            v = std::stoi(tok[1]);
        } catch (const std::exception&) {
            throw ParseError("g: edge lines are 'u v'");
        }
        if (u < 1 || u > nv || v < 1 || v > nv) throw ParseError("g: vertex index out of range");
        if (u == v) throw ParseError("g: loops are not supported");
        g.edges.emplace_back(u - 1, v - 1);
    }
    return g;
}

SimpleGraph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in);
}

namespace {

std::string rows_hex(const BitMatrix& a) {
    if (a.cols() > 64) throw ParseError("catalog: matrices wider than 64 columns unsupported");
    std::ostringstream out;
    for (int i = 0; i < a.rows(); ++i) {
        if (i) out << '.';
        out << std::hex << a.row(i)[0];
    }
    return out.str();
}

BitMatrix rows_unhex(const std::string& s, int r, int n) {
    BitMatrix a(r, n);
    std::istringstream iss(s);
    std::string tok;
    for (int i = 0; i < r; ++i) {
        if (!std::getline(iss, tok, '.')) throw ParseError("catalog: bad rows field");
        uint64_t w = std::stoull(tok, nullptr, 16);
        for (int j = 0; j < n; ++j)
            if (w >> j & 1) a.set(i, j, true);
    }
    return a;
}

CanonicalKey key_of_hex(const std::string& hex) {
    if (hex.size() % 2) throw ParseError("catalog: odd key length");
    CanonicalKey k;
    for (size_t i = 0; i < hex.size(); i += 2)
        k.bytes.push_back(static_cast<uint8_t>(std::stoul(hex.substr(i, 2), nullptr, 16)));
    return k;
}

std::string vec_str(const ExtensionVector& v) {
    if (v.empty()) return "-";
    std::string s;
    for (uint8_t e : v) s.push_back(static_cast<char>('0' + e));
    return s;
}

ojson diag_json(const ExtendDiag& d, long kept) {
    ojson j;
    j["candidates"] = d.candidates;
    j["enumerated"] = d.enumerated;
    j["cosimple_pass"] = d.cosimple_pass;
    j["regular_pass"] = d.regular_pass;
    j["k5_pass"] = d.k5_pass;
    j["nsc_pass"] = d.nsc_pass;
    j["skipped_scan_limit"] = d.skipped_scan_limit;
    j["kept"] = kept;
    return j;
}

}  // namespace

std::string layer_records(const CatalogLayer& layer) {
    std::ostringstream out;
    for (const auto& item : layer.items) {
        out << item.key.hex() << ' ' << item.matrix.rows() << ' ' << item.matrix.cols() << ' '
            << rows_hex(item.matrix) << ' '
            << (item.parent_key.empty() ? "-" : item.parent_key) << ' ' << vec_str(item.vec)
            << ' ' << layer.level << '\n';
    }
    return out.str();
}

void write_layer_file(const std::string& path, const CatalogLayer& layer,
                      const CatalogMeta& meta) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << layer_records(layer);
    out.close();

    ojson j;
    j["level"] = meta.level;
    j["thresholds"] = meta.thresholds;
    j["threshold_value"] = meta.threshold_value;
    j["full_vectors"] = meta.full_vectors;
    j["counts"] = diag_json(meta.diag, meta.kept);
    j["incomplete"] = meta.diag.incomplete;
    ojson coranks = ojson::object();
    for (const auto& item : layer.items) coranks[item.key.hex()] = item.ytilde_corank;
    j["coranks"] = coranks;
    std::ofstream mout(path + ".meta.json");
    if (!mout) throw ParseError("cannot write " + path + ".meta.json");
    mout << j.dump(2) << '\n';
}

CatalogLayer read_layer_file(const std::string& path, CatalogMeta* meta) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    CatalogLayer layer;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tok = split_ws(line);
        if (tok.size() != 7) throw ParseError("catalog: malformed record in " + path);
        CatalogItem item;
        item.key = key_of_hex(tok[0]);
        int r = std::stoi(tok[1]), n = std::stoi(tok[2]);
        item.matrix = rows_unhex(tok[3], r, n);
        if (tok[4] != "-") item.parent_key = tok[4];
        if (tok[5] != "-")
            for (char c : tok[5]) {
                if (c < '0' || c > '2') throw ParseError("catalog: bad vector digit");
                item.vec.push_back(static_cast<uint8_t>(c - '0'));
            }
        layer.level = std::stoi(tok[6]);
        layer.items.push_back(std::move(item));
    }

    std::ifstream min(path + ".meta.json");
    if (min) {
        ojson j = ojson::parse(min);
        if (meta) {
            meta->level = j.value("level", 0);
            meta->thresholds = j.value("thresholds", std::string("none"));
            meta->threshold_value = j.value("threshold_value", -1);
            meta->full_vectors = j.value("full_vectors", false);
            if (j.contains("counts")) {
                const auto& c = j["counts"];
                meta->diag.candidates = c.value("candidates", 0L);
                meta->diag.enumerated = c.value("enumerated", 0L);
                meta->diag.cosimple_pass = c.value("cosimple_pass", 0L);
                meta->diag.regular_pass = c.value("regular_pass", 0L);
                meta->diag.k5_pass = c.value("k5_pass", 0L);
                meta->diag.nsc_pass = c.value("nsc_pass", 0L);
                meta->diag.skipped_scan_limit = c.value("skipped_scan_limit", 0L);
                meta->kept = c.value("kept", 0L);
            }
            meta->diag.incomplete = j.value("incomplete", false);
        }
        if (j.contains("coranks"))
            for (auto& item : layer.items)
                if (j["coranks"].contains(item.key.hex()))
                    item.ytilde_corank = j["coranks"][item.key.hex()].get<int>();
        if (meta && layer.level == 0) layer.level = meta->level;
    } else if (meta) {
        *meta = CatalogMeta{};
        meta->level = layer.level;
    }
    return layer;
}

namespace {

ojson checks_json(const DriverReport& rep) {
    ojson arr = ojson::array();
    for (const auto& c : rep.checks) {
        ojson e;
        e["label"] = c.label;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    return arr;
}

}  // namespace

std::string nsc_report_json(const std::string& command, const BinaryMatroid& m,
                            const NscReport& rep, bool incomplete) {
    ojson j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["matroid"] = {{"r", m.r()}, {"n", m.n()}, {"labels", m.labels()}};
    ojson nsc = ojson::array();
    for (const auto& cc : rep.nsc) nsc.push_back(cc.support);
    j["nsc"] = nsc;
    j["meets"] = rep.meets;
    j["avoids"] = rep.avoids;
    j["dep"] = rep.dep_e;
    j["Y"] = rep.Y;
    j["Ytilde"] = rep.Ytilde;
    j["ytilde_corank"] = rep.ytilde_corank;
    j["verdict"] = "ok";
    j["witnesses"] = ojson::array();
    j["incomplete"] = incomplete;
    return j.dump(2) + "\n";
}

std::string driver_report_json(const DriverReport& rep) {
    ojson j;
    j["tool_version"] = kToolVersion;
    j["command"] = rep.name;
    j["checks"] = checks_json(rep);
    j["verdict"] = rep.passed() ? "pass" : "fail";
    ojson wit = ojson::array();
    for (const auto& c : rep.checks)
        if (!c.pass) wit.push_back(c.label + (c.detail.empty() ? "" : ": " + c.detail));
    j["witnesses"] = wit;
    j["incomplete"] = rep.incomplete;
    return j.dump(2) + "\n";
}

std::string search_report_json(const SearchReport& rep) {
    ojson j;
    j["tool_version"] = kToolVersion;
    j["command"] = rep.report.name;
    ojson layers = ojson::array();
    for (const auto& l : rep.layers) {
        ojson e;
        e["level"] = l.level;
        e["candidates"] = l.candidates;
        e["enumerated"] = l.enumerated;
        e["kept"] = l.kept;
        e["max_ytilde_corank"] = l.max_corank;
        e["counterexample_candidates"] = l.counterexample_keys;
        e["incomplete"] = l.incomplete;
        e["resumed"] = l.resumed;
        layers.push_back(std::move(e));
    }
    j["layers"] = layers;
    j["checks"] = checks_json(rep.report);
    j["verdict"] = rep.report.passed() ? "pass" : "fail";
    j["incomplete"] = rep.report.incomplete;
    return j.dump(2) + "\n";
}

}  // namespace nsco
