// Command-line surface for the non-separating cocircuit toolkit.
//
// Exit codes: 0 = all checks pass, 1 = a verification found a violating
// witness, 2 = usage or IO error, 3 = a budget or scan limit made the run
// incomplete.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nsco/drivers.hpp"
#include "nsco/io.hpp"
#include "nsco/minors.hpp"

namespace {

using namespace nsco;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// matroid-spec = @file.bm | name:fano | name:spike:5 | graph:@file.g [bond].
// Consumes one token from args, plus a following "bond" token after graph:.
BinaryMatroid parse_spec(const std::vector<std::string>& args, size_t& i) {
    if (i >= args.size()) throw UsageError("missing matroid spec");
    const std::string& spec = args[i++];
    if (spec.rfind('@', 0) == 0) {
        LoadedMatroid lm = parse_bm_file(spec.substr(1));
        if (!lm.perm.empty()) {
            std::cerr << "note: input standardized; column permutation:";
            for (int p : lm.perm) std::cerr << ' ' << p + 1;
            std::cerr << '\n';
        }
        return lm.matroid;
    }
    if (spec.rfind("name:", 0) == 0) {
        // name:spike:5 becomes the constructor call spike(5).
        std::string rest = spec.substr(5);
        std::string head = rest, params;
        auto colon = rest.find(':');
        if (colon != std::string::npos) {
            head = rest.substr(0, colon);
            params = rest.substr(colon + 1);
            for (auto& c : params)
                if (c == ':') c = ',';
        }
        return make_named(params.empty() ? head : head + "(" + params + ")");
    }
    if (spec.rfind("graph:@", 0) == 0) {
        SimpleGraph g = parse_graph_file(spec.substr(7));
        bool bond = i < args.size() && args[i] == "bond";
        if (bond) ++i;
        return bond ? bond_matroid(g) : graph_matroid(g);
    }
    throw UsageError("bad matroid spec: " + spec);
}

void print_set(const std::string& name, const ElementSet& s) {
    std::cout << name << " =";
    for (const auto& e : s) std::cout << ' ' << e;
    if (s.empty()) std::cout << " (empty)";
    std::cout << '\n';
}

int print_nsc_report(const std::string& command, const BinaryMatroid& m, bool json,
                     bool yset_only) {
    NscReport rep = report(m);
    if (json) {
        std::cout << nsc_report_json(command, m, rep);
        return 0;
    }
    std::cout << "matroid: r = " << m.r() << ", n = " << m.n() << '\n';
    if (!yset_only) {
        std::cout << "non-separating cocircuits (" << rep.nsc.size() << "):\n";
        for (const auto& cc : rep.nsc) {
            std::cout << " ";
            for (const auto& e : cc.support) std::cout << ' ' << e;
            std::cout << '\n';
        }
        std::cout << "element: meets avoids dep\n";
        for (const auto& e : m.ground_set())
            std::cout << "  " << e << ": " << rep.meets.at(e) << ' ' << rep.avoids.at(e) << ' '
                      << rep.dep_e.at(e) << '\n';
    }
    print_set("Y", rep.Y);
    print_set("Ytilde", rep.Ytilde);
    std::cout << "r*(Ytilde) = " << rep.ytilde_corank << '\n';
    return 0;
}

int print_driver_report(const DriverReport& rep, bool json) {
    if (json)
        std::cout << driver_report_json(rep);
    else
        for (const auto& c : rep.checks)
            std::cout << (c.pass ? "PASS " : "FAIL ") << c.label
                      << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
    if (rep.incomplete) return 3;
    return rep.passed() ? 0 : 1;
}

ExtensionVector parse_vector(const std::string& s) {
    ExtensionVector v;
    for (char c : s) {
        if (c < '0' || c > '2') throw UsageError("vector entries must be 0, 1 or 2");
        v.push_back(static_cast<uint8_t>(c - '0'));
    }
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"non-separating cocircuit toolkit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "emit JSON reports on stdout");

    std::vector<std::string> args;

    auto* nsc_cmd = app.add_subcommand("nsc", "full non-separating cocircuit report");
    nsc_cmd->add_option("spec", args, "matroid spec")->expected(1, 2);
    auto* yset_cmd = app.add_subcommand("yset", "Y, Ytilde and r*(Ytilde)");
    yset_cmd->add_option("spec", args, "matroid spec")->expected(1, 2);
    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test");
    iso_cmd->add_option("specs", args, "two matroid specs")->expected(2, 4);
    auto* minor_cmd = app.add_subcommand("minor", "minor containment test");
    minor_cmd->add_option("specs", args, "matroid spec and named minor")->expected(2, 3);

    std::string matrix_file, vector_arg;
    auto* gamma_cmd = app.add_subcommand("gamma", "apply the Gamma coextension operator");
    gamma_cmd->add_option("matrix", matrix_file, ".bm matrix file")->required();
    gamma_cmd->add_option("vector", vector_arg, "extension vector, digits 0/1/2")->required();

    bool full_vectors = false, no_orbit = false, regular = false, no_mk5 = false;
    int nsc_threshold = -1, scan_limit = kDefaultScanLimit;
    auto* layer_cmd = app.add_subcommand("layer", "enumerate one coextension layer");
    layer_cmd->add_option("matrix", matrix_file, ".bm seed matrix file")->required();
    layer_cmd->add_flag("--full-vectors", full_vectors, "use all of {0,1,2}^n");
    layer_cmd->add_flag("--no-orbit-prune", no_orbit, "disable isomorph rejection");
    layer_cmd->add_flag("--regular", regular, "keep regular results only");
    layer_cmd->add_flag("--no-mk5", no_mk5, "drop results with an M(K5)-minor");
    layer_cmd->add_option("--nsc-threshold", nsc_threshold, "min dual r*(Ytilde) to keep");
    layer_cmd->add_option("--scan-limit", scan_limit, "cocircuit scan rank guard");

    app.add_subcommand("classify-rank4", "rank-4 classification report");

    std::string verify_what;
    auto* verify_cmd = app.add_subcommand("verify", "run a verification driver");
    verify_cmd
        ->add_option("what", verify_what,
                     "initial-cases | k33 | comput-a..d | extremal | rank4")
        ->required();

    SearchOptions sopt;
    std::string thresholds = "proof";
    auto* search_cmd = app.add_subcommand("search", "layered conjecture search");
    search_cmd->add_option("--max-rank", sopt.max_rank, "last layer rank");
    search_cmd->add_option("--catalog", sopt.catalog_dir, "catalog directory");
    search_cmd->add_flag("--resume", sopt.resume, "reuse persisted layers");
    search_cmd->add_option("--threads", sopt.threads, "worker hint; output-invariant");
    search_cmd->add_flag("--full-vectors", sopt.full_vectors, "use all of {0,1,2}^n");
    search_cmd->add_option("--thresholds", thresholds, "proof | printed");

    CLI11_PARSE(app, argc, argv);

    try {
        size_t i = 0;
        if (*nsc_cmd) return print_nsc_report("nsc", parse_spec(args, i), json, false);
        if (*yset_cmd) return print_nsc_report("yset", parse_spec(args, i), json, true);
        if (*iso_cmd) {
            BinaryMatroid m1 = parse_spec(args, i), m2 = parse_spec(args, i);
            bool yes = are_isomorphic(m1, m2);
            DriverReport rep;
            rep.name = "iso";
            rep.add("isomorphic", yes, yes ? canonical_key(m1).hex() : "keys differ");
            return print_driver_report(rep, json);
        }
        if (*minor_cmd) {
            BinaryMatroid m = parse_spec(args, i);
            if (i >= args.size()) throw UsageError("missing minor name");
            BinaryMatroid n = make_named(args[i]);
            DriverReport rep;
            rep.name = "minor";
            rep.add(args[i] + "-minor present", has_minor(m, n));
            return print_driver_report(rep, json);
        }
        if (*gamma_cmd) {
            LoadedMatroid lm = parse_bm_file(matrix_file);
            ExtensionVector v = parse_vector(vector_arg);
            BitMatrix g = gamma(lm.matroid.rep(), v);
            std::vector<std::string> labels;
            for (int c = 1; c <= g.cols(); ++c) labels.push_back(std::to_string(c));
            std::cout << emit_bm(BinaryMatroid::from_columns(g, labels));
            return 0;
        }
        if (*layer_cmd) {
            LoadedMatroid lm = parse_bm_file(matrix_file);
            CatalogLayer seeds;
            seeds.level = lm.matroid.r();
            seeds.items.push_back(catalog_root(lm.matroid));
            ExtendOptions opt;
            opt.full_vectors = full_vectors;
            opt.orbit_prune = !no_orbit;
            opt.require_regular = regular;
            opt.exclude_mk5 = no_mk5;
            opt.nsc_corank_threshold = nsc_threshold;
            opt.scan_limit = scan_limit;
            ExtendDiag diag;
            CatalogLayer out = enumerate_extensions(seeds, opt, &diag);
            std::cout << layer_records(out);
            std::cerr << "candidates " << diag.candidates << ", enumerated " << diag.enumerated
                      << ", kept " << out.items.size() << '\n';
            return diag.incomplete ? 3 : 0;
        }
        if (app.got_subcommand("classify-rank4"))
            return print_driver_report(classify_rank4(), json);
        if (*verify_cmd) {
            DriverReport rep;
            if (verify_what == "initial-cases")
                rep = verify_initial_cases();
            else if (verify_what == "k33")
                rep = verify_k33_family();
            else if (verify_what == "extremal")
                rep = verify_extremal();
            else if (verify_what == "rank4")
                rep = classify_rank4();
            else if (verify_what.rfind("comput-", 0) == 0 && verify_what.size() == 8)
                rep = verify_comput(verify_what[7]);
            else
                throw UsageError("unknown verification: " + verify_what);
            return print_driver_report(rep, json);
        }
        if (*search_cmd) {
            if (thresholds == "proof")
                sopt.thresholds = ThresholdScheme::kProof;
            else if (thresholds == "printed")
                sopt.thresholds = ThresholdScheme::kPrinted;
            else
                throw UsageError("--thresholds must be proof or printed");
            SearchReport rep = conjecture_search(sopt);
            if (json)
                std::cout << search_report_json(rep);
            else {
                for (const auto& l : rep.layers)
                    std::cout << "layer " << l.level << ": candidates " << l.candidates
                              << ", kept " << l.kept << ", max r*(Ytilde) " << l.max_corank
                              << (l.resumed ? " (resumed)" : "") << '\n';
                for (const auto& c : rep.report.checks)
                    std::cout << (c.pass ? "PASS " : "FAIL ") << c.label
                              << (c.detail.empty() ? "" : " [" + c.detail + "]") << '\n';
            }
            if (rep.report.incomplete) return 3;
            return rep.report.passed() ? 0 : 1;
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "incomplete: " << e.what() << '\n';
        return 3;
    } catch (const ScanLimitExceeded& e) {
        std::cerr << "incomplete: " << e.what() << '\n';
        return 3;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Gf2Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
