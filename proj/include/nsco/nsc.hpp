#pragma once

// Cocircuit enumeration, non-separating cocircuits, and the derived
// quantities dep, Y(M), Ytilde(M) and the corank of Ytilde.

#include <map>
#include <string>
#include <vector>

#include "nsco/matroid.hpp"

namespace nsco {

class ScanLimitExceeded : public MatroidError {
public:
    using MatroidError::MatroidError;
};

struct Cocircuit {
    uint64_t coeff = 0;       // u with support = supp(u^T . rep)
    ElementSet support;       // sorted labels

    friend bool operator==(const Cocircuit& a, const Cocircuit& b) {
        return a.coeff == b.coeff && a.support == b.support;
    }
};

inline constexpr int kDefaultScanLimit = 24;

// All cocircuits of M, sorted by (support size, labels). Scans the 2^r - 1
// nonzero codewords of M's own representation; throws ScanLimitExceeded if
// r(M) > scan_limit.
std::vector<Cocircuit> cocircuits(const BinaryMatroid& m, int scan_limit = kDefaultScanLimit);

// The cocircuits whose deletion leaves a connected matroid.
std::vector<Cocircuit> nonseparating_cocircuits(const BinaryMatroid& m,
                                                int scan_limit = kDefaultScanLimit);

// dep_A(M) = |F| - dim span{coeff(C*) : C* in F} where F is the family of
// non-separating cocircuits disjoint from A.
int dep(const BinaryMatroid& m, const ElementSet& a, int scan_limit = kDefaultScanLimit);

struct NscReport {
    std::vector<Cocircuit> nsc;
    std::map<std::string, int> meets;
    std::map<std::string, int> avoids;
    std::map<std::string, int> dep_e;
    ElementSet Y;
    ElementSet Ytilde;
    int ytilde_corank = 0;
};

NscReport report(const BinaryMatroid& m, int scan_limit = kDefaultScanLimit);

// Report for dual(stored): drivers hold the small-rank side of the search and
// ask about the matroid it represents dually.
NscReport dual_report(const BinaryMatroid& stored, int scan_limit = kDefaultScanLimit);

}  // namespace nsco
