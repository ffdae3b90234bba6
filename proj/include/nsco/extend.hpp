#pragma once

// The Gamma(A, v) single-row coextension operator, the layer family L(A),
// and isomorph-rejected layered enumeration with structural filters.

#include <functional>
#include <string>
#include <vector>

#include "nsco/iso.hpp"
#include "nsco/matroid.hpp"
#include "nsco/minors.hpp"
#include "nsco/nsc.hpp"

namespace nsco {

class LengthMismatch : public MatroidError {
public:
    using MatroidError::MatroidError;
};

// One entry per column of the base matrix, each in {0, 1, 2}.
using ExtensionVector = std::vector<uint8_t>;

// The (r+1) x (1 + n + #{v_i = 2}) coextension matrix: new first column
// (1,0,...,0); column i maps to (v_i mod 2, c_i); every v_i = 2 appends a
// further column (1, c_i), in increasing i.
BitMatrix gamma(const BitMatrix& a, const ExtensionVector& v);

// Streams the vectors of L(A) = {0,2}^r x {0,1,2}^{n-r} in lexicographic
// order (or all of {0,1,2}^n when full_vectors). Stops early if fn returns
// false.
void layer(const BitMatrix& a, bool full_vectors,
           const std::function<bool(const ExtensionVector&)>& fn);

// Number of vectors layer() emits, as a plain count.
long layer_size(int r, int n, bool full_vectors);

struct CatalogItem {
    CanonicalKey key;
    BitMatrix matrix;          // standard-form representative
    std::string parent_key;    // hex key of the seed, empty for roots
    ExtensionVector vec;       // the v that produced the matrix
    int ytilde_corank = -1;    // r* of Ytilde of the dual; -1 if not computed
};

struct CatalogLayer {
    int level = 0;
    std::vector<CatalogItem> items;
};

CatalogItem catalog_root(const BinaryMatroid& m);

struct ExtendOptions {
    bool full_vectors = false;
    bool orbit_prune = true;
    bool require_cosimple = true;      // implies 3-connected via the corollary
    bool require_regular = false;
    bool exclude_mk5 = false;          // reject M[A] with an M(K5)-minor
    int nsc_corank_threshold = -1;     // keep iff dual ytilde corank >= this; -1 off
    bool compute_nsc_stats = false;    // fill ytilde_corank even without a threshold
    int scan_limit = kDefaultScanLimit;
    long minor_budget = kDefaultMinorBudget;
    int threads = 1;                   // scheduling hint; never affects output
};

struct ExtendDiag {
    long candidates = 0;          // sum of |L(A)| over seeds, before any pruning
    long enumerated = 0;          // candidates surviving orbit pruning
    long cosimple_pass = 0;
    long regular_pass = 0;
    long k5_pass = 0;
    long nsc_pass = 0;
    long skipped_scan_limit = 0;  // rejected by the dual-rank guard
    bool incomplete = false;
};

// Applies one Gamma step to every seed, filters, canonizes, and returns the
// deduplicated next layer sorted by (key, parent_key, vec).
CatalogLayer enumerate_extensions(const CatalogLayer& seeds, const ExtendOptions& opt,
                                  ExtendDiag* diag = nullptr);

}  // namespace nsco
