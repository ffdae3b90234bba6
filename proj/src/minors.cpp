#include "nsco/minors.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "nsco/iso.hpp"
#include "nsco/zoo.hpp"

namespace nsco {

namespace {

// Reduced row echelon form of a span basis; unique per subspace, so it serves
// as the dedup key for contraction sets.
std::vector<uint64_t> rref(std::vector<uint64_t> rows) {
    std::sort(rows.begin(), rows.end(), std::greater<>());
    for (size_t i = 0; i < rows.size(); ++i) {
        int pb = 63 - __builtin_clzll(rows[i]);
        for (size_t j = 0; j < rows.size(); ++j)
            if (j != i && (rows[j] >> pb & 1)) rows[j] ^= rows[i];
    }
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return rows;
}

struct MinorSearch {
    const BinaryMatroid& m;
    const BinaryMatroid& n;
    int k;                        // contraction size
    long budget;
    long used = 0;
    std::vector<uint64_t> cols;
    std::vector<uint64_t> ech;    // echelon of the chosen contraction prefix
    std::vector<char> chosen;
    std::set<std::vector<uint64_t>> seen_spans;

    bool run() {
        cols.resize(m.n());
        for (int c = 0; c < m.n(); ++c) cols[c] = m.column_value(c);
        chosen.assign(m.n(), 0);
        return go(0, 0);
    }

    uint64_t reduce(uint64_t v) const {
        bool progress = true;
        while (v && progress) {
            progress = false;
            for (uint64_t e : ech) {
                int pb = 63 - __builtin_clzll(e);
                if (v >> pb & 1) {
                    v ^= e;
                    progress = true;
                }
            }
        }
        return v;
    }

    bool check_quotient() {
        if (!seen_spans.insert(rref(ech)).second) return false;
        if (++used > budget) throw BudgetExceeded("has_minor: span budget exhausted");
        // Compress quotient coordinates by dropping the pivot bits.
        uint64_t pivots = 0;
        for (uint64_t e : ech) pivots |= uint64_t{1} << (63 - __builtin_clzll(e));
        const int qr = m.r() - k;
        BitMatrix a(qr, m.n() - k);
        std::vector<std::string> labels;
        int col = 0;
        for (int c = 0; c < m.n(); ++c) {
            if (chosen[c]) continue;
            uint64_t v = reduce(cols[c]);
            int bit = 0;
            for (int i = 0; i < m.r(); ++i) {
                if (pivots >> i & 1) continue;
                if (v >> i & 1) a.set(bit, col, true);
                ++bit;
            }
            labels.push_back(std::to_string(++col));
        }
        BinaryMatroid quotient = BinaryMatroid::from_columns(a, std::move(labels));
        return restriction_embeds(n, quotient);
    }

    bool go(int from, int depth) {
        if (depth == k) return check_quotient();
        for (int c = from; c < m.n(); ++c) {
            uint64_t v = reduce(cols[c]);
            if (v == 0) continue;
            ech.push_back(v);
            chosen[c] = 1;
            bool found = go(c + 1, depth + 1);
            chosen[c] = 0;
            ech.pop_back();
            if (found) return true;
        }
        return false;
    }
};

// Value-set masks of the 120 restrictions of PG(3,2) isomorphic to F7*.
// They are exactly the 7-caps (no three points collinear): each is an affine
// hyperplane complement (an 8-cap, AG(3,2)) minus one point, and a brute
// isomorphism sweep over all 7-subsets confirms the list is complete.
const std::vector<uint16_t>& f7_dual_value_masks() {
    static const std::vector<uint16_t> masks = [] {
        std::vector<uint16_t> out;
        for (int h = 1; h < 16; ++h) {
            uint16_t aff = 0;
            for (int v = 1; v < 16; ++v)
                if (__builtin_parity(h & v)) aff |= static_cast<uint16_t>(1u << v);
            for (int v = 1; v < 16; ++v)
                if (aff >> v & 1) out.push_back(static_cast<uint16_t>(aff & ~(1u << v)));
        }
        return out;
    }();
    return masks;
}

// Specialized F7 / F7* minor search. Same contraction-span walk as the
// generic version, but the rank-3 (rank-4) quotient test is a bitmask check
// on the set of quotient column values: F7 embeds iff all 7 nonzero values
// of GF(2)^3 occur, F7* embeds iff the distinct values contain a 7-cap.
struct FanoMinorSearch {
    const BinaryMatroid& m;
    bool dual_target;             // false: F7, true: F7*
    long budget;
    long used = 0;
    int k = 0;
    std::vector<uint64_t> cols;
    std::vector<uint64_t> ech;
    std::vector<char> chosen;
    std::unordered_set<uint64_t> seen_packed;
    std::set<std::vector<uint64_t>> seen_spans;

    bool run() {
        k = m.r() - (dual_target ? 4 : 3);
        cols.resize(m.n());
        for (int c = 0; c < m.n(); ++c) cols[c] = m.column_value(c);
        chosen.assign(m.n(), 0);
        return go(0, 0);
    }

    uint64_t reduce(uint64_t v) const {
        bool progress = true;
        while (v && progress) {
            progress = false;
            for (uint64_t e : ech) {
                int pb = 63 - __builtin_clzll(e);
                if (v >> pb & 1) {
                    v ^= e;
                    progress = true;
                }
            }
        }
        return v;
    }

    // A span's rref is unique, so it dedups contraction sets. With r <= 16
    // and at most four rows it packs collision-free into one word.
    bool span_is_new() {
        std::vector<uint64_t> rows = rref(ech);
        if (k <= 4) {
            uint64_t key = 0;
            for (uint64_t row : rows) key = key << 16 | row;
            return seen_packed.insert(key).second;
        }
        return seen_spans.insert(std::move(rows)).second;
    }

    bool check_quotient() {
        if (k > 0 && !span_is_new()) return false;
        if (++used > budget) throw BudgetExceeded("has_minor: span budget exhausted");
        uint64_t pivots = 0;
        for (uint64_t e : ech) pivots |= uint64_t{1} << (63 - __builtin_clzll(e));
        const int qr = m.r() - k;
        uint16_t values = 0;
        const uint16_t full = dual_target ? 0 : static_cast<uint16_t>((1u << (1 << qr)) - 2);
        for (int c = 0; c < m.n(); ++c) {
            if (chosen[c]) continue;
            uint64_t v = reduce(cols[c]);
            uint32_t packed = 0;
            int bit = 0;
            for (int i = 0; i < m.r(); ++i) {
                if (pivots >> i & 1) continue;
                if (v >> i & 1) packed |= 1u << bit;
                ++bit;
            }
            if (packed) values |= static_cast<uint16_t>(1u << packed);
            if (!dual_target && values == full) return true;
        }
        if (!dual_target) return values == full;
        for (uint16_t cap : f7_dual_value_masks())
            if ((values & cap) == cap) return true;
        return false;
    }

    bool go(int from, int depth) {
        if (depth == k) return check_quotient();
        for (int c = from; c < m.n(); ++c) {
            uint64_t v = reduce(cols[c]);
            if (v == 0) continue;
            ech.push_back(v);
            chosen[c] = 1;
            bool found = go(c + 1, depth + 1);
            chosen[c] = 0;
            ech.pop_back();
            if (found) return true;
        }
        return false;
    }
};

bool has_fano_minor(const BinaryMatroid& m, bool dual_target, long budget) {
    const int target_r = dual_target ? 4 : 3;
    if (m.r() < target_r || m.n() < 7) return false;
    if (m.n() - m.r() < 7 - target_r) return false;
    FanoMinorSearch search{m, dual_target, budget};
    return search.run();
}

}  // namespace

bool has_minor(const BinaryMatroid& m, const BinaryMatroid& n, long budget) {
    if (n.r() > m.r() || n.n() > m.n()) return false;
    if (n.n() - n.r() > m.n() - m.r()) return false;  // corank must fit too
    if (n.n() == 7 && m.r() <= 16) {
        static const CanonicalKey kF7 = canonical_key(fano());
        static const CanonicalKey kF7d = canonical_key(fano_dual());
        CanonicalKey nk = canonical_key(n);
        if (nk == kF7) return has_fano_minor(m, false, budget);
        if (nk == kF7d) return has_fano_minor(m, true, budget);
    }
    MinorSearch search{m, n, m.r() - n.r(), budget, 0, {}, {}, {}, {}};
    return search.run();
}

bool is_regular(const BinaryMatroid& m, long budget) {
    if (m.r() <= 16)
        return !has_fano_minor(m, false, budget) && !has_fano_minor(m, true, budget);
    return !has_minor(m, fano(), budget) && !has_minor(m, fano_dual(), budget);
}

bool is_graphic(const BinaryMatroid& m, long budget) {
    return !has_minor(m, fano(), budget) && !has_minor(m, fano_dual(), budget) &&
           !has_minor(m, dual(complete(5)), budget) &&
           !has_minor(m, bond_matroid(complete_bipartite_graph(3, 3)), budget);
}

bool is_cographic(const BinaryMatroid& m, long budget) { return is_graphic(dual(m), budget); }

}  // namespace nsco
