#include "nsco/matroid.hpp"

#include <algorithm>
#include <set>

namespace nsco {

namespace {

struct Gf2Basis {
    uint64_t piv[64] = {0};
    int rank = 0;
    // Returns true if v was independent of the basis (and inserts it).
    bool add(uint64_t v) {
        while (v) {
            int b = 63 - __builtin_clzll(v);
            if (!piv[b]) {
                piv[b] = v;
                ++rank;
                return true;
            }
            v ^= piv[b];
        }
        return false;
    }
    bool contains(uint64_t v) const {
        while (v) {
            int b = 63 - __builtin_clzll(v);
            if (!piv[b]) return false;
            v ^= piv[b];
        }
        return true;
    }
};

void check_labels(const std::vector<std::string>& labels) {
    std::set<std::string> seen;
    for (const auto& l : labels)
        if (!seen.insert(l).second) throw DuplicateLabel("duplicate element label: " + l);
}

std::vector<std::string> apply_perm(const std::vector<std::string>& labels,
                                    const std::vector<int>& perm) {
    std::vector<std::string> out(labels.size());
    for (size_t i = 0; i < perm.size(); ++i) out[i] = labels[perm[i]];
    return out;
}

}  // namespace

BinaryMatroid BinaryMatroid::from_matrix(const BitMatrix& a, std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != a.cols())
        throw MatroidError("label count must equal column count");
    check_labels(labels);
    StandardForm sf = standardize(a);
    return from_standard(std::move(sf.matrix), apply_perm(labels, sf.perm));
}

BinaryMatroid BinaryMatroid::from_columns(const BitMatrix& a, std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != a.cols())
        throw MatroidError("label count must equal column count");
    check_labels(labels);
    StandardForm sf = standardize_dropping_zero_rows(a);
    return from_standard(std::move(sf.matrix), apply_perm(labels, sf.perm));
}

BinaryMatroid BinaryMatroid::from_standard(BitMatrix std_form, std::vector<std::string> labels) {
    BinaryMatroid m;
    m.rep_ = std::move(std_form);
    m.labels_ = std::move(labels);
    return m;
}

int BinaryMatroid::col_of(const std::string& label) const {
    for (int i = 0; i < n(); ++i)
        if (labels_[i] == label) return i;
    return -1;
}

int BinaryMatroid::col_of_checked(const std::string& label) const {
    int c = col_of(label);
    if (c < 0) throw UnknownLabel("unknown element label: " + label);
    return c;
}

std::vector<int> BinaryMatroid::cols_of(const ElementSet& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (const auto& l : s) out.push_back(col_of_checked(l));
    return out;
}

ElementSet BinaryMatroid::ground_set() const { return sorted_unique(labels_); }

ElementSet sorted_unique(ElementSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    ElementSet sa = sorted_unique(a), sb = sorted_unique(b), out;
    std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
    return out;
}

BinaryMatroid dual(const BinaryMatroid& m) {
    const int r = m.r(), n = m.n();
    BitMatrix d(n - r, n);
    for (int i = 0; i < n - r; ++i) {
        d.set(i, i, true);
        for (int j = 0; j < r; ++j)
            if (m.rep().get(j, r + i)) d.set(i, n - r + j, true);
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (int i = r; i < n; ++i) labels.push_back(m.label(i));
    for (int i = 0; i < r; ++i) labels.push_back(m.label(i));
    return BinaryMatroid::from_standard(std::move(d), std::move(labels));
}

BinaryMatroid deletion(const BinaryMatroid& m, const ElementSet& s) {
    std::vector<int> drop = m.cols_of(sorted_unique(s));
    std::vector<bool> gone(m.n(), false);
    for (int c : drop) gone[c] = true;
    std::vector<int> keep;
    std::vector<std::string> labels;
    for (int c = 0; c < m.n(); ++c)
        if (!gone[c]) {
            keep.push_back(c);
            labels.push_back(m.label(c));
        }
    return BinaryMatroid::from_columns(submatrix_columns(m.rep(), keep), std::move(labels));
}

BinaryMatroid contraction(const BinaryMatroid& m, const ElementSet& s) {
    return dual(deletion(dual(m), s));
}

BinaryMatroid restriction(const BinaryMatroid& m, const ElementSet& s) {
    return deletion(m, set_difference(m.ground_set(), s));
}

int rank_of(const BinaryMatroid& m, const ElementSet& s) {
    std::vector<uint64_t> vals;
    for (int c : m.cols_of(sorted_unique(s))) vals.push_back(m.column_value(c));
    return rank_of_values(vals);
}

int corank_of(const BinaryMatroid& m, const ElementSet& s) {
    ElementSet ss = sorted_unique(s);
    return static_cast<int>(ss.size()) + rank_of(m, set_difference(m.ground_set(), ss)) - m.r();
}

ElementSet closure(const BinaryMatroid& m, const ElementSet& s) {
    Gf2Basis basis;
    for (int c : m.cols_of(sorted_unique(s))) basis.add(m.column_value(c));
    ElementSet out;
    for (int c = 0; c < m.n(); ++c)
        if (basis.contains(m.column_value(c))) out.push_back(m.label(c));
    return sorted_unique(std::move(out));
}

ElementSet coclosure(const BinaryMatroid& m, const ElementSet& s) {
    return closure(dual(m), s);
}

Partition parallel_classes(const BinaryMatroid& m) {
    std::map<uint64_t, ElementSet> by_value;
    Partition p;
    for (int c = 0; c < m.n(); ++c) {
        uint64_t v = m.column_value(c);
        if (v == 0)
            p.loops.push_back(m.label(c));
        else
            by_value[v].push_back(m.label(c));
    }
    p.loops = sorted_unique(std::move(p.loops));
    for (auto& [v, cls] : by_value) p.classes.push_back(sorted_unique(std::move(cls)));
    std::sort(p.classes.begin(), p.classes.end());
    return p;
}

Partition series_classes(const BinaryMatroid& m) { return parallel_classes(dual(m)); }

bool is_simple(const BinaryMatroid& m) {
    std::set<uint64_t> seen;
    for (int c = 0; c < m.n(); ++c) {
        uint64_t v = m.column_value(c);
        if (v == 0 || !seen.insert(v).second) return false;
    }
    return true;
}

bool is_cosimple(const BinaryMatroid& m) {
    // In standard form [I_r | D]: a coloop is a zero D-row, a series pair is a
    // pair of equal D-rows or a weight-1 D-row (identity element in series
    // with the lone D column it meets).
    const int r = m.r(), n = m.n();
    if (r == 0) return true;
    std::vector<std::vector<uint64_t>> drows(r);
    for (int i = 0; i < r; ++i) {
        std::vector<uint64_t> w(m.rep().words_per_row(), 0);
        for (int j = r; j < n; ++j)
            if (m.rep().get(i, j)) w[j / 64] |= uint64_t{1} << (j % 64);
        int wt = popcount_words(w.data(), static_cast<int>(w.size()));
        if (wt < 2) return false;
        drows[i] = std::move(w);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (drows[i] == drows[j]) return false;
    return true;
}

SimplifyResult simplify(const BinaryMatroid& m) {
    Partition p = parallel_classes(m);
    SimplifyResult res;
    ElementSet kept;
    for (const auto& cls : p.classes) {
        const std::string& rep = *std::min_element(cls.begin(), cls.end());
        kept.push_back(rep);
        for (const auto& e : cls) res.representative[e] = rep;
    }
    res.removed = p.loops;
    res.matroid = restriction(m, kept);
    return res;
}

SimplifyResult cosimplify(const BinaryMatroid& m) {
    SimplifyResult inner = simplify(dual(m));
    SimplifyResult res;
    res.matroid = dual(inner.matroid);
    res.representative = std::move(inner.representative);
    res.removed = std::move(inner.removed);
    return res;
}

bool is_connected(const BinaryMatroid& m) {
    const int r = m.r(), n = m.n();
    if (n <= 1) return true;
    if (r == 0) return false;  // >= 2 loops
    // Union-find on rows; each D column joins the rows of its support. Loops
    // and zero D-rows (coloops) are separate blocks.
    std::vector<int> parent(r);
    for (int i = 0; i < r; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int j = r; j < n; ++j) {
        int first = -1;
        for (int i = 0; i < r; ++i) {
            if (!m.rep().get(i, j)) continue;
            if (first < 0)
                first = i;
            else
                parent[find(i)] = find(first);
        }
        if (first < 0) return false;  // loop
    }
    std::vector<int> dweight(r, 0);
    for (int i = 0; i < r; ++i)
        for (int j = r; j < n; ++j)
            if (m.rep().get(i, j)) ++dweight[i];
    for (int i = 0; i < r; ++i)
        if (dweight[i] == 0) return false;  // coloop among >= 2 elements
    int root = find(0);
    for (int i = 1; i < r; ++i)
        if (find(i) != root) return false;
    return true;
}

namespace {

// Fills ranks[mask] for every subset mask of the n column values.
void fill_rank_table(const std::vector<uint64_t>& cols, std::vector<uint8_t>& ranks) {
    const int n = static_cast<int>(cols.size());
    ranks.assign(size_t{1} << n, 0);

    // DFS over subsets built with strictly increasing indices; adding a column
    // touches exactly one pivot slot, so undo is a single store.
    struct Rec {
        const std::vector<uint64_t>& cols;
        std::vector<uint8_t>& ranks;
        Gf2Basis basis;
        int n;
        void go(int i, uint32_t mask) {
            ranks[mask] = static_cast<uint8_t>(basis.rank);
            for (int j = i; j < n; ++j) {
                uint64_t v = cols[j];
                int slot = -1;
                while (v) {
                    int b = 63 - __builtin_clzll(v);
                    if (!basis.piv[b]) {
                        basis.piv[b] = v;
                        ++basis.rank;
                        slot = b;
                        break;
                    }
                    v ^= basis.piv[b];
                }
                go(j + 1, mask | (uint32_t{1} << j));
                if (slot >= 0) {
                    basis.piv[slot] = 0;
                    --basis.rank;
                }
            }
        }
    } rec{cols, ranks, {}, n};
    rec.go(0, 0);
}

}  // namespace

bool is_3connected(const BinaryMatroid& m) {
    const int n = m.n(), r = m.r();
    // With at most 3 elements no 2-separation can exist; 3-connectivity
    // degenerates to connectivity (so U_{2,3} and its dual qualify).
    if (n <= 3) return is_connected(m);
    if (!is_simple(m) || !is_cosimple(m)) return false;
    if (!is_connected(m)) return false;
    if (n > 24) throw SizeLimit("is_3connected: exhaustive scan limited to n <= 24");

    std::vector<uint64_t> cols(n);
    for (int c = 0; c < n; ++c) cols[c] = m.column_value(c);
    std::vector<uint8_t> ranks;
    fill_rank_table(cols, ranks);

    const uint32_t full = (n == 32) ? ~uint32_t{0} : ((uint32_t{1} << n) - 1);
    for (uint32_t x = 0; x <= full; ++x) {
        if (!(x & 1)) continue;  // fix element 0 on one side; complements covered
        int pc = __builtin_popcount(x);
        if (pc < 2 || n - pc < 2) continue;
        if (ranks[x] + ranks[full ^ x] - r <= 1) return false;
    }
    return true;
}

}  // namespace nsco
