#include "nsco/extend.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "nsco/zoo.hpp"

namespace nsco {

BitMatrix gamma(const BitMatrix& a, const ExtensionVector& v) {
    const int r = a.rows(), n = a.cols();
    if (static_cast<int>(v.size()) != n)
        throw LengthMismatch("gamma: vector length != column count");
    int k = 0;
    for (uint8_t e : v) {
        if (e > 2) throw LengthMismatch("gamma: entries must be 0, 1 or 2");
        if (e == 2) ++k;
    }
    BitMatrix g(r + 1, 1 + n + k);
    g.set(0, 0, true);
    for (int c = 0; c < n; ++c) {
        if (v[c] & 1) g.set(0, 1 + c, true);
        for (int i = 0; i < r; ++i)
            if (a.get(i, c)) g.set(1 + i, 1 + c, true);
    }
    int app = 1 + n;
    for (int c = 0; c < n; ++c) {
        if (v[c] != 2) continue;
        g.set(0, app, true);
        for (int i = 0; i < r; ++i)
            if (a.get(i, c)) g.set(1 + i, app, true);
        ++app;
    }
    return g;
}

void layer(const BitMatrix& a, bool full_vectors,
           const std::function<bool(const ExtensionVector&)>& fn) {
    const int r = a.rows(), n = a.cols();
    ExtensionVector v(n, 0);
    while (true) {
        if (!fn(v)) return;
        // Odometer step in lexicographic order, least significant last.
        int i = n - 1;
        for (; i >= 0; --i) {
            uint8_t step = (!full_vectors && i < r) ? 2 : 1;
            if (v[i] + step <= 2) {
                v[i] = static_cast<uint8_t>(v[i] + step);
                break;
            }
            v[i] = 0;
        }
        if (i < 0) return;
    }
}

long layer_size(int r, int n, bool full_vectors) {
    long out = 1;
    for (int i = 0; i < n; ++i) out *= (!full_vectors && i < r) ? 2 : 3;
    return out;
}

namespace {

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

uint64_t pack_masks(uint32_t s, uint32_t b) { return (uint64_t{s} << 32) | b; }

// Per-seed isomorph rejection: candidates whose vectors lie in one orbit of
// Aut(M[A]) acting on coordinate positions (relation (8.2)) are kept once.
class OrbitDedup {
public:
    OrbitDedup(const BinaryMatroid& seed, bool enabled) : n_(seed.n()) {
        if (!enabled) return;
        perms_ = automorphisms(seed);
        if (perms_.size() <= 1) {
            perms_.clear();
            return;
        }
        big_ = n_ <= 18 && perms_.size() > 512;
        if (big_) build_tables();
    }

    bool is_new(const ExtensionVector& v) {
        if (perms_.empty()) return true;
        uint32_t b = 0, s = 0;
        for (int i = 0; i < n_; ++i) {
            if (v[i] == 1) b |= uint32_t{1} << i;
            if (v[i] == 2) s |= uint32_t{1} << i;
        }
        uint64_t key = big_ ? canon_big(s, b) : canon_small(s, b);
        return seen_.insert(key).second;
    }

private:
    // apply(p, m) = {i : p(i) in m}, the mask of v o p when m is a mask of v.
    uint32_t apply(const std::vector<int>& p, uint32_t m) const {
        uint32_t out = 0;
        for (int i = 0; i < n_; ++i)
            if (m >> p[i] & 1) out |= uint32_t{1} << i;
        return out;
    }

    uint64_t canon_small(uint32_t s, uint32_t b) const {
        uint64_t best = pack_masks(s, b);
        for (const auto& p : perms_) best = std::min(best, pack_masks(apply(p, s), apply(p, b)));
        return best;
    }

    void build_tables() {
        const size_t np = perms_.size();
        const int hi_bits = n_ > 8 ? n_ - 8 : 0;
        lo_.assign(np * 256, 0);
        hi_.assign(np << hi_bits, 0);
        for (size_t pi = 0; pi < np; ++pi) {
            for (int m = 0; m < 256; ++m) lo_[pi * 256 + m] = apply(perms_[pi], m);
            for (int m = 0; m < (1 << hi_bits); ++m)
                hi_[(pi << hi_bits) + m] = apply(perms_[pi], static_cast<uint32_t>(m) << 8);
        }
        hi_bits_ = hi_bits;
        canon_.assign(size_t{1} << n_, 0);
        trans_.assign(size_t{1} << n_, 0);
        for (uint32_t m = 0; m < (uint32_t{1} << n_); ++m) {
            uint32_t best = m;
            uint32_t arg = 0;
            for (size_t pi = 0; pi < np; ++pi) {
                uint32_t im = fast_apply(pi, m);
                if (im < best) {
                    best = im;
                    arg = static_cast<uint32_t>(pi);
                }
            }
            canon_[m] = best;
            trans_[m] = arg;
        }
        // Stabilizer lists for the canonical masks that actually occur.
        for (uint32_t m = 0; m < (uint32_t{1} << n_); ++m) {
            uint32_t c = canon_[m];
            if (stab_.count(c)) continue;
            std::vector<int>& st = stab_[c];
            for (size_t pi = 0; pi < np; ++pi)
                if (fast_apply(pi, c) == c) st.push_back(static_cast<int>(pi));
        }
    }

    uint32_t fast_apply(size_t pi, uint32_t m) const {
        uint32_t out = lo_[pi * 256 + (m & 255)];
        if (hi_bits_) out |= hi_[(pi << hi_bits_) + (m >> 8)];
        return out;
    }

    uint64_t canon_big(uint32_t s, uint32_t b) const {
        uint32_t c = canon_[s];
        uint32_t b1 = fast_apply(trans_[s], b);
        // The identity transporter case: if s is already canonical, trans_ may
        // be a non-identity argmin; b1 is still a valid coset representative.
        uint32_t best = ~uint32_t{0};
        for (int pi : stab_.at(c)) best = std::min(best, fast_apply(pi, b1));
        return pack_masks(c, best);
    }

    int n_;
    bool big_ = false;
    int hi_bits_ = 0;
    std::vector<std::vector<int>> perms_;
    std::vector<uint32_t> lo_, hi_, canon_, trans_;
    std::map<uint32_t, std::vector<int>> stab_;
    std::unordered_set<uint64_t> seen_;
};

}  // namespace

CatalogItem catalog_root(const BinaryMatroid& m) {
    CatalogItem item;
    item.key = canonical_key(m);
    item.matrix = m.rep();
    return item;
}

CatalogLayer enumerate_extensions(const CatalogLayer& seeds, const ExtendOptions& opt,
                                  ExtendDiag* diag) {
    ExtendDiag local;
    ExtendDiag& d = diag ? *diag : local;
    const BinaryMatroid mk5 = complete(5);

    CatalogLayer out;
    out.level = seeds.level + 1;

    for (const CatalogItem& seed : seeds.items) {
        BinaryMatroid sm =
            BinaryMatroid::from_standard(seed.matrix, numbered(seed.matrix.cols()));
        d.candidates += layer_size(sm.r(), sm.n(), opt.full_vectors);
        OrbitDedup dedup(sm, opt.orbit_prune);
        layer(seed.matrix, opt.full_vectors, [&](const ExtensionVector& v) {
            if (!dedup.is_new(v)) return true;
            ++d.enumerated;
            BitMatrix g = gamma(seed.matrix, v);
            BinaryMatroid m = opt.full_vectors
                                  ? BinaryMatroid::from_columns(g, numbered(g.cols()))
                                  : BinaryMatroid::from_standard(g, numbered(g.cols()));
            if (opt.require_cosimple && !is_cosimple(m)) return true;
            ++d.cosimple_pass;
            if (opt.require_regular && !is_regular(m, opt.minor_budget)) return true;
            ++d.regular_pass;
            if (opt.exclude_mk5 && has_minor(m, mk5, opt.minor_budget)) return true;
            ++d.k5_pass;
            int corank = -1;
            if (opt.nsc_corank_threshold >= 0 || opt.compute_nsc_stats) {
                if (m.n() - m.r() > opt.scan_limit) {
                    ++d.skipped_scan_limit;
                    d.incomplete = true;
                    return true;
                }
                corank = dual_report(m, opt.scan_limit).ytilde_corank;
                if (opt.nsc_corank_threshold >= 0 && corank < opt.nsc_corank_threshold)
                    return true;
            }
            ++d.nsc_pass;
            CatalogItem item;
            item.key = canonical_key(m);
            item.matrix = m.rep();
            item.parent_key = seed.key.hex();
            item.vec = v;
            item.ytilde_corank = corank;
            out.items.push_back(std::move(item));
            return true;
        });
    }

    std::sort(out.items.begin(), out.items.end(), [](const CatalogItem& a, const CatalogItem& b) {
        if (!(a.key == b.key)) return a.key < b.key;
        if (a.parent_key != b.parent_key) return a.parent_key < b.parent_key;
        return a.vec < b.vec;
    });
    out.items.erase(std::unique(out.items.begin(), out.items.end(),
                                [](const CatalogItem& a, const CatalogItem& b) {
                                    return a.key == b.key;
                                }),
                    out.items.end());
    return out;
}

}  // namespace nsco
