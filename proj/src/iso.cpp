#include "nsco/iso.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>

namespace nsco {

bool operator==(const Signature& a, const Signature& b) {
    if (a.r != b.r || a.n != b.n || a.size_distribution != b.size_distribution) return false;
    // Profiles compare as multisets; column order is not isomorphism-invariant.
    auto pa = a.profiles, pb = b.profiles;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    return pa == pb;
}

namespace {

// Enumerates circuits of size <= cap of the matroid given by column values,
// calling out(sorted column indices). Circuits are generated exactly once as
// I + {c} with c the largest index and I independent.
void small_circuits(const std::vector<uint64_t>& cols, int cap,
                    const std::function<void(const std::vector<int>&)>& out) {
    const int n = static_cast<int>(cols.size());
    struct Ech {
        uint64_t v, coeff;
    };
    std::vector<Ech> ech;
    std::vector<int> chosen;
    std::vector<int> circuit;

    std::function<void(int)> go = [&](int from) {
        const int k = static_cast<int>(chosen.size());
        for (int c = from; c < n; ++c) {
            uint64_t v = cols[c], coeff = 0;
            bool progress = true;
            while (v && progress) {
                progress = false;
                for (const Ech& e : ech) {
                    int pb = 63 - __builtin_clzll(e.v);
                    if (v >> pb & 1) {
                        v ^= e.v;
                        coeff ^= e.coeff;
                        progress = true;
                    }
                }
            }
            if (v == 0) {
                // Dependent on the chosen set; a circuit iff all coefficients used.
                if (coeff == (k == 64 ? ~uint64_t{0} : (uint64_t{1} << k) - 1)) {
                    circuit = chosen;
                    circuit.push_back(c);
                    out(circuit);
                }
                continue;
            }
            if (k + 1 < cap) {
                ech.push_back({v, coeff | (uint64_t{1} << k)});
                chosen.push_back(c);
                go(c + 1);
                chosen.pop_back();
                ech.pop_back();
            }
        }
    };
    go(0);
}

}  // namespace

Signature invariant_signature(const BinaryMatroid& m) {
    Signature sig;
    sig.r = m.r();
    sig.n = m.n();
    sig.profiles.assign(m.n(), {});

    // Cocircuits of M of size <= cap are small circuits of the dual.
    BinaryMatroid d = dual(m);
    std::vector<uint64_t> dcols(d.n());
    for (int c = 0; c < d.n(); ++c) dcols[c] = d.column_value(c);
    std::vector<int> to_m(d.n());
    for (int c = 0; c < d.n(); ++c) to_m[c] = m.col_of_checked(d.label(c));

    std::vector<std::vector<int>> counts(m.n(), std::vector<int>(kSignatureCap + 1, 0));
    std::vector<int> dist(kSignatureCap + 1, 0);
    small_circuits(dcols, kSignatureCap, [&](const std::vector<int>& circ) {
        int s = static_cast<int>(circ.size());
        ++dist[s];
        for (int c : circ) ++counts[to_m[c]][s];
    });
    for (int s = 1; s <= kSignatureCap; ++s)
        if (dist[s]) sig.size_distribution.push_back({s, dist[s]});
    for (int c = 0; c < m.n(); ++c)
        for (int s = 1; s <= kSignatureCap; ++s)
            if (counts[c][s]) sig.profiles[c].push_back({s, counts[c][s]});
    return sig;
}

namespace {

struct Ech {
    uint64_t v, coeff;
};

// Reduces x against ech; returns remainder and accumulates coefficients.
std::pair<uint64_t, uint64_t> reduce(uint64_t x, const std::vector<Ech>& ech) {
    uint64_t coeff = 0;
    bool progress = true;
    while (x && progress) {
        progress = false;
        for (const Ech& e : ech) {
            int pb = 63 - __builtin_clzll(e.v);
            if (x >> pb & 1) {
                x ^= e.v;
                coeff ^= e.coeff;
                progress = true;
            }
        }
    }
    return {x, coeff};
}

struct Canonizer {
    int r, n;
    std::vector<uint64_t> cols;
    std::vector<char> allowed_first;

    std::vector<uint64_t> best;
    bool have_best = false;
    std::vector<std::vector<int>> min_bases;
    std::vector<int> basis;

    void run(const BinaryMatroid& m) {
        r = m.r();
        n = m.n();
        cols.resize(n);
        for (int c = 0; c < n; ++c) cols[c] = m.column_value(c);

        // b1 is restricted to the columns of minimal invariant profile; the
        // class is isomorphism-invariant, so the minimum stays canonical.
        allowed_first.assign(n, 0);
        if (r > 0) {
            Signature sig = invariant_signature(m);
            const std::vector<std::pair<int, int>>* min_profile = nullptr;
            for (int c = 0; c < n; ++c) {
                if (cols[c] == 0) continue;
                if (!min_profile || sig.profiles[c] < *min_profile) min_profile = &sig.profiles[c];
            }
            for (int c = 0; c < n; ++c)
                if (cols[c] != 0 && sig.profiles[c] == *min_profile) allowed_first[c] = 1;
        }

        std::vector<char> in_span(n, 0);
        std::vector<uint64_t> prefix;
        for (int c = 0; c < n; ++c)
            if (cols[c] == 0) {
                in_span[c] = 1;
                prefix.push_back(0);
            }
        std::vector<Ech> ech;
        dfs(0, ech, in_span, prefix, -1);
    }

    void dfs(int k, std::vector<Ech>& ech, std::vector<char>& in_span,
             std::vector<uint64_t>& prefix, int cmp) {
        if (k == r) {
            if (cmp < 0 || !have_best) {
                best = prefix;
                have_best = true;
                min_bases.clear();
                min_bases.push_back(basis);
            } else {
                min_bases.push_back(basis);
            }
            return;
        }
        struct Cand {
            int col;
            Ech e;
            std::vector<uint64_t> batch;
            std::vector<int> newly;
        };
        std::vector<Cand> cands;
        std::vector<uint64_t> used_values;
        for (int c = 0; c < n; ++c) {
            if (in_span[c]) continue;
            if (k == 0 && !allowed_first[c]) continue;
            auto [v, coeff] = reduce(cols[c], ech);
            // v != 0 since c is outside the span.
            uint64_t key = cols[c];
            if (std::find(used_values.begin(), used_values.end(), key) != used_values.end())
                continue;  // parallel columns branch identically
            used_values.push_back(key);
            Cand cand;
            cand.col = c;
            cand.e = {v, coeff | (uint64_t{1} << k)};
            std::vector<Ech> ech2 = ech;
            ech2.push_back(cand.e);
            for (int x = 0; x < n; ++x) {
                if (in_span[x]) continue;
                auto [vx, cx] = reduce(cols[x], ech2);
                if (vx == 0) {
                    cand.batch.push_back(cx);
                    cand.newly.push_back(x);
                }
            }
            std::sort(cand.batch.begin(), cand.batch.end());
            cands.push_back(std::move(cand));
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return a.batch < b.batch; });
        const size_t p = prefix.size();
        for (Cand& cand : cands) {
            int cmp2 = cmp;
            if (cmp2 == 0 && have_best) {
                for (size_t t = 0; t < cand.batch.size() && cmp2 == 0; ++t) {
                    if (cand.batch[t] < best[p + t])
                        cmp2 = -1;
                    else if (cand.batch[t] > best[p + t])
                        cmp2 = 1;
                }
            }
            if (cmp2 > 0) continue;
            ech.push_back(cand.e);
            basis.push_back(cand.col);
            for (int x : cand.newly) in_span[x] = 1;
            for (uint64_t v : cand.batch) prefix.push_back(v);
            dfs(k + 1, ech, in_span, prefix, have_best ? cmp2 : -1);
            prefix.resize(p);
            for (int x : cand.newly) in_span[x] = 0;
            basis.pop_back();
            ech.pop_back();
            // After the first completed leaf, later siblings compare tight.
            if (cmp == -1 && have_best) cmp = 0;
        }
    }
};

}  // namespace

CanonicalKey canonical_key(const BinaryMatroid& m) {
    if (m.n() > 64) throw SizeLimit("canonical_key: n > 64");
    Canonizer cz;
    cz.run(m);
    std::vector<uint64_t> vals = cz.have_best ? cz.best : std::vector<uint64_t>(m.n(), 0);
    CanonicalKey key;
    key.bytes.push_back(static_cast<uint8_t>(m.r()));
    key.bytes.push_back(static_cast<uint8_t>(m.n()));
    for (uint64_t v : vals)
        for (int b = 0; b < 8; ++b) key.bytes.push_back(static_cast<uint8_t>(v >> (8 * b)));
    return key;
}

std::string CanonicalKey::hex() const {
    std::string out;
    char buf[3];
    for (uint8_t b : bytes) {
        std::snprintf(buf, sizeof buf, "%02x", b);
        out += buf;
    }
    return out;
}

BinaryMatroid matroid_of_key(const CanonicalKey& key) {
    if (key.bytes.size() < 2) throw MatroidError("malformed canonical key");
    int r = key.bytes[0], n = key.bytes[1];
    if (key.bytes.size() != 2 + 8 * static_cast<size_t>(n))
        throw MatroidError("malformed canonical key");
    BitMatrix a(r, n);
    std::vector<std::string> labels;
    for (int c = 0; c < n; ++c) {
        uint64_t v = 0;
        for (int b = 0; b < 8; ++b) v |= uint64_t{key.bytes[2 + 8 * c + b]} << (8 * b);
        for (int i = 0; i < r; ++i)
            if (v >> i & 1) a.set(i, c, true);
        labels.push_back(std::to_string(c + 1));
    }
    return BinaryMatroid::from_columns(a, std::move(labels));
}

namespace {

std::vector<uint64_t> coords_under(const std::vector<uint64_t>& cols,
                                   const std::vector<int>& basis) {
    std::vector<Ech> ech;
    for (size_t k = 0; k < basis.size(); ++k) {
        auto [v, coeff] = reduce(cols[basis[k]], ech);
        ech.push_back({v, coeff | (uint64_t{1} << k)});
    }
    std::vector<uint64_t> out(cols.size());
    for (size_t c = 0; c < cols.size(); ++c) out[c] = reduce(cols[c], ech).second;
    return out;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const BinaryMatroid& m) {
    if (m.n() > 64) throw SizeLimit("automorphisms: n > 64");
    Canonizer cz;
    cz.run(m);
    const int n = m.n();
    std::vector<std::vector<int>> perms;
    if (cz.min_bases.empty()) {
        std::vector<int> id(n);
        for (int c = 0; c < n; ++c) id[c] = c;
        perms.push_back(std::move(id));
        return perms;
    }
    std::vector<uint64_t> base_coords = coords_under(cz.cols, cz.min_bases.front());
    for (const auto& b : cz.min_bases) {
        std::vector<uint64_t> coords = coords_under(cz.cols, b);
        // Match columns with equal coordinate values; ties (parallel columns)
        // pair off in index order.
        std::map<uint64_t, std::vector<int>> from, to;
        for (int c = 0; c < n; ++c) {
            from[base_coords[c]].push_back(c);
            to[coords[c]].push_back(c);
        }
        std::vector<int> perm(n, -1);
        for (auto& [v, f] : from) {
            auto& t = to[v];
            for (size_t i = 0; i < f.size(); ++i) perm[f[i]] = t[i];
        }
        perms.push_back(std::move(perm));
    }
    std::sort(perms.begin(), perms.end());
    perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
    return perms;
}

bool are_isomorphic(const BinaryMatroid& m1, const BinaryMatroid& m2) {
    if (m1.r() != m2.r() || m1.n() != m2.n()) return false;
    if (!(invariant_signature(m1) == invariant_signature(m2))) return false;
    return canonical_key(m1) == canonical_key(m2);
}

bool restriction_embeds(const BinaryMatroid& nm, const BinaryMatroid& m) {
    const int rn = nm.r(), rm = m.r();
    if (rn > rm || nm.n() > m.n()) return false;

    int n_loops = 0, m_loops = 0;
    std::map<uint64_t, int> avail;
    for (int c = 0; c < m.n(); ++c) {
        uint64_t v = m.column_value(c);
        if (v == 0)
            ++m_loops;
        else
            ++avail[v];
    }
    std::vector<uint64_t> want;  // nonzero non-identity columns of N, by top bit
    std::vector<std::vector<uint64_t>> by_top(rn);
    for (int c = 0; c < nm.n(); ++c) {
        uint64_t v = nm.column_value(c);
        if (v == 0) {
            ++n_loops;
            continue;
        }
        if (c < rn) continue;  // identity columns are the basis itself
        by_top[63 - __builtin_clzll(v)].push_back(v);
    }
    if (n_loops > m_loops) return false;
    if (rn == 0) return true;

    std::map<uint64_t, int> needed;
    std::vector<uint64_t> img(rn);
    std::vector<Ech> ech;

    std::function<bool(int)> go = [&](int k) -> bool {
        if (k == rn) return true;
        for (const auto& [val, cnt] : avail) {
            if (reduce(val, ech).first == 0) continue;  // dependent on images
            std::vector<uint64_t> charged;
            bool ok = true;
            auto charge = [&](uint64_t v) {
                auto it = avail.find(v);
                int have = it == avail.end() ? 0 : it->second;
                if (needed[v] + 1 > have) {
                    ok = false;
                    return;
                }
                ++needed[v];
                charged.push_back(v);
            };
            charge(val);
            img[k] = val;
            if (ok) {
                for (uint64_t w : by_top[k]) {
                    uint64_t rv = 0;
                    for (int i = 0; i <= k; ++i)
                        if (w >> i & 1) rv ^= img[i];
                    charge(rv);
                    if (!ok) break;
                }
            }
            if (ok) {
                ech.push_back({reduce(val, ech).first,
                               reduce(val, ech).second | (uint64_t{1} << k)});
                if (go(k + 1)) return true;
                ech.pop_back();
            }
            for (uint64_t v : charged) --needed[v];
        }
        return false;
    };
    return go(0);
}

}  // namespace nsco
