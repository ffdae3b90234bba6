#include "nsco/nsc.hpp"

#include <algorithm>
#include <set>

namespace nsco {

namespace {

bool support_less(const Cocircuit& a, const Cocircuit& b) {
    if (a.support.size() != b.support.size()) return a.support.size() < b.support.size();
    return a.support < b.support;
}

}  // namespace

std::vector<Cocircuit> cocircuits(const BinaryMatroid& m, int scan_limit) {
    const int r = m.r(), n = m.n();
    if (r > scan_limit)
        throw ScanLimitExceeded("cocircuit scan: r = " + std::to_string(r) + " exceeds limit " +
                                std::to_string(scan_limit));
    std::vector<Cocircuit> out;
    if (r == 0) return out;

    std::vector<uint64_t> colval(n);
    for (int c = 0; c < n; ++c) colval[c] = m.column_value(c);
    const int wpr = m.rep().words_per_row();
    // A cocircuit is a circuit of the dual, so its size is at most
    // r(dual) + 1 = n - r + 1; heavier codewords cannot pass the rank test.
    const int max_size = n - r + 1;

    for_each_codeword(m.rep(), [&](uint64_t coeff, const uint64_t* w) {
        if (popcount_words(w, wpr) > max_size) return;
        // The complement of any codeword support lies in the hyperplane
        // orthogonal to coeff, so its rank is <= r - 1; the support is a
        // cocircuit exactly when the bound is attained.
        uint64_t piv[64] = {0};
        int rk = 0;
        for (int c = 0; c < n && rk < r - 1; ++c) {
            if (w[c / 64] >> (c % 64) & 1) continue;
            uint64_t v = colval[c];
            while (v) {
                int b = 63 - __builtin_clzll(v);
                if (!piv[b]) {
                    piv[b] = v;
                    ++rk;
                    break;
                }
                v ^= piv[b];
            }
        }
        if (rk != r - 1) return;
        Cocircuit cc;
        cc.coeff = coeff;
        for (int c = 0; c < n; ++c)
            if (w[c / 64] >> (c % 64) & 1) cc.support.push_back(m.label(c));
        std::sort(cc.support.begin(), cc.support.end());
        out.push_back(std::move(cc));
    });
    std::sort(out.begin(), out.end(), support_less);
    return out;
}

std::vector<Cocircuit> nonseparating_cocircuits(const BinaryMatroid& m, int scan_limit) {
    std::vector<Cocircuit> out;
    for (auto& cc : cocircuits(m, scan_limit))
        if (is_connected(deletion(m, cc.support))) out.push_back(std::move(cc));
    return out;
}

namespace {

int dep_of_family(const std::vector<Cocircuit>& nsc, const std::set<std::string>& avoid) {
    std::vector<uint64_t> coeffs;
    for (const auto& cc : nsc) {
        bool disjoint = true;
        for (const auto& e : cc.support)
            if (avoid.count(e)) {
                disjoint = false;
                break;
            }
        if (disjoint) coeffs.push_back(cc.coeff);
    }
    return static_cast<int>(coeffs.size()) - rank_of_values(coeffs);
}

}  // namespace

int dep(const BinaryMatroid& m, const ElementSet& a, int scan_limit) {
    for (const auto& e : a) m.col_of_checked(e);
    return dep_of_family(nonseparating_cocircuits(m, scan_limit),
                         std::set<std::string>(a.begin(), a.end()));
}

NscReport report(const BinaryMatroid& m, int scan_limit) {
    NscReport rep;
    rep.nsc = nonseparating_cocircuits(m, scan_limit);
    const int total = static_cast<int>(rep.nsc.size());
    for (const auto& e : m.ground_set()) rep.meets[e] = 0;
    for (const auto& cc : rep.nsc)
        for (const auto& e : cc.support) ++rep.meets[e];
    for (const auto& e : m.ground_set()) {
        rep.avoids[e] = total - rep.meets[e];
        rep.dep_e[e] = dep_of_family(rep.nsc, {e});
        if (rep.dep_e[e] > 0)
            rep.Y.push_back(e);
        else
            rep.Ytilde.push_back(e);
    }
    rep.ytilde_corank = corank_of(m, rep.Ytilde);
    return rep;
}

NscReport dual_report(const BinaryMatroid& stored, int scan_limit) {
    return report(dual(stored), scan_limit);
}

}  // namespace nsco
