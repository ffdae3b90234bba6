#include "doctest.h"
#include "nsco/nsc.hpp"
#include "oracle.hpp"

#include <random>
#include <set>

using namespace nsco;

namespace {

BitMatrix from_rows(int rows, int cols, const std::vector<std::string>& bits) {
    BitMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (bits[i][j] == '1') m.set(i, j, true);
    return m;
}

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

BinaryMatroid fano() {
    return BinaryMatroid::from_matrix(from_rows(3, 7, {"1000111", "0101011", "0011101"}),
                                      numbered(7));
}

BinaryMatroid mk4() {
    BitMatrix inc(4, 6);
    int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int e = 0; e < 6; ++e) {
        inc.set(edges[e][0], e, true);
        inc.set(edges[e][1], e, true);
    }
    return BinaryMatroid::from_columns(inc, numbered(6));
}

std::vector<ElementSet> supports(const std::vector<Cocircuit>& ccs) {
    std::vector<ElementSet> out;
    for (const auto& cc : ccs) out.push_back(cc.support);
    return out;
}

}  // namespace

TEST_CASE("cocircuits of M(K4), F7, U_{2,3}") {
    std::vector<Cocircuit> k4 = cocircuits(mk4());
    REQUIRE(k4.size() == 7);
    int size3 = 0, size4 = 0;
    for (const auto& cc : k4) {
        if (cc.support.size() == 3) ++size3;
        if (cc.support.size() == 4) ++size4;
    }
    CHECK(size3 == 4);  // vertex stars
    CHECK(size4 == 3);  // 2+2 vertex cuts
    // Sorted by (size, labels): triads first.
    CHECK(k4.front().support.size() == 3);
    CHECK(k4.back().support.size() == 4);

    std::vector<Cocircuit> f7 = cocircuits(fano());
    REQUIRE(f7.size() == 7);
    for (const auto& cc : f7) CHECK(cc.support.size() == 4);

    BitMatrix u23m(2, 3);
    u23m.set(0, 0, true);
    u23m.set(1, 1, true);
    u23m.set(0, 2, true);
    u23m.set(1, 2, true);
    BinaryMatroid u23 = BinaryMatroid::from_matrix(u23m, numbered(3));
    std::vector<Cocircuit> u = cocircuits(u23);
    REQUIRE(u.size() == 3);
    for (const auto& cc : u) CHECK(cc.support.size() == 2);
}

TEST_CASE("cocircuit complements are hyperplanes") {
    for (const BinaryMatroid& m : {fano(), mk4()}) {
        for (const auto& cc : cocircuits(m)) {
            CHECK(rank_of(m, set_difference(m.ground_set(), cc.support)) == m.r() - 1);
            CHECK_FALSE(cc.support.empty());
        }
    }
}

TEST_CASE("nonseparating_cocircuits fixtures") {
    // M(K4): exactly the 4 vertex-star triads survive.
    std::vector<Cocircuit> k4 = nonseparating_cocircuits(mk4());
    REQUIRE(k4.size() == 4);
    for (const auto& cc : k4) CHECK(cc.support.size() == 3);

    // F7: every cocircuit is non-separating (deleting one leaves U_{2,3}).
    CHECK(nonseparating_cocircuits(fano()).size() == 7);
}

TEST_CASE("nsc scan equals the brute-force oracle on random matroids") {
    std::mt19937_64 rng(4242);
    int nontrivial = 0;
    for (int t = 0; t < 120; ++t) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 9);
        BitMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() & 1) a.set(i, j, true);
        BinaryMatroid m = BinaryMatroid::from_columns(a, numbered(cols));
        std::vector<ElementSet> got = supports(nonseparating_cocircuits(m));
        std::vector<ElementSet> want = oracle::brute_nsc(m);
        CHECK(got == want);
        if (!want.empty()) ++nontrivial;
    }
    CHECK(nontrivial > 40);
}

TEST_CASE("dep values on fixtures") {
    BinaryMatroid f = fano();
    for (const auto& e : f.ground_set()) CHECK(dep(f, {e}) == 1);
    BinaryMatroid m = mk4();
    for (const auto& e : m.ground_set()) CHECK(dep(m, {e}) == 0);
    CHECK(dep(f, f.ground_set()) == 0);
    CHECK(dep(m, m.ground_set()) == 0);
    CHECK_THROWS_AS(dep(f, {"zzz"}), UnknownLabel);
}

TEST_CASE("report on F7 and M(K4)") {
    NscReport rf = report(fano());
    CHECK(rf.Y == fano().ground_set());
    CHECK(rf.Ytilde.empty());
    CHECK(rf.ytilde_corank == 0);
    for (const auto& [e, c] : rf.meets) CHECK(c + rf.avoids.at(e) == static_cast<int>(rf.nsc.size()));

    NscReport rk = report(mk4());
    CHECK(rk.Y.empty());
    CHECK(rk.Ytilde == mk4().ground_set());
    // Every edge of K4 lies in exactly 2 vertex stars.
    for (const auto& [e, c] : rk.meets) CHECK(c == 2);
}

TEST_CASE("Bixby-Cunningham and Lemos invariants on small fixtures") {
    for (const BinaryMatroid& m : {fano(), mk4()}) {
        NscReport rep = report(m);
        std::vector<uint64_t> coeffs;
        for (const auto& cc : rep.nsc) coeffs.push_back(cc.coeff);
        CHECK(rank_of_values(coeffs) == m.r());  // (a): NSCs span the cocircuit space
        for (const auto& e : m.ground_set()) {
            CHECK(rep.meets.at(e) >= 2);  // (b)
            std::vector<uint64_t> avoiding;
            for (const auto& cc : rep.nsc)
                if (std::find(cc.support.begin(), cc.support.end(), e) == cc.support.end())
                    avoiding.push_back(cc.coeff);
            CHECK(rank_of_values(avoiding) == m.r() - 1);  // Lemos hyperplane property
            CHECK((rep.dep_e.at(e) > 0) == (rep.avoids.at(e) >= m.r()));
        }
    }
}

TEST_CASE("scan limit") {
    CHECK_THROWS_AS(cocircuits(fano(), 2), ScanLimitExceeded);
    CHECK(cocircuits(fano(), 3).size() == 7);
}
