#include "doctest.h"
#include "nsco/matroid.hpp"
#include "oracle.hpp"

#include <random>

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

// Cycle matroid of K4 on vertices 1..4, edges in fixed order.
BinaryMatroid mk4() {
    // incidence matrix mod 2, edges 12,13,14,23,24,34
    BitMatrix inc(4, 6);
    int edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int e = 0; e < 6; ++e) {
        inc.set(edges[e][0], e, true);
        inc.set(edges[e][1], e, true);
    }
    return BinaryMatroid::from_columns(inc, numbered(6));
}

}  // namespace

TEST_CASE("from_matrix basics") {
    BinaryMatroid f = fano();
    CHECK(f.r() == 3);
    CHECK(f.n() == 7);

    BitMatrix i4(4, 4);
    for (int i = 0; i < 4; ++i) i4.set(i, i, true);
    BinaryMatroid u44 = BinaryMatroid::from_matrix(i4, {"a", "b", "c", "d"});
    CHECK(u44.r() == 4);
    CHECK_FALSE(is_cosimple(u44));  // four coloops

    CHECK_THROWS_AS(BinaryMatroid::from_matrix(i4, {"a", "a", "c", "d"}), DuplicateLabel);
}

TEST_CASE("dual is an involution preserving label content") {
    BinaryMatroid f = fano();
    BinaryMatroid fd = dual(f);
    CHECK(fd.r() == 4);
    CHECK(fd.n() == 7);
    BinaryMatroid fdd = dual(fd);
    for (int c = 0; c < f.n(); ++c) {
        int c2 = fdd.col_of_checked(f.label(c));
        CHECK(fdd.column_value(c2) == f.column_value(c));
    }
}

TEST_CASE("deletion, contraction, restriction") {
    BinaryMatroid f = fano();
    // Every single-element deletion of F7 has rank 3 and 6 elements, simple.
    for (const auto& e : f.ground_set()) {
        BinaryMatroid d = deletion(f, {e});
        CHECK(d.r() == 3);
        CHECK(d.n() == 6);
        CHECK(is_simple(d));
    }
    BinaryMatroid m = mk4();
    CHECK(contraction(m, {}) == m);
    BinaryMatroid c = contraction(m, {"1"});
    CHECK(c.r() == 2);
    CHECK(c.n() == 5);
    CHECK(restriction(m, m.ground_set()) == m);
}

TEST_CASE("rank_of and corank_of") {
    BinaryMatroid f = fano();
    CHECK(rank_of(f, {"1", "2", "3"}) == 3);
    CHECK(corank_of(f, {}) == 0);
    CHECK(rank_of(f, {}) == 0);
    CHECK_THROWS_AS(rank_of(f, {"nope"}), UnknownLabel);
    // corank_of(M, X) = rank_of(dual(M), X)
    BinaryMatroid fd = dual(f);
    std::mt19937_64 rng(7);
    ElementSet ground = f.ground_set();
    for (int t = 0; t < 30; ++t) {
        ElementSet s;
        for (const auto& e : ground)
            if (rng() & 1) s.push_back(e);
        CHECK(corank_of(f, s) == rank_of(fd, s));
    }
}

TEST_CASE("closure and coclosure") {
    BinaryMatroid f = fano();
    CHECK(closure(f, f.ground_set()) == f.ground_set());
    // Two points of a line close to the 3-point line.
    for (const auto& e1 : f.ground_set())
        for (const auto& e2 : f.ground_set()) {
            if (e1 >= e2) continue;
            ElementSet cl = closure(f, {e1, e2});
            CHECK(cl.size() == 3);
            CHECK(rank_of(f, cl) == 2);
        }
    BinaryMatroid m = mk4();
    CHECK(coclosure(m, {}) == ElementSet{});  // no coloops in M(K4)
}

TEST_CASE("parallel and series classes") {
    BitMatrix a(2, 3);
    a.set(0, 0, true);
    a.set(0, 1, true);
    a.set(1, 2, true);
    BinaryMatroid m = BinaryMatroid::from_matrix(a, {"1", "2", "3"});
    Partition p = parallel_classes(m);
    CHECK(p.classes == std::vector<ElementSet>{{"1", "2"}, {"3"}});
    CHECK_FALSE(is_simple(m));
    SimplifyResult s = simplify(m);
    CHECK(s.matroid.n() == 2);
    CHECK(s.matroid.r() == 2);
    CHECK(s.representative.at("2") == "1");

    CHECK(is_simple(fano()));
    CHECK(parallel_classes(fano()).classes.size() == 7);

    // K4 with edge 12 subdivided by a degree-2 vertex 5: the two half-edges
    // {15, 52} form the unique non-trivial series class.
    BitMatrix inc(5, 7);
    int ed[7][2] = {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int e = 0; e < 7; ++e) {
        inc.set(ed[e][0], e, true);
        inc.set(ed[e][1], e, true);
    }
    BinaryMatroid sub = BinaryMatroid::from_columns(inc, numbered(7));
    Partition sc = series_classes(sub);
    int pairs = 0, singletons = 0;
    for (const auto& cls : sc.classes) {
        if (cls.size() == 2) ++pairs;
        if (cls.size() == 1) ++singletons;
    }
    CHECK(pairs == 1);
    CHECK(singletons == 5);
}

TEST_CASE("cosimplify contracts series classes") {
    // Subdivided K4 cosimplifies back to M(K4): rank 3 on 6 elements.
    BitMatrix inc(5, 7);
    int ed[7][2] = {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int e = 0; e < 7; ++e) {
        inc.set(ed[e][0], e, true);
        inc.set(ed[e][1], e, true);
    }
    BinaryMatroid sub = BinaryMatroid::from_columns(inc, numbered(7));
    SimplifyResult co = cosimplify(sub);
    CHECK(co.matroid.r() == 3);
    CHECK(co.matroid.n() == 6);
    CHECK(is_cosimple(co.matroid));
    CHECK(is_3connected(co.matroid));
    CHECK(co.representative.at("2") == "1");  // {15,52} keeps the smaller label

    BinaryMatroid m = mk4();
    CHECK(is_cosimple(m));
    SimplifyResult id = cosimplify(m);
    CHECK(id.matroid == m);
}

TEST_CASE("is_connected agrees with the common-circuit definition") {
    CHECK(is_connected(fano()));
    CHECK(is_connected(mk4()));

    BitMatrix i2(2, 2);
    i2.set(0, 0, true);
    i2.set(1, 1, true);
    BinaryMatroid u22 = BinaryMatroid::from_matrix(i2, {"a", "b"});
    CHECK_FALSE(is_connected(u22));

    std::mt19937_64 rng(2024);
    int checked = 0;
    for (int t = 0; t < 200; ++t) {
        int rows = 1 + static_cast<int>(rng() % 4);
        int cols = 1 + static_cast<int>(rng() % 9);
        BitMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() & 1) a.set(i, j, true);
        BinaryMatroid m = BinaryMatroid::from_columns(a, numbered(cols));
        CHECK(is_connected(m) == oracle::brute_is_connected(m));
        ++checked;
    }
    CHECK(checked == 200);
}

TEST_CASE("is_3connected on fixtures") {
    CHECK(is_3connected(fano()));
    CHECK(is_3connected(mk4()));

    // U_{2,3}: fewer than 4 elements, vacuously 3-connected.
    BitMatrix u23m(2, 3);
    u23m.set(0, 0, true);
    u23m.set(1, 1, true);
    u23m.set(0, 2, true);
    u23m.set(1, 2, true);
    CHECK(is_3connected(BinaryMatroid::from_matrix(u23m, numbered(3))));

    // Parallel connection of two triangles = two triangles sharing an edge;
    // connected, but the two private edge pairs give a 2-separation.
    BitMatrix inc(4, 5);
    int ed[5][2] = {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}};
    for (int e = 0; e < 5; ++e) {
        inc.set(ed[e][0], e, true);
        inc.set(ed[e][1], e, true);
    }
    BinaryMatroid two_tri = BinaryMatroid::from_columns(inc, numbered(5));
    CHECK(is_connected(two_tri));
    CHECK_FALSE(is_3connected(two_tri));

    // Two triangles sharing only a vertex form a direct sum: disconnected.
    BitMatrix inc2(5, 6);
    int ed2[6][2] = {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}};
    for (int e = 0; e < 6; ++e) {
        inc2.set(ed2[e][0], e, true);
        inc2.set(ed2[e][1], e, true);
    }
    CHECK_FALSE(is_connected(BinaryMatroid::from_columns(inc2, numbered(6))));
}

TEST_CASE("deletion and contraction on disjoint sets commute") {
    BinaryMatroid f = fano();
    BinaryMatroid a = contraction(deletion(f, {"2"}), {"5"});
    BinaryMatroid b = deletion(contraction(f, {"5"}), {"2"});
    CHECK(sorted_unique(a.labels()) == sorted_unique(b.labels()));
    // Same rank function on all subsets.
    ElementSet ground = a.ground_set();
    for (int mask = 0; mask < (1 << ground.size()); ++mask) {
        ElementSet s;
        for (size_t i = 0; i < ground.size(); ++i)
            if (mask >> i & 1) s.push_back(ground[i]);
        CHECK(rank_of(a, s) == rank_of(b, s));
    }
}
