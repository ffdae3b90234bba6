#include "doctest.h"
#include "nsco/nsc.hpp"
#include "nsco/zoo.hpp"

#include <set>

using namespace nsco;

TEST_CASE("fixed fixtures have the advertised rank and size") {
    struct Row {
        BinaryMatroid m;
        int r, n;
    };
    std::vector<Row> rows;
    rows.push_back({fano(), 3, 7});
    rows.push_back({fano_dual(), 4, 7});
    rows.push_back({ag32(), 4, 8});
    rows.push_back({s8(), 4, 8});
    rows.push_back({spike(4), 4, 9});
    rows.push_back({r10(), 5, 10});
    rows.push_back({r12(), 6, 12});
    rows.push_back({pg32(), 4, 15});
    rows.push_back({pg32_dual(), 11, 15});
    rows.push_back({wheel(4), 4, 8});
    rows.push_back({k33ij(3, 0), 5, 12});
    rows.push_back({k3n_triple(3), 5, 12});
    rows.push_back({complete(5), 4, 10});
    rows.push_back({complete_bipartite(3, 3), 5, 9});
    for (const auto& row : rows) {
        CHECK(row.m.r() == row.r);
        CHECK(row.m.n() == row.n);
    }
}

TEST_CASE("three-connected fixtures") {
    for (const BinaryMatroid& m :
         {fano(), fano_dual(), ag32(), s8(), spike(4), r10(), r12(), wheel(4), wheel(5),
          complete(5), graph_matroid(complete_bipartite_graph(3, 3))})
        CHECK(is_3connected(m));
}

TEST_CASE("spike structure") {
    BinaryMatroid z4 = spike(4);
    CHECK(z4.ground_set() ==
          ElementSet{"a1", "a2", "a3", "a4", "b1", "b2", "b3", "b4", "c"});
    // Legs {a_i, b_i, c} are triangles: rank 2.
    for (int i = 1; i <= 4; ++i) {
        std::string s = std::to_string(i);
        CHECK(rank_of(z4, {"a" + s, "b" + s, "c"}) == 2);
    }
    BinaryMatroid s = s2n(4);
    CHECK(s.n() == 8);
    CHECK(s.col_of("b4") == -1);
    CHECK(s.col_of("a4") >= 0);
}

TEST_CASE("graph matroids") {
    CHECK(graph_matroid(complete_graph(4)).r() == 3);
    CHECK(bond_matroid(k3n_triple_graph(3)).r() == 7);
    CHECK(bond_matroid(k3n_triple_graph(3)).n() == 12);

    SimpleGraph tri = complete_graph(3);
    BinaryMatroid t = graph_matroid(tri);
    CHECK(t.r() == 2);
    CHECK(t.n() == 3);
    CHECK(cocircuits(t).size() == 3);  // U_{2,3}

    SimpleGraph bad = complete_graph(3);
    bad.edges.push_back({0, 1});
    CHECK_THROWS_AS(graph_matroid(bad), BadParams);
}

TEST_CASE("pg32 is the full projective geometry") {
    BinaryMatroid p = pg32();
    CHECK(is_simple(p));
    std::set<uint64_t> vals;
    for (int c = 0; c < 15; ++c) vals.insert(p.column_value(c));
    CHECK(vals.size() == 15);
    CHECK(*vals.begin() == 1);
    CHECK(*vals.rbegin() == 15);
}

TEST_CASE("uniform matroids") {
    BinaryMatroid u23 = u(2, 3);
    CHECK(u23.r() == 2);
    CHECK(cocircuits(u23).size() == 3);
    CHECK(u(4, 4).r() == 4);
    CHECK(u(1, 5).r() == 1);
    CHECK(u(0, 2).r() == 0);
    CHECK(u(3, 4).n() == 4);
    CHECK_THROWS_AS(u(2, 5), BadParams);
    CHECK_THROWS_AS(u(3, 2), BadParams);
}

TEST_CASE("pg_complement") {
    BinaryMatroid a = pg_complement(fano(), 3);
    CHECK(a.r() == 4);
    CHECK(a.n() == 8);
    // AG(3,2) has no 3-point line: every pair is closed.
    for (const auto& e1 : a.ground_set())
        for (const auto& e2 : a.ground_set()) {
            if (e1 >= e2) continue;
            CHECK(closure(a, {e1, e2}).size() == 2);
        }
    CHECK(pg_complement(u(4, 5), 3).n() == 10);   // M(K5)
    CHECK(pg_complement(complete(4), 3).n() == 9);  // Z4

    BitMatrix two(1, 2);
    two.set(0, 0, true);
    two.set(0, 1, true);
    CHECK_THROWS_AS(pg_complement(BinaryMatroid::from_matrix(two, {"x", "y"}), 3), NotSimple);
    CHECK_THROWS_AS(pg_complement(pg32(), 2), RankTooLarge);
}

TEST_CASE("direct sum and parallel connection") {
    BinaryMatroid ds = direct_sum(u(2, 3), u(2, 3));
    CHECK(ds.r() == 4);
    CHECK(ds.n() == 6);
    CHECK_FALSE(is_connected(ds));

    // P(U_{2,3}, U_{2,3}) = two triangles glued on an edge.
    BinaryMatroid p = parallel_connection(u(2, 3), u(2, 3), "1");
    CHECK(p.r() == 3);
    CHECK(p.n() == 5);
    CHECK(is_connected(p));
    CHECK_FALSE(is_3connected(p));

    BinaryMatroid p2 = parallel_connection(u(2, 3), u(3, 4), "1");
    CHECK(p2.r() == 4);
    CHECK(p2.n() == 6);

    CHECK_THROWS_AS(parallel_connection(u(2, 3), u(2, 2), "1"), BadParams);  // coloop
    CHECK_THROWS_AS(parallel_connection(u(2, 3), u(2, 3), "9"), UnknownLabel);
}

TEST_CASE("R10 basics") {
    BinaryMatroid m = r10();
    NscReport rep = report(m);
    CHECK(rep.Y == m.ground_set());  // Y(R10) = E
    // Every element of R10 lies on plenty of 4-element cocircuits.
    for (const auto& cc : cocircuits(m)) CHECK((cc.support.size() == 4 || cc.support.size() == 6));
}

TEST_CASE("make_named dispatch") {
    CHECK(make_named("fano").n() == 7);
    CHECK(make_named("spike(5)").n() == 11);
    CHECK(make_named("u(2,3)").n() == 3);
    CHECK(make_named("k33ij(1,1)").n() == 11);
    CHECK(make_named("complete_bipartite(3,4)").n() == 12);
    CHECK_THROWS_AS(make_named("nope"), UnknownName);
    CHECK_THROWS_AS(make_named("spike(2)"), BadParams);
    CHECK_THROWS_AS(make_named("spike(1,2)"), BadParams);
    CHECK_THROWS_AS(make_named("spike(x)"), BadParams);
    CHECK(!named_constructors().empty());
}
