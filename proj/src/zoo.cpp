#include "nsco/zoo.hpp"

#include <algorithm>
#include <set>

namespace nsco {

namespace {

std::vector<std::string> numbered(int n) {
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i) out.push_back(std::to_string(i));
    return out;
}

void check_graph(const SimpleGraph& g) {
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : g.edges) {
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
            throw BadParams("graph edge endpoint out of range");
        if (a == b) throw BadParams("loops are not allowed");
        if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
            throw BadParams("repeated edge");
    }
}

}  // namespace

BinaryMatroid graph_matroid(const SimpleGraph& g) {
    check_graph(g);
    const int m = static_cast<int>(g.edges.size());
    BitMatrix inc(g.vertex_count(), m);
    std::vector<std::string> labels;
    for (int e = 0; e < m; ++e) {
        inc.set(g.edges[e].first, e, true);
        inc.set(g.edges[e].second, e, true);
        labels.push_back(g.edge_label(e));
    }
    return BinaryMatroid::from_columns(inc, std::move(labels));
}

BinaryMatroid bond_matroid(const SimpleGraph& g) { return dual(graph_matroid(g)); }

SimpleGraph complete_graph(int k) {
    if (k < 1) throw BadParams("complete graph needs k >= 1");
    SimpleGraph g;
    g.vertex_names = numbered(k);
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) g.edges.push_back({a, b});
    return g;
}

SimpleGraph complete_bipartite_graph(int a, int b) {
    if (a < 1 || b < 1) throw BadParams("complete bipartite graph needs a, b >= 1");
    SimpleGraph g;
    for (int i = 1; i <= a; ++i) g.vertex_names.push_back("u" + std::to_string(i));
    for (int i = 1; i <= b; ++i) g.vertex_names.push_back("w" + std::to_string(i));
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.edges.push_back({i, a + j});
    return g;
}

SimpleGraph wheel_graph(int k) {
    if (k < 3) throw BadParams("wheel needs k >= 3");
    SimpleGraph g;
    g.vertex_names.push_back("h");
    for (int i = 1; i <= k; ++i) g.vertex_names.push_back(std::to_string(i));
    for (int i = 1; i <= k; ++i) g.edges.push_back({0, i});             // spokes
    for (int i = 1; i <= k; ++i) g.edges.push_back({i, i % k + 1});     // rim
    return g;
}

SimpleGraph k33ij_graph(int i, int j) {
    if (j < 0 || i < j || i > 3) throw BadParams("k33ij needs 0 <= j <= i <= 3");
    SimpleGraph g = complete_bipartite_graph(3, 3);
    // Added edges in the fixed order u1u2, u1u3, u2u3 (and likewise for V2).
    const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (int t = 0; t < i; ++t) g.edges.push_back({pairs[t][0], pairs[t][1]});
    for (int t = 0; t < j; ++t) g.edges.push_back({3 + pairs[t][0], 3 + pairs[t][1]});
    return g;
}

SimpleGraph k3n_triple_graph(int n) {
    if (n < 1) throw BadParams("k3n_triple needs n >= 1");
    SimpleGraph g = complete_bipartite_graph(3, n);
    g.edges.push_back({0, 1});
    g.edges.push_back({0, 2});
    g.edges.push_back({1, 2});
    return g;
}

BinaryMatroid fano() {
    BitMatrix a(3, 7);
    const int cols[7] = {0b001, 0b010, 0b100, 0b110, 0b101, 0b011, 0b111};
    for (int c = 0; c < 7; ++c)
        for (int i = 0; i < 3; ++i)
            if (cols[c] >> i & 1) a.set(i, c, true);
    return BinaryMatroid::from_matrix(a, numbered(7));
}

BinaryMatroid fano_dual() { return dual(fano()); }

BinaryMatroid ag32() {
    // Affine points (1, x), x in GF(2)^3.
    BitMatrix a(4, 8);
    for (int x = 0; x < 8; ++x) {
        a.set(0, x, true);
        for (int i = 0; i < 3; ++i)
            if (x >> i & 1) a.set(1 + i, x, true);
    }
    return BinaryMatroid::from_columns(a, numbered(8));
}

BinaryMatroid spike(int r) {
    if (r < 3) throw BadParams("spike needs r >= 3");
    if (r > 31) throw SizeLimit("spike r too large");
    BitMatrix a(r, 2 * r + 1);
    std::vector<std::string> labels;
    for (int i = 0; i < r; ++i) {
        a.set(i, i, true);
        labels.push_back("a" + std::to_string(i + 1));
    }
    for (int j = 0; j < r; ++j) {
        for (int i = 0; i < r; ++i)
            if (i != j) a.set(i, r + j, true);
        labels.push_back("b" + std::to_string(j + 1));
    }
    for (int i = 0; i < r; ++i) a.set(i, 2 * r, true);
    labels.push_back("c");
    return BinaryMatroid::from_standard(std::move(a), std::move(labels));
}

BinaryMatroid s2n(int n) {
    if (n < 3) throw BadParams("s2n needs n >= 3");
    return deletion(spike(n), {"b" + std::to_string(n)});
}

BinaryMatroid s8() { return s2n(4); }

BinaryMatroid wheel(int k) { return graph_matroid(wheel_graph(k)); }

BinaryMatroid r10() {
    BitMatrix a(5, 10);
    const int first_row[5] = {1, 1, 0, 0, 1};
    for (int i = 0; i < 5; ++i) {
        a.set(i, i, true);
        for (int j = 0; j < 5; ++j)
            if (first_row[(j - i + 5) % 5]) a.set(i, 5 + j, true);
    }
    return BinaryMatroid::from_standard(std::move(a), numbered(10));
}

BinaryMatroid r12() {
    // Validated by property tests: regular, 3-connected, self-dual, neither
    // graphic nor cographic.
    const char* d[6] = {"111000", "110100", "100010", "010001", "001011", "000111"};
    BitMatrix a(6, 12);
    for (int i = 0; i < 6; ++i) {
        a.set(i, i, true);
        for (int j = 0; j < 6; ++j)
            if (d[i][j] == '1') a.set(i, 6 + j, true);
    }
    return BinaryMatroid::from_standard(std::move(a), numbered(12));
}

BinaryMatroid pg32() {
    BitMatrix a(4, 15);
    std::vector<int> vals = {1, 2, 4, 8};
    for (int v = 1; v < 16; ++v)
        if (v != 1 && v != 2 && v != 4 && v != 8) vals.push_back(v);
    for (int c = 0; c < 15; ++c)
        for (int i = 0; i < 4; ++i)
            if (vals[c] >> i & 1) a.set(i, c, true);
    return BinaryMatroid::from_standard(std::move(a), numbered(15));
}

BinaryMatroid pg32_dual() { return dual(pg32()); }

BinaryMatroid u(int r, int n) {
    if (r < 0 || n < 0 || r > n) throw BadParams("u(r,n) needs 0 <= r <= n");
    if (n > 64) throw SizeLimit("u(r,n) n too large");
    if (r != 0 && r != 1 && r != n - 1 && r != n)
        throw BadParams("u(r,n) is not binary for 1 < r < n-1");
    BitMatrix a(std::max(r, 0), n);
    if (r == n) {
        for (int i = 0; i < n; ++i) a.set(i, i, true);
    } else if (r == 1) {
        for (int c = 0; c < n; ++c) a.set(0, c, true);
    } else if (r == n - 1 && r > 0) {
        for (int i = 0; i < r; ++i) {
            a.set(i, i, true);
            a.set(i, n - 1, true);
        }
    }
    return BinaryMatroid::from_standard(std::move(a), numbered(n));
}

BinaryMatroid k33ij(int i, int j) { return graph_matroid(k33ij_graph(i, j)); }

BinaryMatroid k3n_triple(int n) { return graph_matroid(k3n_triple_graph(n)); }

BinaryMatroid complete(int k) { return graph_matroid(complete_graph(k)); }

BinaryMatroid complete_bipartite(int a, int b) {
    return graph_matroid(complete_bipartite_graph(a, b));
}

BinaryMatroid pg_complement(const BinaryMatroid& m, int s) {
    if (!is_simple(m)) throw NotSimple("pg_complement requires a simple matroid");
    if (s < 1 || s > 5) throw BadParams("pg_complement supports 1 <= s <= 5");
    if (m.r() > s + 1) throw RankTooLarge("pg_complement: r(M) > s+1");
    std::set<uint64_t> used;
    for (int c = 0; c < m.n(); ++c) used.insert(m.column_value(c));
    const int points = (1 << (s + 1)) - 1;
    std::vector<uint64_t> rest;
    for (int v = 1; v <= points; ++v)
        if (!used.count(static_cast<uint64_t>(v))) rest.push_back(v);
    BitMatrix a(s + 1, static_cast<int>(rest.size()));
    std::vector<std::string> labels;
    for (size_t c = 0; c < rest.size(); ++c) {
        for (int i = 0; i <= s; ++i)
            if (rest[c] >> i & 1) a.set(i, static_cast<int>(c), true);
        labels.push_back("p" + std::to_string(rest[c]));
    }
    return BinaryMatroid::from_columns(a, std::move(labels));
}

namespace {

std::vector<std::string> prefixed(const BinaryMatroid& m, const std::string& pre) {
    std::vector<std::string> out;
    for (int c = 0; c < m.n(); ++c) out.push_back(pre + m.label(c));
    return out;
}

}  // namespace

BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2) {
    const int r1 = m1.r(), r2 = m2.r(), n1 = m1.n(), n2 = m2.n();
    BitMatrix a(r1 + r2, n1 + n2);
    for (int c = 0; c < n1; ++c) {
        uint64_t v = m1.column_value(c);
        for (int i = 0; i < r1; ++i)
            if (v >> i & 1) a.set(i, c, true);
    }
    for (int c = 0; c < n2; ++c) {
        uint64_t v = m2.column_value(c);
        for (int i = 0; i < r2; ++i)
            if (v >> i & 1) a.set(r1 + i, n1 + c, true);
    }
    std::vector<std::string> labels = prefixed(m1, "a.");
    for (auto& l : prefixed(m2, "b.")) labels.push_back(std::move(l));
    return BinaryMatroid::from_columns(a, std::move(labels));
}

BinaryMatroid parallel_connection(const BinaryMatroid& m1, const BinaryMatroid& m2,
                                  const std::string& p) {
    // Re-standardize each side with the basepoint first so it becomes e1,
    // then glue the representations along that shared coordinate.
    auto basepoint_first = [&p](const BinaryMatroid& m) {
        int pc = m.col_of_checked(p);
        if (m.column_value(pc) == 0) throw BadParams("basepoint is a loop");
        std::vector<int> order{pc};
        for (int c = 0; c < m.n(); ++c)
            if (c != pc) order.push_back(c);
        std::vector<std::string> labels;
        for (int c : order) labels.push_back(m.label(c));
        return BinaryMatroid::from_columns(submatrix_columns(m.rep(), order), labels);
    };
    BinaryMatroid s1 = basepoint_first(m1);
    BinaryMatroid s2 = basepoint_first(m2);
    const int r1 = s1.r(), r2 = s2.r(), n1 = s1.n(), n2 = s2.n();
    // Basepoint must not be a coloop: its removal keeps full rank.
    if (rank_of(s1, set_difference(s1.ground_set(), {p})) != r1 ||
        rank_of(s2, set_difference(s2.ground_set(), {p})) != r2)
        throw BadParams("basepoint is a coloop");

    BitMatrix a(r1 + r2 - 1, n1 + n2 - 1);
    std::vector<std::string> labels;
    a.set(0, 0, true);  // the basepoint, e1 in both sides, shared row 0
    labels.push_back(p);
    int col = 1;
    for (int c = 1; c < n1; ++c, ++col) {
        uint64_t v = s1.column_value(c);
        for (int i = 0; i < r1; ++i)
            if (v >> i & 1) a.set(i, col, true);
        labels.push_back("a." + s1.label(c));
    }
    for (int c = 1; c < n2; ++c, ++col) {
        uint64_t v = s2.column_value(c);
        if (v & 1) a.set(0, col, true);
        for (int i = 1; i < r2; ++i)
            if (v >> i & 1) a.set(r1 - 1 + i, col, true);
        labels.push_back("b." + s2.label(c));
    }
    return BinaryMatroid::from_columns(a, std::move(labels));
}

namespace {

std::vector<int> parse_params(const std::string& name, size_t paren) {
    if (name.back() != ')') throw UnknownName("malformed constructor name: " + name);
    std::vector<int> out;
    std::string body = name.substr(paren + 1, name.size() - paren - 2);
    size_t pos = 0;
    while (pos <= body.size()) {
        size_t comma = body.find(',', pos);
        std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                      : comma - pos);
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw BadParams("bad integer parameter in: " + name);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

BinaryMatroid make_named(const std::string& name) {
    size_t paren = name.find('(');
    std::string head = paren == std::string::npos ? name : name.substr(0, paren);
    std::vector<int> ps;
    if (paren != std::string::npos) ps = parse_params(name, paren);
    auto arity = [&](size_t k) {
        if (ps.size() != k) throw BadParams(head + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (head == "fano") { arity(0); return fano(); }
    if (head == "fano_dual") { arity(0); return fano_dual(); }
    if (head == "ag32") { arity(0); return ag32(); }
    if (head == "s8") { arity(0); return s8(); }
    if (head == "r10") { arity(0); return r10(); }
    if (head == "r12") { arity(0); return r12(); }
    if (head == "pg32") { arity(0); return pg32(); }
    if (head == "pg32_dual") { arity(0); return pg32_dual(); }
    if (head == "wheel") { arity(1); return wheel(ps[0]); }
    if (head == "spike") { arity(1); return spike(ps[0]); }
    if (head == "s2n") { arity(1); return s2n(ps[0]); }
    if (head == "k3n_triple") { arity(1); return k3n_triple(ps[0]); }
    if (head == "complete") { arity(1); return complete(ps[0]); }
    if (head == "u") { arity(2); return u(ps[0], ps[1]); }
    if (head == "k33ij") { arity(2); return k33ij(ps[0], ps[1]); }
    if (head == "complete_bipartite") { arity(2); return complete_bipartite(ps[0], ps[1]); }
    throw UnknownName("unknown constructor: " + name);
}

std::vector<std::string> named_constructors() {
    return {"fano", "fano_dual", "ag32", "s8", "r10", "r12", "pg32", "pg32_dual",
            "wheel(k)", "spike(r)", "s2n(n)", "k3n_triple(n)", "complete(k)",
            "u(r,n)", "k33ij(i,j)", "complete_bipartite(a,b)"};
}

}  // namespace nsco
