#pragma once

// Constructors for the named matroids and graph families used throughout,
// plus the complement-in-PG operator and the sum/connection helpers needed
// to describe the rank-4 classification.

#include <string>
#include <utility>
#include <vector>

#include "nsco/matroid.hpp"

namespace nsco {

class UnknownName : public MatroidError {
public:
    using MatroidError::MatroidError;
};
class BadParams : public MatroidError {
public:
    using MatroidError::MatroidError;
};
class NotSimple : public MatroidError {
public:
    using MatroidError::MatroidError;
};
class RankTooLarge : public MatroidError {
public:
    using MatroidError::MatroidError;
};

struct SimpleGraph {
    std::vector<std::string> vertex_names;
    std::vector<std::pair<int, int>> edges;  // indices into vertex_names

    int vertex_count() const { return static_cast<int>(vertex_names.size()); }
    std::string edge_label(int e) const {
        return vertex_names[edges[e].first] + "-" + vertex_names[edges[e].second];
    }
};

// Cycle matroid of G (vertex-edge incidence matrix mod 2); edge labels are
// "<u>-<v>" in the graph's edge order.
BinaryMatroid graph_matroid(const SimpleGraph& g);
BinaryMatroid bond_matroid(const SimpleGraph& g);

SimpleGraph complete_graph(int k);
SimpleGraph complete_bipartite_graph(int a, int b);
SimpleGraph wheel_graph(int k);  // hub "h", rim "1".."k"
// K_{3,3} plus i edges inside V1 = {u1,u2,u3} and j edges inside V2.
SimpleGraph k33ij_graph(int i, int j);
// K_{3,n} plus the three V1 edges (K_{3,n}''').
SimpleGraph k3n_triple_graph(int n);

BinaryMatroid fano();
BinaryMatroid fano_dual();
BinaryMatroid ag32();
BinaryMatroid spike(int r);          // Z_r, labels a1..ar, b1..br, c
BinaryMatroid s2n(int n);            // S_2n = Z_n \ b_n
BinaryMatroid s8();                  // s2n(4)
BinaryMatroid wheel(int k);          // M(W_k)
BinaryMatroid r10();
BinaryMatroid r12();
BinaryMatroid pg32();                // PG(3,2), 15 points
BinaryMatroid pg32_dual();
BinaryMatroid u(int r, int n);       // uniform; binary cases only
BinaryMatroid k33ij(int i, int j);   // M(K_{3,3}^{(i,j)})
BinaryMatroid k3n_triple(int n);     // M(K_{3,n}''')
BinaryMatroid complete(int k);       // M(K_k)
BinaryMatroid complete_bipartite(int a, int b);

// PG(s,2)\M. Labels of the result are "p<v>" with v the decimal value of the
// point. M must be simple with r(M) <= s+1.
BinaryMatroid pg_complement(const BinaryMatroid& m, int s);

// Ground sets are relabeled "a.<l>" / "b.<l>" to keep them disjoint.
BinaryMatroid direct_sum(const BinaryMatroid& m1, const BinaryMatroid& m2);

// Parallel connection across a basepoint labeled p in both matroids; p must
// be neither a loop nor a coloop. Non-basepoint labels get "a."/"b." prefixes.
BinaryMatroid parallel_connection(const BinaryMatroid& m1, const BinaryMatroid& m2,
                                  const std::string& p);

// Parses "fano", "spike(4)", "k33ij(1,0)", "u(2,3)", ...
BinaryMatroid make_named(const std::string& name);

// The constructor names accepted by make_named, for CLI help.
std::vector<std::string> named_constructors();

}  // namespace nsco
