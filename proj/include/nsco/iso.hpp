#pragma once

// Isomorphism testing via canonical forms, per-element invariant signatures,
// and restriction embedding (the workhorse of minor search).

#include <string>
#include <utility>
#include <vector>

#include "nsco/matroid.hpp"

namespace nsco {

// Per-element profile: sorted (cocircuit size, membership count) pairs over
// all cocircuits of size <= kSignatureCap, plus a global part.
inline constexpr int kSignatureCap = 6;

struct Signature {
    int r = 0;
    int n = 0;
    std::vector<std::pair<int, int>> size_distribution;            // (size, count)
    std::vector<std::vector<std::pair<int, int>>> profiles;        // by column
};

bool operator==(const Signature& a, const Signature& b);

Signature invariant_signature(const BinaryMatroid& m);

struct CanonicalKey {
    std::vector<uint8_t> bytes;

    std::string hex() const;
    friend bool operator==(const CanonicalKey& a, const CanonicalKey& b) {
        return a.bytes == b.bytes;
    }
    friend bool operator<(const CanonicalKey& a, const CanonicalKey& b) {
        return a.bytes < b.bytes;
    }
};

// Lexicographically minimal sorted column-value multiset over all ordered
// bases (coordinate choices), serialized with an (r, n) header. Equal keys
// characterize isomorphism. Requires n <= 64.
CanonicalKey canonical_key(const BinaryMatroid& m);

// Reconstructs a representative matroid from a key, with labels "1".."n".
BinaryMatroid matroid_of_key(const CanonicalKey& key);

// Column permutations of M induced by the ordered bases that attain the
// canonical form. Every returned permutation is an automorphism; used by the
// extension search for orbit pruning, not part of the public report surface.
std::vector<std::vector<int>> automorphisms(const BinaryMatroid& m);

bool are_isomorphic(const BinaryMatroid& m1, const BinaryMatroid& m2);

// True iff some subset S of E(M) has restriction(M, S) isomorphic to N.
bool restriction_embeds(const BinaryMatroid& n, const BinaryMatroid& m);

}  // namespace nsco
