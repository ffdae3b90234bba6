#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsco/gf2.hpp"

// BinaryMatroid and its structural operations: duality, minors, closure
// operators, (co)simplification, connectivity. A matroid is an immutable
// standard-form matrix [I_r | D] plus one label per column.

namespace nsco {

struct MatroidError : Gf2Error {
    using Gf2Error::Gf2Error;
};
struct UnknownLabel : MatroidError {
    using MatroidError::MatroidError;
};
struct DuplicateLabel : MatroidError {
    using MatroidError::MatroidError;
};

using ElementSet = std::vector<std::string>;  // kept sorted & unique by ops

class BinaryMatroid {
public:
    BinaryMatroid() = default;

    // Standardizes a (tracking the label permutation). Throws RankDeficient
    // on rank-deficient input and DuplicateLabel on repeated labels.
    static BinaryMatroid from_matrix(const BitMatrix& a, std::vector<std::string> labels);

    // Trusted constructor for a matrix already in standard form.
    static BinaryMatroid from_standard(BitMatrix std_form, std::vector<std::string> labels);

    // Row-reduces, drops zero rows (rank may be anything), then standardizes.
    static BinaryMatroid from_columns(const BitMatrix& a, std::vector<std::string> labels);

    int r() const { return rep_.rows(); }
    int n() const { return rep_.cols(); }
    const BitMatrix& rep() const { return rep_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int col) const { return labels_[col]; }

    int col_of(const std::string& label) const;            // -1 if absent
    int col_of_checked(const std::string& label) const;    // throws UnknownLabel
    std::vector<int> cols_of(const ElementSet& s) const;   // throws UnknownLabel
    uint64_t column_value(int col) const { return rep_.column(col); }

    ElementSet ground_set() const;  // sorted labels

    bool operator==(const BinaryMatroid& o) const {
        return rep_ == o.rep_ && labels_ == o.labels_;
    }

private:
    BitMatrix rep_;
    std::vector<std::string> labels_;
};

ElementSet sorted_unique(ElementSet s);
ElementSet set_difference(const ElementSet& a, const ElementSet& b);

BinaryMatroid dual(const BinaryMatroid& m);
BinaryMatroid deletion(const BinaryMatroid& m, const ElementSet& s);
BinaryMatroid contraction(const BinaryMatroid& m, const ElementSet& s);
BinaryMatroid restriction(const BinaryMatroid& m, const ElementSet& s);

int rank_of(const BinaryMatroid& m, const ElementSet& s);
int corank_of(const BinaryMatroid& m, const ElementSet& s);

ElementSet closure(const BinaryMatroid& m, const ElementSet& s);
ElementSet coclosure(const BinaryMatroid& m, const ElementSet& s);

struct Partition {
    std::vector<ElementSet> classes;  // nonzero columns grouped by value
    ElementSet loops;                 // reported separately
};

Partition parallel_classes(const BinaryMatroid& m);
Partition series_classes(const BinaryMatroid& m);
bool is_simple(const BinaryMatroid& m);
bool is_cosimple(const BinaryMatroid& m);

struct SimplifyResult {
    BinaryMatroid matroid;
    std::map<std::string, std::string> representative;  // element -> kept label
    ElementSet removed;                                 // loops resp. coloops
};

SimplifyResult simplify(const BinaryMatroid& m);
SimplifyResult cosimplify(const BinaryMatroid& m);

bool is_connected(const BinaryMatroid& m);

// Simple, cosimple, connected and free of 2-separations. Exhaustive subset
// scan with an incremental rank table; guarded at n <= 24.
bool is_3connected(const BinaryMatroid& m);

}  // namespace nsco
