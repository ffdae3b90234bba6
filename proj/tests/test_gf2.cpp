#include "doctest.h"
#include "nsco/gf2.hpp"

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

BitMatrix identity(int r) {
    BitMatrix m(r, r);
    for (int i = 0; i < r; ++i) m.set(i, i, true);
    return m;
}

BitMatrix fano() {
    return from_rows(3, 7, {"1000111", "0101011", "0011101"});
}

BitMatrix transpose(const BitMatrix& a) {
    BitMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) t.set(j, i, true);
    return t;
}

// Independent oracle: plain row reduction over a bool matrix.
int rank_oracle(const BitMatrix& a) {
    std::vector<std::vector<bool>> m(a.rows(), std::vector<bool>(a.cols()));
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m[i][j] = a.get(i, j);
    int rk = 0;
    for (int c = 0; c < a.cols() && rk < a.rows(); ++c) {
        int p = -1;
        for (int i = rk; i < a.rows(); ++i)
            if (m[i][c]) { p = i; break; }
        if (p < 0) continue;
        std::swap(m[rk], m[p]);
        for (int i = 0; i < a.rows(); ++i)
            if (i != rk && m[i][c])
                for (int j = 0; j < a.cols(); ++j) m[i][j] = m[i][j] ^ m[rk][j];
        ++rk;
    }
    return rk;
}

std::set<uint64_t> row_space(const BitMatrix& a) {
    std::set<uint64_t> out;
    for_each_codeword(a, [&](uint64_t, const uint64_t* w) { out.insert(w[0]); });
    return out;
}

}  // namespace

TEST_CASE("rank basics") {
    CHECK(rank(identity(3)) == 3);
    CHECK(rank(fano()) == 3);
    CHECK(rank(BitMatrix(4, 5)) == 0);
}

TEST_CASE("rank equals rank of transpose on random matrices") {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 50; ++t) {
        int rows = 1 + static_cast<int>(rng() % 10);
        int cols = 1 + static_cast<int>(rng() % 14);
        BitMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() & 1) a.set(i, j, true);
        CHECK(rank(a) == rank(transpose(a)));
        CHECK(rank(a) == rank_oracle(a));
    }
}

TEST_CASE("standardize identity-prefixed matrix is the identity map") {
    BitMatrix a = from_rows(2, 3, {"101", "011"});
    StandardForm sf = standardize(a);
    CHECK(sf.matrix == a);
    CHECK(sf.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("standardize columns (1,1),(1,0),(0,1)") {
    BitMatrix a = from_rows(2, 3, {"110", "101"});
    StandardForm sf = standardize(a);
    // Expected from the row-reduction oracle: pivots at columns 0 and 1,
    // remaining column reduces to (1,1)^T.
    CHECK(sf.matrix == from_rows(2, 3, {"101", "011"}));
    CHECK(sf.perm == std::vector<int>{0, 1, 2});
}

TEST_CASE("standardize rejects rank-deficient input") {
    BitMatrix a = from_rows(2, 2, {"11", "11"});
    CHECK_THROWS_AS(standardize(a), RankDeficient);
}

TEST_CASE("standardize is idempotent and preserves the row space") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 50; ++t) {
        int rows = 1 + static_cast<int>(rng() % 6);
        int cols = rows + static_cast<int>(rng() % 8);
        BitMatrix a(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (rng() & 1) a.set(i, j, true);
        if (rank(a) != rows) continue;
        StandardForm sf = standardize(a);
        StandardForm sf2 = standardize(sf.matrix);
        CHECK(sf2.matrix == sf.matrix);
        for (size_t i = 0; i < sf2.perm.size(); ++i) CHECK(sf2.perm[i] == static_cast<int>(i));
        // Row space of the permuted A equals the row space of B.
        std::vector<int> inv(sf.perm.size());
        BitMatrix ap(rows, cols);
        for (int j = 0; j < cols; ++j)
            for (int i = 0; i < rows; ++i)
                if (a.get(i, sf.perm[j])) ap.set(i, j, true);
        CHECK(row_space(ap) == row_space(sf.matrix));
    }
}

TEST_CASE("row_space_codewords counts and weights") {
    std::set<uint64_t> s2 = row_space(identity(2));
    CHECK(s2 == std::set<uint64_t>{0b01, 0b10, 0b11});

    int count = 0;
    std::set<uint64_t> distinct;
    std::set<uint64_t> coeffs;
    for_each_codeword(fano(), [&](uint64_t coeff, const uint64_t* w) {
        ++count;
        distinct.insert(w[0]);
        coeffs.insert(coeff);
        CHECK(popcount_words(w, 1) == 4);  // complements of PG(2,2) lines
    });
    CHECK(count == 7);
    CHECK(distinct.size() == 7);  // injective coefficient -> codeword map
    CHECK(coeffs.size() == 7);
}

TEST_CASE("submatrix_columns") {
    BitMatrix f = fano();
    std::vector<int> all{0, 1, 2, 3, 4, 5, 6};
    CHECK(submatrix_columns(f, all) == f);
    CHECK(submatrix_columns(f, {0, 1, 2}) == identity(3));
    BitMatrix empty = submatrix_columns(f, {});
    CHECK(empty.rows() == 3);
    CHECK(empty.cols() == 0);
    CHECK_THROWS_AS(submatrix_columns(f, {7}), IndexOutOfRange);
}
