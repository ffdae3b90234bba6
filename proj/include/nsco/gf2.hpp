#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Bit-packed linear algebra over GF(2). Rows are packed one bit per entry,
// 64 columns per word, row-major. This is the substrate for every matroid
// computation in the library; everything here is a pure function on values.

namespace nsco {

struct Gf2Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct RankDeficient : Gf2Error {
    using Gf2Error::Gf2Error;
};
struct IndexOutOfRange : Gf2Error {
    using Gf2Error::Gf2Error;
};
struct SizeLimit : Gf2Error {
    using Gf2Error::Gf2Error;
};

class BitMatrix {
public:
    static constexpr int kMaxRows = 64;
    static constexpr int kMaxCols = 256;
    static constexpr int kWordsPerRowMax = kMaxCols / 64;

    BitMatrix() = default;
    BitMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return wpr_; }

    bool get(int r, int c) const {
        check(r, c);
        return (data_[static_cast<size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c, bool v) {
        check(r, c);
        uint64_t& w = data_[static_cast<size_t>(r) * wpr_ + c / 64];
        uint64_t m = uint64_t{1} << (c % 64);
        w = v ? (w | m) : (w & ~m);
    }

    const uint64_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * wpr_; }
    uint64_t* row(int r) { return data_.data() + static_cast<size_t>(r) * wpr_; }

    void xor_row(int dst, int src);
    void swap_rows(int a, int b);
    bool row_is_zero(int r) const;
    int row_weight(int r) const;

    // Column c as a bit-vector over rows (row i -> bit i). Requires rows <= 64.
    uint64_t column(int c) const;

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const BitMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw IndexOutOfRange("BitMatrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    int wpr_ = 0;
    std::vector<uint64_t> data_;
};

struct StandardForm {
    BitMatrix matrix;       // [I_r | D]
    std::vector<int> perm;  // perm[new_col] = old column index
};

// Dimension of the row space over GF(2).
int rank(const BitMatrix& a);

// Row-reduce and permute columns into [I_r | D] (greedy leftmost pivot).
// Throws RankDeficient unless a has full row rank.
StandardForm standardize(const BitMatrix& a);

// Like standardize but drops zero rows first, so rank-deficient input is fine.
StandardForm standardize_dropping_zero_rows(const BitMatrix& a);

// Columns of a indexed by s, order preserved.
BitMatrix submatrix_columns(const BitMatrix& a, const std::vector<int>& s);

// Visit all 2^r - 1 nonzero row-space codewords of a (Gray-code coefficient
// order): fn(coeff, codeword_words). codeword has words_per_row() words.
template <typename Fn>
void for_each_codeword(const BitMatrix& a, Fn&& fn) {
    const int r = a.rows();
    if (r <= 0) return;
    if (r > 63) throw SizeLimit("codeword scan limited to 63 rows");
    const int wpr = a.words_per_row();
    std::array<uint64_t, BitMatrix::kWordsPerRowMax> w{};
    uint64_t coeff = 0;
    const uint64_t total = uint64_t{1} << r;
    for (uint64_t g = 1; g < total; ++g) {
        // Gray code: flip the bit that changes between successive codes.
        int bit = __builtin_ctzll(g);
        coeff ^= uint64_t{1} << bit;
        const uint64_t* src = a.row(bit);
        for (int k = 0; k < wpr; ++k) w[k] ^= src[k];
        fn(coeff, w.data());
    }
}

// Rank of a set of column vectors given as packed bit-values (row i -> bit i).
int rank_of_values(const std::vector<uint64_t>& cols);

inline int popcount_words(const uint64_t* w, int n) {
    int c = 0;
    for (int i = 0; i < n; ++i) c += __builtin_popcountll(w[i]);
    return c;
}

}  // namespace nsco
