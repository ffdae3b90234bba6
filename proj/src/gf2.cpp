#include "nsco/gf2.hpp"

#include <sstream>

namespace nsco {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || rows > kMaxRows || cols < 0 || cols > kMaxCols)
        throw SizeLimit("BitMatrix supports at most 64 rows and 256 columns");
    wpr_ = cols == 0 ? 1 : (cols + 63) / 64;
    data_.assign(static_cast<size_t>(rows_) * wpr_, 0);
}

void BitMatrix::xor_row(int dst, int src) {
    uint64_t* d = row(dst);
    const uint64_t* s = row(src);
    for (int k = 0; k < wpr_; ++k) d[k] ^= s[k];
}

void BitMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    uint64_t* ra = row(a);
    uint64_t* rb = row(b);
    for (int k = 0; k < wpr_; ++k) std::swap(ra[k], rb[k]);
}

bool BitMatrix::row_is_zero(int r) const {
    const uint64_t* w = row(r);
    for (int k = 0; k < wpr_; ++k)
        if (w[k]) return false;
    return true;
}

int BitMatrix::row_weight(int r) const { return popcount_words(row(r), wpr_); }

uint64_t BitMatrix::column(int c) const {
    if (rows_ > 64) throw SizeLimit("column() requires at most 64 rows");
    uint64_t v = 0;
    for (int i = 0; i < rows_; ++i)
        if (get(i, c)) v |= uint64_t{1} << i;
    return v;
}

std::string BitMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) os << (get(i, j) ? '1' : '0');
        os << '\n';
    }
    return os.str();
}

int rank(const BitMatrix& a) {
    BitMatrix m = a;
    int rk = 0;
    for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
        int pivot = -1;
        for (int i = rk; i < m.rows(); ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        m.swap_rows(rk, pivot);
        for (int i = 0; i < m.rows(); ++i)
            if (i != rk && m.get(i, c)) m.xor_row(i, rk);
        ++rk;
    }
    return rk;
}

namespace {

StandardForm standardize_impl(const BitMatrix& a, bool drop_zero_rows) {
    BitMatrix m = a;
    int rk = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols() && rk < m.rows(); ++c) {
        int pivot = -1;
        for (int i = rk; i < m.rows(); ++i)
            if (m.get(i, c)) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        m.swap_rows(rk, pivot);
        for (int i = 0; i < m.rows(); ++i)
            if (i != rk && m.get(i, c)) m.xor_row(i, rk);
        pivots.push_back(c);
        ++rk;
    }
    if (!drop_zero_rows && rk < m.rows())
        throw RankDeficient("standardize: matrix does not have full row rank");

    std::vector<int> perm = pivots;
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : pivots) is_pivot[c] = true;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) perm.push_back(c);

    BitMatrix b(rk, m.cols());
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.get(i, perm[j])) b.set(i, j, true);
    return StandardForm{std::move(b), std::move(perm)};
}

}  // namespace

StandardForm standardize(const BitMatrix& a) { return standardize_impl(a, false); }

StandardForm standardize_dropping_zero_rows(const BitMatrix& a) {
    return standardize_impl(a, true);
}

BitMatrix submatrix_columns(const BitMatrix& a, const std::vector<int>& s) {
    for (int c : s)
        if (c < 0 || c >= a.cols()) throw IndexOutOfRange("submatrix_columns: bad index");
    BitMatrix b(a.rows(), static_cast<int>(s.size()));
    for (int j = 0; j < static_cast<int>(s.size()); ++j)
        for (int i = 0; i < a.rows(); ++i)
            if (a.get(i, s[j])) b.set(i, j, true);
    return b;
}

int rank_of_values(const std::vector<uint64_t>& cols) {
    uint64_t piv[64] = {0};
    int rk = 0;
    for (uint64_t v : cols) {
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
    return rk;
}

}  // namespace nsco
