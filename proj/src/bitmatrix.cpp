#include "qrlab/bitmatrix.hpp"

#include <stdexcept>

namespace qrlab {

BitMatrix::BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
    cols_ = rows_.empty() ? 0 : rows_[0].size();
    for (const auto& r : rows_)
        if (r.size() != cols_) throw std::invalid_argument("ragged rows");
}

void BitMatrix::append_row(BitVector v) {
    if (rows_.empty() && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    rows_.push_back(std::move(v));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (int c : rows_[r].support()) t.set(std::size_t(c), r);
    return t;
}

RrefResult rref(const BitMatrix& m) {
    RrefResult res{m, {}};
    std::size_t nrows = res.mat.row_count(), ncols = res.mat.col_count();
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t piv = r;
        while (piv < nrows && !res.mat.get(piv, c)) ++piv;
        if (piv == nrows) continue;
        std::swap(res.mat.row(r), res.mat.row(piv));
        for (std::size_t i = 0; i < nrows; ++i)
            if (i != r && res.mat.get(i, c)) res.mat.row(i) ^= res.mat.row(r);
        res.pivots.push_back(int(c));
        ++r;
    }
    return res;
}

std::size_t rank(const BitMatrix& m) { return rref(m).pivots.size(); }

}  // namespace qrlab
