#ifndef QRLAB_BITMATRIX_HPP
#define QRLAB_BITMATRIX_HPP

#include <vector>

#include "qrlab/bitvec.hpp"

namespace qrlab {

// Dense GF(2) matrix, rows stored as BitVectors of identical length.
class BitMatrix {
   public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::vector<BitVector> rows);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }
    const std::vector<BitVector>& rows() const { return rows_; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

    void append_row(BitVector v);

    BitMatrix transposed() const;

    bool operator==(const BitMatrix& o) const = default;

   private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

struct RrefResult {
    BitMatrix mat;
    std::vector<int> pivots;  // pivot column per nonzero row, ascending
};

// Reduced row echelon form over GF(2); zero rows are kept at the bottom.
RrefResult rref(const BitMatrix& m);

std::size_t rank(const BitMatrix& m);

}  // namespace qrlab

#endif
