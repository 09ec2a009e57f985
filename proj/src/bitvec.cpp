#include "qrlab/bitvec.hpp"

namespace qrlab {

std::vector<int> BitVector::support() const {
    std::vector<int> s;
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
        uint64_t w = w_[wi];
        while (w) {
            s.push_back(int(wi * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return s;
}

}  // namespace qrlab
