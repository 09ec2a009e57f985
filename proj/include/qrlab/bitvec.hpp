#ifndef QRLAB_BITVEC_HPP
#define QRLAB_BITVEC_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qrlab {

// Bit vector packed into 64-bit limbs, bit i of the vector at limb i/64.
// Bits at positions >= size() are kept zero in the top limb.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : len_(length), w_((length + 63) / 64, 0) {}

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v)
            w_[i >> 6] |= uint64_t(1) << (i & 63);
        else
            w_[i >> 6] &= ~(uint64_t(1) << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t s = 0;
        for (uint64_t w : w_) s += std::popcount(w);
        return s;
    }
    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    BitVector& operator&=(const BitVector& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
        return *this;
    }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    bool operator==(const BitVector& o) const = default;

    // Numeric order with coordinate i weighted 2^i; used as the canonical
    // sort order for codeword lists.
    std::strong_ordering operator<=>(const BitVector& o) const {
        for (std::size_t i = w_.size(); i-- > 0;) {
            if (w_[i] != o.w_[i]) return w_[i] <=> o.w_[i];
        }
        return len_ <=> o.len_;
    }

    std::vector<int> support() const;

    const std::vector<uint64_t>& limbs() const { return w_; }
    std::vector<uint64_t>& limbs() { return w_; }

   private:
    std::size_t len_ = 0;
    std::vector<uint64_t> w_;
};

}  // namespace qrlab

#endif
