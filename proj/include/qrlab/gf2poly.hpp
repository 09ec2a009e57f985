#ifndef QRLAB_GF2POLY_HPP
#define QRLAB_GF2POLY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "qrlab/bitvec.hpp"

namespace qrlab {

// Univariate polynomial over GF(2), coefficient of x^i stored at bit i.
// Normalized: no trailing zero limbs, so the zero polynomial has no limbs.
class Gf2Poly {
   public:
    Gf2Poly() = default;

    // Coefficient bits as an integer, bit i = coefficient of x^i.
    static Gf2Poly from_bits(uint64_t bits);
    // Polynomial as a sum of the listed monomial exponents.
    static Gf2Poly from_exponents(std::initializer_list<int> exps);
    static Gf2Poly x_power(int e);
    static Gf2Poly one() { return from_bits(1); }

    // -1 for the zero polynomial.
    int degree() const;
    bool is_zero() const { return w_.empty(); }
    bool coeff(int i) const;

    Gf2Poly& operator^=(const Gf2Poly& o);
    friend Gf2Poly operator^(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }
    friend Gf2Poly operator+(Gf2Poly a, const Gf2Poly& b) { return a ^= b; }

    friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
    friend Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& m);
    friend Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& m);

    bool operator==(const Gf2Poly& o) const = default;

    // Numeric order on the coefficient bit string; the lexicographic order
    // used by find_irreducible and element_of_order.
    bool operator<(const Gf2Poly& o) const;

    Gf2Poly shifted(int e) const;  // multiply by x^e

    // Coefficients as a length-n bit vector; requires degree < n.
    BitVector to_bitvector(std::size_t n) const;

    std::string to_string() const;  // "x^3 + x + 1"

    const std::vector<uint64_t>& limbs() const { return w_; }

   private:
    std::vector<uint64_t> w_;
    void trim();
};

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b);
Gf2Poly poly_mul_mod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& modulus);
// x^(2^e) mod f by repeated squaring.
Gf2Poly x_pow_pow2_mod(int e, const Gf2Poly& f);

bool is_irreducible(const Gf2Poly& f);
// Smallest irreducible of degree m in the numeric coefficient order.
Gf2Poly find_irreducible(int m);

}  // namespace qrlab

#endif
