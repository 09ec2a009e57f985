#ifndef QRLAB_GF2FIELD_HPP
#define QRLAB_GF2FIELD_HPP

#include <cstdint>

#include "qrlab/gf2poly.hpp"

namespace qrlab {

class FieldElement;

// GF(2^m) as GF(2)[x] modulo a fixed irreducible polynomial of degree m.
class FieldContext {
   public:
    // Uses find_irreducible(m) as the modulus.
    explicit FieldContext(int m);
    // Custom modulus; must be irreducible of degree m.
    FieldContext(int m, Gf2Poly modulus);

    int degree() const { return m_; }
    const Gf2Poly& modulus() const { return mod_; }
    uint64_t group_order() const { return (uint64_t(1) << m_) - 1; }

    FieldElement element(const Gf2Poly& value) const;
    FieldElement zero() const;
    FieldElement one() const;

   private:
    int m_;
    Gf2Poly mod_;
};

class FieldElement {
   public:
    FieldElement(const FieldContext& ctx, Gf2Poly value);

    const Gf2Poly& value() const { return v_; }
    const FieldContext& context() const { return *ctx_; }
    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == Gf2Poly::one(); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement pow(uint64_t e) const;
    FieldElement inverse() const;

    bool operator==(const FieldElement& o) const { return v_ == o.v_; }

    // Multiplicative order; 0 is not allowed.
    uint64_t order() const;

   private:
    const FieldContext* ctx_;
    Gf2Poly v_;
};

// Deterministic element of exact multiplicative order n: scans base elements
// in numeric order of their polynomial value and returns beta^((2^m-1)/n) for
// the first base whose power has order exactly n.
FieldElement element_of_order(const FieldContext& ctx, uint64_t n);

}  // namespace qrlab

#endif
