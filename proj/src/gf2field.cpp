#include "qrlab/gf2field.hpp"

#include <stdexcept>
#include <vector>

namespace qrlab {

namespace {

std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            fs.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

FieldContext::FieldContext(int m) : m_(m), mod_(find_irreducible(m)) {}

FieldContext::FieldContext(int m, Gf2Poly modulus) : m_(m), mod_(std::move(modulus)) {
    if (mod_.degree() != m) throw std::invalid_argument("modulus degree mismatch");
    if (!is_irreducible(mod_)) throw std::invalid_argument("modulus is reducible");
}

FieldElement FieldContext::element(const Gf2Poly& value) const {
    return FieldElement(*this, value % mod_);
}
FieldElement FieldContext::zero() const { return FieldElement(*this, {}); }
FieldElement FieldContext::one() const { return FieldElement(*this, Gf2Poly::one()); }

FieldElement::FieldElement(const FieldContext& ctx, Gf2Poly value)
    : ctx_(&ctx), v_(std::move(value)) {}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(*a.ctx_, a.v_ ^ b.v_);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(*a.ctx_, poly_mul_mod(a.v_, b.v_, a.ctx_->modulus()));
}

FieldElement FieldElement::pow(uint64_t e) const {
    FieldElement r = ctx_->one();
    FieldElement base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero");
    return pow(ctx_->group_order() - 1);
}

uint64_t FieldElement::order() const {
    if (is_zero()) throw std::invalid_argument("order of zero");
    uint64_t n = ctx_->group_order();
    // Start from the group order and strip prime factors that keep e^n = 1.
    for (uint64_t p : prime_factors(n)) {
        while (n % p == 0 && pow(n / p).is_one()) n /= p;
    }
    return n;
}

FieldElement element_of_order(const FieldContext& ctx, uint64_t n) {
    uint64_t g = ctx.group_order();
    if (n == 0 || g % n != 0) throw std::invalid_argument("order does not divide 2^m - 1");
    for (uint64_t bits = 1; bits <= g; ++bits) {
        FieldElement cand = ctx.element(Gf2Poly::from_bits(bits)).pow(g / n);
        if (!cand.is_zero() && cand.order() == n) return cand;
    }
    throw std::logic_error("no element of requested order");  // unreachable for n | g
}

}  // namespace qrlab
