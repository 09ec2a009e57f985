#include "qrlab/gf2poly.hpp"

#include <bit>
#include <stdexcept>

namespace qrlab {

void Gf2Poly::trim() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
}

Gf2Poly Gf2Poly::from_bits(uint64_t bits) {
    Gf2Poly p;
    if (bits) p.w_.push_back(bits);
    return p;
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<int> exps) {
    Gf2Poly p;
    for (int e : exps) {
        std::size_t wi = std::size_t(e) >> 6;
        if (wi >= p.w_.size()) p.w_.resize(wi + 1, 0);
        p.w_[wi] ^= uint64_t(1) << (e & 63);
    }
    p.trim();
    return p;
}

Gf2Poly Gf2Poly::x_power(int e) { return from_exponents({e}); }

int Gf2Poly::degree() const {
    if (w_.empty()) return -1;
    return int(64 * (w_.size() - 1) + 63 - std::countl_zero(w_.back()));
}

bool Gf2Poly::coeff(int i) const {
    std::size_t wi = std::size_t(i) >> 6;
    if (wi >= w_.size()) return false;
    return (w_[wi] >> (i & 63)) & 1u;
}

Gf2Poly& Gf2Poly::operator^=(const Gf2Poly& o) {
    if (o.w_.size() > w_.size()) w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) w_[i] ^= o.w_[i];
    trim();
    return *this;
}

Gf2Poly Gf2Poly::shifted(int e) const {
    if (is_zero() || e == 0) {
        Gf2Poly r = *this;
        if (e < 0) throw std::invalid_argument("negative shift");
        return r;
    }
    Gf2Poly r;
    int wordshift = e >> 6, bitshift = e & 63;
    r.w_.assign(w_.size() + wordshift + 1, 0);
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + wordshift] |= w_[i] << bitshift;
        if (bitshift) r.w_[i + wordshift + 1] |= w_[i] >> (64 - bitshift);
    }
    r.trim();
    return r;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    Gf2Poly r;
    r.w_.assign(a.w_.size() + b.w_.size(), 0);
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
        uint64_t w = a.w_[i];
        while (w) {
            int bit = std::countr_zero(w);
            w &= w - 1;
            int shift = int(i * 64) + bit;
            int ws = shift >> 6, bs = shift & 63;
            for (std::size_t j = 0; j < b.w_.size(); ++j) {
                r.w_[j + ws] ^= b.w_[j] << bs;
                if (bs) r.w_[j + ws + 1] ^= b.w_[j] >> (64 - bs);
            }
        }
    }
    r.trim();
    return r;
}

Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& m) {
    if (m.is_zero()) throw std::invalid_argument("zero modulus");
    Gf2Poly r = a;
    int dm = m.degree();
    for (int d = r.degree(); d >= dm; d = r.degree()) {
        r ^= m.shifted(d - dm);
    }
    return r;
}

Gf2Poly operator/(const Gf2Poly& a, const Gf2Poly& m) {
    if (m.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Gf2Poly r = a, q;
    int dm = m.degree();
    for (int d = r.degree(); d >= dm; d = r.degree()) {
        q ^= Gf2Poly::x_power(d - dm);
        r ^= m.shifted(d - dm);
    }
    return q;
}

bool Gf2Poly::operator<(const Gf2Poly& o) const {
    if (w_.size() != o.w_.size()) return w_.size() < o.w_.size();
    for (std::size_t i = w_.size(); i-- > 0;)
        if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
    return false;
}

BitVector Gf2Poly::to_bitvector(std::size_t n) const {
    BitVector v(n);
    for (std::size_t i = 0; i < w_.size(); ++i) v.limbs()[i] = w_[i];
    return v;
}

std::string Gf2Poly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (int d = degree(); d >= 0; --d) {
        if (!coeff(d)) continue;
        if (!s.empty()) s += " + ";
        if (d == 0)
            s += "1";
        else if (d == 1)
            s += "x";
        else
            s += "x^" + std::to_string(d);
    }
    return s;
}

Gf2Poly gf2_gcd(Gf2Poly a, Gf2Poly b) {
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = b;
        b = r;
    }
    return a;
}

Gf2Poly poly_mul_mod(const Gf2Poly& a, const Gf2Poly& b, const Gf2Poly& modulus) {
    if (modulus.is_zero()) throw std::invalid_argument("zero modulus");
    return (a * b) % modulus;
}

Gf2Poly x_pow_pow2_mod(int e, const Gf2Poly& f) {
    Gf2Poly r = Gf2Poly::x_power(1) % f;
    for (int i = 0; i < e; ++i) r = (r * r) % f;
    return r;
}

bool is_irreducible(const Gf2Poly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("irreducibility undefined for constants");
    if (d == 1) return true;
    if (!f.coeff(0)) return false;  // divisible by x
    // f has an irreducible factor of degree i iff gcd(x^(2^i) - x, f) != 1.
    const Gf2Poly x = Gf2Poly::x_power(1);
    Gf2Poly xp = x % f;
    for (int i = 1; i <= d / 2; ++i) {
        xp = (xp * xp) % f;
        Gf2Poly g = gf2_gcd(xp ^ x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

Gf2Poly find_irreducible(int m) {
    if (m < 1) throw std::invalid_argument("degree must be positive");
    if (m > 62) throw std::invalid_argument("degree out of supported range");
    for (uint64_t bits = uint64_t(1) << m; bits < (uint64_t(1) << (m + 1)); ++bits) {
        Gf2Poly f = Gf2Poly::from_bits(bits);
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace qrlab
