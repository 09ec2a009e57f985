#include <stdexcept>

#include "qrlab/groups.hpp"

namespace qrlab {

namespace {

int64_t mod_p(int64_t x, int64_t p) { return ((x % p) + p) % p; }

int64_t mod_pow(int64_t base, int64_t e, int64_t p) {
    int64_t r = 1;
    base = mod_p(base, p);
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

int64_t mod_inv(int64_t x, int64_t p) { return mod_pow(x, p - 2, p); }

}  // namespace

Permutation moebius_to_permutation(const MoebiusMap& m, int p) {
    const int64_t a = mod_p(m.a, p), b = mod_p(m.b, p), c = mod_p(m.c, p),
                  d = mod_p(m.d, p);
    // The matrix acting on y is [[b, a], [d, c]], so the determinant of the
    // map in the form (a + b*y)/(c + d*y) is b*c - a*d.
    if (mod_p(b * c - a * d, p) != 1)
        throw std::invalid_argument("Moebius map must have unit determinant");

    const int inf = p;
    std::vector<int> img(p + 1);
    for (int64_t y = 0; y < p; ++y) {
        int64_t num = mod_p(a + b * y, p);
        int64_t den = mod_p(c + d * y, p);
        img[y] = den == 0 ? (num == 0 ? 0 : inf) : int(num * mod_inv(den, p) % p);
    }
    img[inf] = d == 0 ? inf : int(b * mod_inv(d, p) % p);
    return Permutation(std::move(img));
}

PermutationGroup psl2(int p) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    MoebiusMap shift{1, 1, 1, 0};       // y -> y + 1
    MoebiusMap inversion{p - 1, 0, 0, 1};  // y -> -1/y
    std::vector<Permutation> gens{moebius_to_permutation(shift, p),
                                  moebius_to_permutation(inversion, p)};
    return PermutationGroup(p + 1, std::move(gens));
}

}  // namespace qrlab
