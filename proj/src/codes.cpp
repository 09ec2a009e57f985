#include "qrlab/codes.hpp"

#include <algorithm>
#include <numeric>

#include "qrlab/gf2field.hpp"

namespace qrlab {

uint64_t WeightDistribution::total() const {
    uint64_t s = 0;
    for (auto& [w, c] : counts) s += c;
    return s;
}

LinearCode cyclic_code(int n, const Gf2Poly& g) {
    Gf2Poly xn1 = Gf2Poly::x_power(n) ^ Gf2Poly::one();
    if (g.is_zero() || !(xn1 % g).is_zero())
        throw std::invalid_argument("generator does not divide x^n - 1");
    int k = n - g.degree();
    BitMatrix gen{std::size_t(k), std::size_t(n)};
    for (int i = 0; i < k; ++i) gen.row(i) = g.shifted(i).to_bitvector(n);
    return {n, k, std::move(gen)};
}

namespace {

int multiplicative_order_mod(int a, int p) {
    int ord = 1;
    long long x = a % p;
    while (x != 1) {
        x = x * a % p;
        ++ord;
    }
    return ord;
}

}  // namespace

std::pair<QrCodeSpec, LinearCode> qr_code(int p) {
    if (p < 7 || p % 8 == 3 || p % 8 == 5)
        throw std::invalid_argument("p must be a prime = +-1 mod 8");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::invalid_argument("p must be prime");

    QrCodeSpec spec;
    spec.p = p;
    std::vector<bool> is_res(p, false);
    for (int x = 1; x < p; ++x) is_res[int(int64_t(x) * x % p)] = true;
    for (int r = 1; r < p; ++r)
        if (is_res[r]) spec.residues.push_back(r);

    spec.m = multiplicative_order_mod(2, p);
    FieldContext ctx(spec.m);
    FieldElement alpha = element_of_order(ctx, uint64_t(p));

    // g(x) = prod over residues r of (x + alpha^r), expanded in GF(2^m).
    std::vector<FieldElement> coeffs{ctx.one()};
    for (int r : spec.residues) {
        FieldElement root = alpha.pow(uint64_t(r));
        coeffs.push_back(ctx.zero());
        for (std::size_t i = coeffs.size() - 1; i > 0; --i)
            coeffs[i] = coeffs[i - 1] + coeffs[i] * root;
        coeffs[0] = coeffs[0] * root;
    }
    // Gleason's criterion put all coefficients in the prime field; verify.
    Gf2Poly g;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const FieldElement& c = coeffs[i];
        if (!c.is_zero() && !c.is_one())
            throw std::logic_error("QR generator coefficient outside GF(2)");
        if (c.is_one()) g ^= Gf2Poly::x_power(int(i));
    }
    spec.generator_poly = g;
    return {spec, cyclic_code(p, g)};
}

LinearCode extend(const LinearCode& code) {
    BitMatrix gen{std::size_t(code.k), std::size_t(code.n) + 1};
    for (int i = 0; i < code.k; ++i) {
        const BitVector& r = code.generator.row(i);
        for (int c : r.support()) gen.set(i, std::size_t(c));
        gen.set(i, std::size_t(code.n), r.weight() % 2 != 0);
    }
    return {code.n + 1, code.k, std::move(gen)};
}

LinearCode dual(const LinearCode& code) {
    RrefResult rr = rref(code.generator);
    std::vector<bool> is_pivot(code.n, false);
    for (int p : rr.pivots) is_pivot[p] = true;
    BitMatrix gen{std::size_t(code.n - code.k), std::size_t(code.n)};
    std::size_t row = 0;
    for (int f = 0; f < code.n; ++f) {
        if (is_pivot[f]) continue;
        gen.set(row, std::size_t(f));
        for (std::size_t i = 0; i < rr.pivots.size(); ++i)
            if (rr.mat.get(i, std::size_t(f))) gen.set(row, std::size_t(rr.pivots[i]));
        ++row;
    }
    return {code.n, code.n - code.k, std::move(gen)};
}

bool in_code(const LinearCode& code, const BitVector& word) {
    if (int(word.size()) != code.n) return false;
    LinearCode d = dual(code);
    for (std::size_t i = 0; i < d.generator.row_count(); ++i)
        if ((d.generator.row(i) & word).weight() % 2 != 0) return false;
    return true;
}

WeightDistribution macwilliams_transform(const WeightDistribution& wd, int k) {
    const int n = wd.n;
    if (wd.total() != (uint64_t(1) << k))
        throw std::invalid_argument("distribution does not sum to 2^k");

    // Binomials up to C(74,37) overflow 64 bits; accumulate in 128.
    std::vector<std::vector<__int128>> binom(n + 1, std::vector<__int128>(n + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (int j = 1; j <= i; ++j)
            binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : 0);
    }

    WeightDistribution out;
    out.n = n;
    for (int j = 0; j <= n; ++j) {
        __int128 acc = 0;
        for (auto& [w, aw] : wd.counts) {
            __int128 kra = 0;
            for (int i = 0; i <= j; ++i) {
                if (i > w || j - i > n - w) continue;
                __int128 term = binom[w][i] * binom[n - w][j - i];
                kra += (i % 2 == 0) ? term : -term;
            }
            acc += __int128(aw) * kra;
        }
        __int128 denom = __int128(1) << k;
        if (acc % denom != 0 || acc < 0)
            throw std::invalid_argument("transform output not a nonnegative integer");
        uint64_t v = uint64_t(acc / denom);
        if (v) out.counts[j] = v;
    }
    return out;
}

AssmusMattsonResult assmus_mattson_check(int n, int d, int t,
                                         const WeightDistribution& dual_wd) {
    if (t < 1 || t >= d) throw std::invalid_argument("require 1 <= t < d");
    int count = 0;
    for (auto& [w, c] : dual_wd.counts)
        if (w >= 1 && w <= n - t && c > 0) ++count;
    return {count <= d - t, count};
}

uint64_t matrix_hash(const BitMatrix& m) {
    uint64_t h = 14695981039346656037ull;
    auto mix = [&h](uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(m.row_count());
    mix(m.col_count());
    for (std::size_t r = 0; r < m.row_count(); ++r)
        for (uint64_t w : m.row(r).limbs()) mix(w);
    return h;
}

}  // namespace qrlab
