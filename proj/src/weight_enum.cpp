#include <algorithm>
#include <bit>
#include <thread>

#include "qrlab/codes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrlab {

namespace {

using Limbs = std::vector<uint64_t>;

void xor_in(Limbs& a, const Limbs& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
}

int popcount_limbs(const Limbs& a) {
    int s = 0;
    for (uint64_t w : a) s += std::popcount(w);
    return s;
}

std::vector<Limbs> generator_limbs(const LinearCode& code) {
    std::vector<Limbs> rows(code.k);
    for (int i = 0; i < code.k; ++i) rows[i] = code.generator.row(i).limbs();
    return rows;
}

// Visit the codewords for message indices [lo, hi) in Gray-code order.
// Between consecutive indices exactly one generator row is XORed in, so a
// range of any origin can be walked after one direct setup at lo.
template <class Visit>
void walk_range(const std::vector<Limbs>& rows, std::size_t nwords, uint64_t lo,
                uint64_t hi, Visit&& visit) {
    Limbs cw(nwords, 0);
    uint64_t g = lo ^ (lo >> 1);
    for (int b = 0; g; ++b, g >>= 1)
        if (g & 1) xor_in(cw, rows[b]);
    visit(cw);
    for (uint64_t i = lo + 1; i < hi; ++i) {
        xor_in(cw, rows[std::countr_zero(i)]);
        visit(cw);
    }
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    int hw = int(std::thread::hardware_concurrency());
    return hw > 0 ? hw : 1;
#endif
}

void check_capacity(const LinearCode& code) {
    if (code.k > kFullEnumerationMaxK)
        throw CapacityExceeded("dimension " + std::to_string(code.k) +
                               " exceeds full enumeration bound " +
                               std::to_string(kFullEnumerationMaxK));
}

}  // namespace

WeightDistribution weight_distribution_serial(const LinearCode& code) {
    check_capacity(code);
    std::vector<uint64_t> counts(code.n + 1, 0);
    auto rows = generator_limbs(code);
    std::size_t nwords = (code.n + 63) / 64;
    walk_range(rows, nwords, 0, uint64_t(1) << code.k,
               [&](const Limbs& cw) { ++counts[popcount_limbs(cw)]; });
    WeightDistribution wd;
    wd.n = code.n;
    for (int w = 0; w <= code.n; ++w)
        if (counts[w]) wd.counts[w] = counts[w];
    return wd;
}

WeightDistribution weight_distribution(const LinearCode& code, int threads) {
    check_capacity(code);
    const uint64_t total = uint64_t(1) << code.k;
    const int nt = std::max(1, std::min<int>(resolve_threads(threads), int(std::min<uint64_t>(total, 256))));
    auto rows = generator_limbs(code);
    std::size_t nwords = (code.n + 63) / 64;

    std::vector<std::vector<uint64_t>> part(nt, std::vector<uint64_t>(code.n + 1, 0));
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static, 1)
#endif
    for (int t = 0; t < nt; ++t) {
        uint64_t lo = total / nt * t + std::min<uint64_t>(total % nt, t);
        uint64_t hi = lo + total / nt + (uint64_t(t) < total % nt ? 1 : 0);
        auto& counts = part[t];
        walk_range(rows, nwords, lo, hi,
                   [&](const Limbs& cw) { ++counts[popcount_limbs(cw)]; });
    }

    WeightDistribution wd;
    wd.n = code.n;
    for (int w = 0; w <= code.n; ++w) {
        uint64_t s = 0;
        for (int t = 0; t < nt; ++t) s += part[t][w];
        if (s) wd.counts[w] = s;
    }
    return wd;
}

CodewordSet codewords_of_weight(const LinearCode& code, int w, int threads) {
    check_capacity(code);
    const uint64_t total = uint64_t(1) << code.k;
    const int nt = std::max(1, std::min<int>(resolve_threads(threads), int(std::min<uint64_t>(total, 256))));
    auto rows = generator_limbs(code);
    std::size_t nwords = (code.n + 63) / 64;

    std::vector<std::vector<BitVector>> part(nt);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static, 1)
#endif
    for (int t = 0; t < nt; ++t) {
        uint64_t lo = total / nt * t + std::min<uint64_t>(total % nt, t);
        uint64_t hi = lo + total / nt + (uint64_t(t) < total % nt ? 1 : 0);
        walk_range(rows, nwords, lo, hi, [&](const Limbs& cw) {
            if (popcount_limbs(cw) == w) {
                BitVector v(code.n);
                v.limbs() = cw;
                part[t].push_back(std::move(v));
            }
        });
    }

    CodewordSet set;
    set.weight = w;
    for (auto& p : part)
        for (auto& v : p) set.words.push_back(std::move(v));
    std::sort(set.words.begin(), set.words.end());
    set.words.erase(std::unique(set.words.begin(), set.words.end()), set.words.end());
    return set;
}

}  // namespace qrlab
