#include "qrlab/designs.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qrlab {

int64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    int64_t acc = 1;
    for (int i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;
    return acc;
}

int64_t colex_rank(const std::vector<int>& s) {
    int64_t rank = 0;
    for (std::size_t i = 0; i < s.size(); ++i) rank += binomial(s[i], int(i) + 1);
    return rank;
}

std::vector<int> colex_unrank(int64_t rank, int t) {
    std::vector<int> s(t);
    for (int i = t; i >= 1; --i) {
        int c = i - 1;
        while (binomial(c + 1, i) <= rank) ++c;
        s[i - 1] = c;
        rank -= binomial(c, i);
    }
    return s;
}

bool Design::has_block(const BitVector& block) const {
    return std::binary_search(blocks.begin(), blocks.end(), block);
}

Design design_from_codewords(const CodewordSet& words, int v) {
    Design d;
    d.v = v;
    d.k = words.weight;
    for (const auto& w : words.words) {
        if (int(w.size()) != v) throw std::invalid_argument("word length != v");
        d.blocks.push_back(w);
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    auto last = std::unique(d.blocks.begin(), d.blocks.end());
    // Distinct binary words of equal weight cannot share a support.
    if (last != d.blocks.end()) throw std::runtime_error("duplicate block support");
    return d;
}

DesignCheck verify_design(const Design& d, int t, int threads) {
    if (t < 1 || (d.k > 0 && t > d.k)) throw std::invalid_argument("require 1 <= t <= k");

    const int64_t nsubsets = binomial(d.v, t);
    const int64_t nblocks = int64_t(d.blocks.size());
    int nt = 1;
#ifdef _OPENMP
    nt = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif
    nt = int(std::max<int64_t>(1, std::min<int64_t>(nt, std::max<int64_t>(nblocks, 1))));

    std::vector<std::vector<int32_t>> part(nt, std::vector<int32_t>(nsubsets, 0));
    std::vector<std::vector<int64_t>> rep(nt, std::vector<int64_t>(d.v, 0));
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(static)
#endif
    for (int64_t bi = 0; bi < nblocks; ++bi) {
#ifdef _OPENMP
        int tid = omp_get_thread_num();
#else
        int tid = 0;
#endif
        std::vector<int> pts = d.blocks[bi].support();
        for (int p : pts) ++rep[tid][p];
        // All t-subsets of this block, revolving through index positions.
        std::vector<int> idx(t);
        for (int i = 0; i < t; ++i) idx[i] = i;
        const int kk = int(pts.size());
        for (;;) {
            int64_t rank = 0;
            for (int i = 0; i < t; ++i) rank += binomial(pts[idx[i]], i + 1);
            ++part[tid][rank];
            int i = t - 1;
            while (i >= 0 && idx[i] == kk - t + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < t; ++j) idx[j] = idx[j - 1] + 1;
        }
    }

    DesignCheck out;
    out.b = nblocks;
    out.profile.t = t;
    int64_t lambda = -1;
    bool constant = nblocks > 0;
    for (int64_t s = 0; s < nsubsets; ++s) {
        int64_t c = 0;
        for (int tid = 0; tid < nt; ++tid) c += part[tid][s];
        ++out.profile.counts[c];
        if (lambda == -1)
            lambda = c;
        else if (c != lambda)
            constant = false;
    }
    int64_t r0 = -1;
    out.constant_replication = d.v > 0;
    for (int p = 0; p < d.v; ++p) {
        int64_t c = 0;
        for (int tid = 0; tid < nt; ++tid) c += rep[tid][p];
        if (r0 == -1)
            r0 = c;
        else if (c != r0)
            out.constant_replication = false;
    }
    out.r = out.constant_replication ? r0 : -1;
    out.is_design = constant && out.constant_replication && nblocks > 0;
    if (out.is_design)
        out.params = {t, d.v, d.k, nblocks, r0, lambda};
    return out;
}

Design derived_design(const Design& d, int x) {
    if (x < 0 || x >= d.v) throw std::invalid_argument("point out of range");
    Design out;
    out.v = d.v - 1;
    out.k = d.k > 0 ? d.k - 1 : 0;
    for (const auto& blk : d.blocks) {
        if (!blk.get(std::size_t(x))) continue;
        BitVector nb(out.v);
        for (int p : blk.support())
            if (p != x) nb.set(std::size_t(p < x ? p : p - 1));
        out.blocks.push_back(std::move(nb));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    if (out.blocks.empty()) out.k = 0;
    return out;
}

Design residual_at_point(const Design& d, int x) {
    if (x < 0 || x >= d.v) throw std::invalid_argument("point out of range");
    Design out;
    out.v = d.v - 1;
    out.k = d.k;
    for (const auto& blk : d.blocks) {
        if (blk.get(std::size_t(x))) continue;
        BitVector nb(out.v);
        for (int p : blk.support()) nb.set(std::size_t(p < x ? p : p - 1));
        out.blocks.push_back(std::move(nb));
    }
    std::sort(out.blocks.begin(), out.blocks.end());
    if (out.blocks.empty()) out.k = 0;
    return out;
}

LinearCode linear_span(const Design& d) {
    BitMatrix m(d.blocks.size(), std::size_t(d.v));
    for (std::size_t i = 0; i < d.blocks.size(); ++i) m.row(i) = d.blocks[i];
    RrefResult rr = rref(m);
    int k = int(rr.pivots.size());
    BitMatrix gen(std::size_t(k), std::size_t(d.v));
    for (int i = 0; i < k; ++i) gen.row(i) = rr.mat.row(i);
    return {d.v, k, std::move(gen)};
}

bool params_consistency(const DesignParams& p) {
    if (p.b * p.k != p.v * p.r) return false;
    // lambda_s * C(k-s, t-s) = lambda * C(v-s, t-s) must divide evenly.
    for (int64_t s = 0; s <= p.t; ++s) {
        int64_t num = p.lambda * binomial(int(p.v - s), int(p.t - s));
        int64_t den = binomial(int(p.k - s), int(p.t - s));
        if (den == 0 || num % den != 0) return false;
        int64_t ls = num / den;
        if (s == 0 && ls != p.b) return false;
        if (s == 1 && ls != p.r) return false;
    }
    return true;
}

}  // namespace qrlab
