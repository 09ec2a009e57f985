#include <algorithm>
#include <bit>

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

// A generator basis in reduced form with unit columns at `pivots`, of which
// `inside` fall inside the freshly claimed information set.
struct InfoSetBasis {
    std::vector<Limbs> rows;
    int inside = 0;
};

// RREF of the generator choosing pivots among still-unused columns first.
// Columns claimed as pivots are marked used. Returns nullopt once no unused
// column is independent.
InfoSetBasis reduce_preferring(const BitMatrix& gen, std::vector<bool>& used) {
    std::size_t k = gen.row_count(), n = gen.col_count();
    std::vector<BitVector> rows(gen.rows());
    std::vector<int> order;
    for (std::size_t c = 0; c < n; ++c)
        if (!used[c]) order.push_back(int(c));
    for (std::size_t c = 0; c < n; ++c)
        if (used[c]) order.push_back(int(c));

    InfoSetBasis basis;
    std::size_t r = 0;
    for (int c : order) {
        if (r >= k) break;
        std::size_t piv = r;
        while (piv < k && !rows[piv].get(c)) ++piv;
        if (piv == k) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = 0; i < k; ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        if (!used[c]) {
            used[c] = true;
            ++basis.inside;
        }
        ++r;
    }
    basis.rows.reserve(k);
    for (auto& row : rows) basis.rows.push_back(row.limbs());
    return basis;
}

// Enumerate XORs of exactly `m` basis rows whose first (largest) row index
// is `first`, collecting words of weight <= w_max.
void combos_below(const std::vector<Limbs>& rows, int first, int m, Limbs& acc,
                  int w_max, std::vector<Limbs>& out) {
    if (m == 0) {
        if (popcount_limbs(acc) <= w_max) out.push_back(acc);
        return;
    }
    for (int i = first - 1; i >= m - 1; --i) {
        xor_in(acc, rows[i]);
        combos_below(rows, i, m - 1, acc, w_max, out);
        xor_in(acc, rows[i]);
    }
}

}  // namespace

std::map<int, CodewordSet> low_weight_codewords(const LinearCode& code, int w_max,
                                                int threads) {
#ifdef _OPENMP
    const int nt = threads > 0 ? threads : omp_get_max_threads();
#else
    (void)threads;
#endif
    const int k = code.k;
    const std::size_t nwords = (code.n + 63) / 64;

    std::map<int, CodewordSet> result;
    auto add_words = [&](std::vector<Limbs>& words) {
        std::sort(words.begin(), words.end());
        words.erase(std::unique(words.begin(), words.end()), words.end());
        for (auto& lw : words) {
            BitVector v(code.n);
            v.limbs() = lw;
            int w = int(v.weight());
            result[w].weight = w;
            result[w].words.push_back(std::move(v));
        }
    };

    if (k == 0) {
        std::vector<Limbs> z{Limbs(nwords, 0)};
        add_words(z);
        return result;
    }

    // Greedy disjoint information sets; the first always has full rank k.
    std::vector<bool> used(code.n, false);
    std::vector<InfoSetBasis> sets;
    for (;;) {
        InfoSetBasis b = reduce_preferring(code.generator, used);
        if (b.inside == 0) break;
        sets.push_back(std::move(b));
    }
    if (sets.empty() || sets[0].inside != k)
        throw CapacityExceeded("generator matrix is rank-deficient");

    std::vector<Limbs> collected;
    for (int mw = 0; mw <= k; ++mw) {
        for (const auto& basis : sets) {
            if (mw == 0) {
                collected.push_back(Limbs(nwords, 0));
                continue;
            }
            // Split the combination enumeration on the largest row index.
            std::vector<std::vector<Limbs>> part(k);
#ifdef _OPENMP
#pragma omp parallel for num_threads(nt) schedule(dynamic)
#endif
            for (int top = mw - 1; top < k; ++top) {
                Limbs acc(nwords, 0);
                xor_in(acc, basis.rows[top]);
                combos_below(basis.rows, top, mw - 1, acc, w_max, part[top]);
            }
            for (auto& p : part)
                for (auto& w : p) collected.push_back(std::move(w));
        }
        // Unfound codewords have > mw ones on each basis' pivot columns, of
        // which at most k - inside lie outside that basis' information set;
        // the sets are disjoint, so the restrictions add up.
        long long bound = 0;
        for (const auto& basis : sets)
            bound += std::max(0, mw + 1 - (k - basis.inside));
        if (bound > w_max || mw == k) break;
    }

    add_words(collected);
    for (auto it = result.begin(); it != result.end();) {
        if (it->first > w_max) {
            it = result.erase(it);
        } else {
            std::sort(it->second.words.begin(), it->second.words.end());
            ++it;
        }
    }
    return result;
}

}  // namespace qrlab
