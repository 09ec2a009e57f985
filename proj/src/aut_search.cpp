#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <stdexcept>

#include "qrlab/groups.hpp"

namespace qrlab {

namespace {

// Candidate image set per point, as a bitmask over at most 128 points.
using PointMask = std::array<uint64_t, 2>;

bool mask_get(const PointMask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1u; }
void mask_clear(PointMask& m, int i) { m[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
int mask_count(const PointMask& m) {
    return std::popcount(m[0]) + std::popcount(m[1]);
}

struct AutContext {
    const Design* d = nullptr;
    int v = 0;
    std::size_t bw = 0;  // limbs per block bitset

    // For each point, the set of blocks through it.
    std::vector<std::vector<uint64_t>> pb;

    explicit AutContext(const Design& design) : d(&design), v(design.v) {
        bw = (design.blocks.size() + 63) / 64;
        pb.assign(v, std::vector<uint64_t>(bw, 0));
        for (std::size_t bi = 0; bi < design.blocks.size(); ++bi)
            for (int p : design.blocks[bi].support())
                pb[p][bi >> 6] |= uint64_t(1) << (bi & 63);
    }

    int and_count(const std::vector<uint64_t>& mask, int point) const {
        int s = 0;
        for (std::size_t i = 0; i < bw; ++i) s += std::popcount(mask[i] & pb[point][i]);
        return s;
    }

    int degree_of(int point) const {
        int s = 0;
        for (uint64_t w : pb[point]) s += std::popcount(w);
        return s;
    }
};

struct SearchState {
    std::vector<int> map;  // domain point -> image, -1 while unfixed
    std::vector<int> inv;  // image point -> domain, -1 while unused
    std::vector<PointMask> cand;
    std::vector<int> fixed_dom;  // fix order
    std::vector<int> fixed_img;

    explicit SearchState(const AutContext& ctx) {
        map.assign(ctx.v, -1);
        inv.assign(ctx.v, -1);
        cand.assign(ctx.v, PointMask{0, 0});
        for (int x = 0; x < ctx.v; ++x)
            for (int y = 0; y < ctx.v; ++y)
                if (ctx.degree_of(x) == ctx.degree_of(y))
                    cand[x][y >> 6] |= uint64_t(1) << (y & 63);
    }
};

// Fix x -> y and refine every open candidate set against the incidence
// counts with the last one, two and three fixed points. Pair and triple
// counts are constant on a 3-design, so the three-point key is the one that
// actually bites there; the shorter keys matter for non-design inputs.
bool fix_and_refine(const AutContext& ctx, SearchState& st, int x, int y) {
    if (!mask_get(st.cand[x], y) || st.inv[y] != -1) return false;
    st.map[x] = y;
    st.inv[y] = x;
    st.fixed_dom.push_back(x);
    st.fixed_img.push_back(y);

    const std::size_t depth = st.fixed_dom.size();
    const int keys = int(std::min<std::size_t>(depth, 3));
    std::vector<std::vector<uint64_t>> dom_mask(keys), img_mask(keys);
    dom_mask[0] = ctx.pb[x];
    img_mask[0] = ctx.pb[y];
    for (int j = 1; j < keys; ++j) {
        dom_mask[j] = dom_mask[j - 1];
        img_mask[j] = img_mask[j - 1];
        int pd = st.fixed_dom[depth - 1 - j], pi = st.fixed_img[depth - 1 - j];
        for (std::size_t i = 0; i < ctx.bw; ++i) {
            dom_mask[j][i] &= ctx.pb[pd][i];
            img_mask[j][i] &= ctx.pb[pi][i];
        }
    }

    std::vector<std::array<int, 3>> img_key(ctx.v);
    for (int w = 0; w < ctx.v; ++w)
        for (int j = 0; j < keys; ++j) img_key[w][j] = ctx.and_count(img_mask[j], w);

    for (int z = 0; z < ctx.v; ++z) {
        if (st.map[z] != -1) continue;
        std::array<int, 3> dom_key{};
        for (int j = 0; j < keys; ++j) dom_key[j] = ctx.and_count(dom_mask[j], z);
        PointMask& cz = st.cand[z];
        mask_clear(cz, y);
        for (int wi = 0; wi < 2; ++wi) {
            uint64_t bits = cz[wi];
            while (bits) {
                int w = wi * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                for (int j = 0; j < keys; ++j) {
                    if (img_key[w][j] != dom_key[j]) {
                        mask_clear(cz, w);
                        break;
                    }
                }
            }
        }
        if (cz[0] == 0 && cz[1] == 0) return false;
    }
    return true;
}

// Depth-first extension to a full automorphism. Returns true (and stops) at
// the first complete map passing the exact block check when find_one is set;
// otherwise reports every automorphism through the sink.
bool extend(const AutContext& ctx, SearchState& st, bool find_one,
            const std::function<void(const Permutation&)>& sink) {
    int best = -1, best_count = 0;
    for (int z = 0; z < ctx.v; ++z) {
        if (st.map[z] != -1) continue;
        int c = mask_count(st.cand[z]);
        if (best == -1 || c < best_count) {
            best = z;
            best_count = c;
        }
    }
    if (best == -1) {
        Permutation perm(st.map);
        if (!preserves_design(perm, *ctx.d)) return false;
        sink(perm);
        return true;
    }

    bool found = false;
    PointMask options = st.cand[best];
    for (int wi = 0; wi < 2; ++wi) {
        uint64_t bits = options[wi];
        while (bits) {
            int y = wi * 64 + std::countr_zero(bits);
            bits &= bits - 1;
            if (st.inv[y] != -1) continue;
            SearchState child = st;
            if (fix_and_refine(ctx, child, best, y) &&
                extend(ctx, child, find_one, sink)) {
                found = true;
                if (find_one) return true;
            }
        }
    }
    return found;
}

std::vector<int> orbit_of(int point, int v, const std::vector<Permutation>& gens,
                          int fixed_prefix) {
    std::vector<bool> in(v, false);
    std::vector<int> orbit{point};
    in[point] = true;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
        for (const auto& g : gens) {
            bool fixes_prefix = true;
            for (int i = 0; i < fixed_prefix && fixes_prefix; ++i)
                if (g(i) != i) fixes_prefix = false;
            if (!fixes_prefix) continue;
            int t = g(orbit[qi]);
            if (!in[t]) {
                in[t] = true;
                orbit.push_back(t);
            }
        }
    }
    return orbit;
}

}  // namespace

PermutationGroup design_automorphism_group(const Design& d) {
    if (d.blocks.empty()) throw std::invalid_argument("design has no blocks");
    AutContext ctx(d);
    const int v = d.v;
    std::vector<Permutation> gens;

    // Stabilizer chain over the natural base 0, 1, ..., v-1, deepest level
    // first: at level l we look for automorphisms fixing 0..l-1 pointwise
    // and moving l, one coset representative per new orbit point.
    for (int l = v - 1; l >= 0; --l) {
        SearchState prefix(ctx);
        bool consistent = true;
        for (int i = 0; i < l && consistent; ++i)
            consistent = fix_and_refine(ctx, prefix, i, i);
        if (!consistent)
            throw std::logic_error("identity prefix rejected by refinement");

        for (int q = 0; q < v; ++q) {
            if (q == l || !mask_get(prefix.cand[l], q)) continue;
            std::vector<int> orb = orbit_of(l, v, gens, l);
            if (std::find(orb.begin(), orb.end(), q) != orb.end()) continue;

            SearchState st = prefix;
            if (!fix_and_refine(ctx, st, l, q)) continue;
            extend(ctx, st, true, [&](const Permutation& p) { gens.push_back(p); });
        }
    }
    if (gens.empty()) gens.push_back(Permutation::identity(v));
    return PermutationGroup(v, std::move(gens));
}

}  // namespace qrlab
