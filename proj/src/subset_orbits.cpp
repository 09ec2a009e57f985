#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qrlab/groups.hpp"

namespace qrlab {

namespace {

struct UnionFind {
    std::vector<int64_t> parent;
    explicit UnionFind(int64_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), int64_t(0));
    }
    int64_t find(int64_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int64_t a, int64_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

OrbitPartition orbits_on_subsets(const PermutationGroup& g, int s) {
    const int n = g.degree();
    const int64_t total = binomial(n, s);
    if (total > int64_t(1) << 28)
        throw CapacityExceeded("C(n,s) too large for subset orbit enumeration");

    UnionFind uf(total);
    std::vector<int> image(s);
    for (int64_t r = 0; r < total; ++r) {
        std::vector<int> sub = colex_unrank(r, s);
        for (const auto& perm : g.generators()) {
            for (int i = 0; i < s; ++i) image[i] = perm(sub[i]);
            std::sort(image.begin(), image.end());
            uf.unite(r, colex_rank(image));
        }
    }

    std::map<int64_t, int64_t> sizes;  // root rank -> orbit size
    for (int64_t r = 0; r < total; ++r) ++sizes[uf.find(r)];

    OrbitPartition out;
    out.s = s;
    for (auto& [root, size] : sizes)
        out.orbits.emplace_back(colex_unrank(root, s), size);
    return out;
}

bool is_s_homogeneous(const PermutationGroup& g, int s) {
    return orbits_on_subsets(g, s).orbits.size() == 1;
}

bool preserves_design(const Permutation& perm, const Design& d) {
    if (perm.degree() != d.v) throw std::invalid_argument("degree mismatch");
    for (const auto& blk : d.blocks) {
        BitVector img(std::size_t(d.v));
        for (int p : blk.support()) img.set(std::size_t(perm(p)));
        if (!d.has_block(img)) return false;
    }
    return true;
}

}  // namespace qrlab
