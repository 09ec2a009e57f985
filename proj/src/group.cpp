#include <optional>
#include <stdexcept>

#include "qrlab/groups.hpp"

namespace qrlab {

// Deterministic Schreier-Sims stabilizer chain. Group orders in this project
// stay small (<= 34440), so the plain quadratic closure loop is fine.
struct PermutationGroup::Chain {
    int degree;

    struct Level {
        int base = -1;
        std::vector<Permutation> gens;  // generators fixing all earlier bases
        std::vector<int> orbit;         // BFS discovery order from base
        std::vector<std::optional<Permutation>> transversal;  // maps base -> point
    };
    std::vector<Level> levels;

    explicit Chain(int deg) : degree(deg) {}

    // Generators of the stabilizer of bases 0..l-1: everything recorded at
    // level l or deeper, since deeper generators fix the earlier bases too.
    std::vector<const Permutation*> gens_from(std::size_t l) const {
        std::vector<const Permutation*> out;
        for (std::size_t i = l; i < levels.size(); ++i)
            for (const auto& g : levels[i].gens) out.push_back(&g);
        return out;
    }

    void compute_orbit(std::size_t l) {
        Level& lv = levels[l];
        auto gens = gens_from(l);
        lv.orbit.assign(1, lv.base);
        lv.transversal.assign(degree, std::nullopt);
        lv.transversal[lv.base] = Permutation::identity(degree);
        for (std::size_t qi = 0; qi < lv.orbit.size(); ++qi) {
            int g = lv.orbit[qi];
            for (const Permutation* s : gens) {
                int t = (*s)(g);
                if (!lv.transversal[t]) {
                    lv.transversal[t] = *s * *lv.transversal[g];
                    lv.orbit.push_back(t);
                }
            }
        }
    }

    // Returns the residue and the level where sifting stopped.
    std::pair<Permutation, std::size_t> sift(Permutation g) const {
        for (std::size_t l = 0; l < levels.size(); ++l) {
            int beta = g(levels[l].base);
            if (!levels[l].transversal[beta]) return {std::move(g), l};
            g = levels[l].transversal[beta]->inverse() * g;
        }
        return {std::move(g), levels.size()};
    }

    // Base point for a fresh level: moved point on the longest cycle of the
    // triggering generator, smallest index on ties.
    int pick_base(const Permutation& g) const {
        int best = -1, best_len = 0;
        std::vector<bool> seen(degree, false);
        for (int i = 0; i < degree; ++i) {
            if (seen[i] || g(i) == i) continue;
            int len = 0, rep = i;
            for (int j = i; !seen[j]; j = g(j)) {
                seen[j] = true;
                ++len;
            }
            if (len > best_len) {
                best_len = len;
                best = rep;
            }
        }
        return best;
    }

    void add_at(std::size_t l, Permutation g) {
        if (l == levels.size()) {
            levels.emplace_back();
            levels.back().base = pick_base(g);
        }
        levels[l].gens.push_back(std::move(g));
        // The new generator fixes all earlier bases but can still extend
        // earlier orbits, so refresh every level up to and including l.
        for (std::size_t i = 0; i <= l && i < levels.size(); ++i) compute_orbit(i);
    }

    void insert(const Permutation& g) {
        auto [res, l] = sift(g);
        if (!res.is_identity()) add_at(l, std::move(res));
    }

    // One pass over all Schreier generators; returns false if the chain grew.
    bool closure_pass() {
        for (std::size_t l = 0; l < levels.size(); ++l) {
            Level& lv = levels[l];
            auto gens = gens_from(l);
            for (int gamma : lv.orbit) {
                for (const Permutation* sp : gens) {
                    const Permutation& s = *sp;
                    Permutation schreier =
                        lv.transversal[s(gamma)]->inverse() * s * *lv.transversal[gamma];
                    auto [res, drop] = sift(std::move(schreier));
                    if (!res.is_identity()) {
                        add_at(drop, std::move(res));
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void build(const std::vector<Permutation>& gens) {
        for (const auto& g : gens) insert(g);
        while (!closure_pass()) {
        }
    }

    uint64_t order() const {
        uint64_t o = 1;
        for (const auto& lv : levels) o *= lv.orbit.size();
        return o;
    }

    bool contains(const Permutation& p) const {
        auto [res, l] = sift(p);
        return l == levels.size() && res.is_identity();
    }
};

PermutationGroup::PermutationGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), gens_(std::move(generators)) {
    for (const auto& g : gens_)
        if (g.degree() != degree_) throw std::invalid_argument("generator degree mismatch");
}

void PermutationGroup::ensure_chain() const {
    if (chain_) return;
    auto c = std::make_shared<Chain>(degree_);
    c->build(gens_);
    chain_ = std::move(c);
}

uint64_t PermutationGroup::order() const {
    ensure_chain();
    return chain_->order();
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) throw std::invalid_argument("degree mismatch");
    ensure_chain();
    return chain_->contains(p);
}

}  // namespace qrlab
