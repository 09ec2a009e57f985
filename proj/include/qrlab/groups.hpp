#ifndef QRLAB_GROUPS_HPP
#define QRLAB_GROUPS_HPP

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <vector>

#include "qrlab/designs.hpp"

namespace qrlab {

class Permutation {
   public:
    Permutation() = default;
    // Validates bijectivity.
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int degree() const { return int(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (a * b)(x) = a(b(x))
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

   private:
    std::vector<int> img_;
};

// Fractional linear map y -> (a + b*y) / (c + d*y) on F_p together with
// infinity, with the conventions 0/0 = 0 and nonzero/0 = infinity.
struct MoebiusMap {
    int64_t a = 0, b = 1, c = 1, d = 0;  // defaults to the identity map
};

// Coordinate contract: position i in [0, p) is the field element i, position
// p is infinity. Requires unit determinant (b*c - a*d = 1 mod p).
Permutation moebius_to_permutation(const MoebiusMap& m, int p);

// Permutation group with a deterministic Schreier-Sims stabilizer chain,
// built lazily on first order/membership query.
class PermutationGroup {
   public:
    PermutationGroup(int degree, std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }

    uint64_t order() const;
    bool contains(const Permutation& p) const;

   private:
    struct Chain;
    void ensure_chain() const;
    int degree_;
    std::vector<Permutation> gens_;
    mutable std::shared_ptr<Chain> chain_;
};

// PSL(2,p) on the projective line, generated by y -> y+1 and y -> -1/y.
PermutationGroup psl2(int p);

struct OrbitPartition {
    int s = 0;
    // canonical (colex-least) representative and size, sorted by representative
    std::vector<std::pair<std::vector<int>, int64_t>> orbits;
};

OrbitPartition orbits_on_subsets(const PermutationGroup& g, int s);
bool is_s_homogeneous(const PermutationGroup& g, int s);

bool preserves_design(const Permutation& perm, const Design& d);

// Full automorphism group of the point/block incidence structure, by
// backtracking over point images with incidence-count refinement.
PermutationGroup design_automorphism_group(const Design& d);

// Permutation exchange format: one permutation per line, images separated by
// spaces, 0-based.
std::vector<Permutation> read_permutations(std::istream& in, int degree);
void write_permutations(std::ostream& out, const std::vector<Permutation>& perms);

}  // namespace qrlab

#endif
