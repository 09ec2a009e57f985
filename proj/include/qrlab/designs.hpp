#ifndef QRLAB_DESIGNS_HPP
#define QRLAB_DESIGNS_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <vector>

#include "qrlab/codes.hpp"

namespace qrlab {

// Incidence structure: blocks are k-subsets of {0..v-1}, bit-packed and kept
// distinct and canonically sorted.
struct Design {
    int v = 0;
    int k = 0;  // block size; 0 when there are no blocks
    std::vector<BitVector> blocks;

    std::size_t b() const { return blocks.size(); }
    bool has_block(const BitVector& block) const;
};

struct DesignParams {
    int64_t t = 0, v = 0, k = 0, b = 0, r = 0, lambda = 0;
    bool operator==(const DesignParams& o) const = default;
};

// How many t-subsets are covered by each possible number of blocks; the
// evidence returned when a design check fails.
struct IncidenceProfile {
    int t = 0;
    std::map<int64_t, int64_t> counts;  // coverage count -> number of t-subsets
};

struct DesignCheck {
    bool is_design = false;
    bool constant_replication = false;
    DesignParams params;       // valid when is_design
    IncidenceProfile profile;  // always populated
    int64_t b = 0;
    int64_t r = 0;  // replication number when constant, else -1
};

Design design_from_codewords(const CodewordSet& words, int v);

// Exhaustive coverage count of every t-subset, block side, using colex
// ranking into a flat array of size C(v,t).
DesignCheck verify_design(const Design& d, int t, int threads = 0);

Design derived_design(const Design& d, int x);
Design residual_at_point(const Design& d, int x);

LinearCode linear_span(const Design& d);

bool params_consistency(const DesignParams& p);

// Colex rank helpers for t-subsets, shared with the orbit machinery.
int64_t binomial(int n, int r);
int64_t colex_rank(const std::vector<int>& sorted_subset);
std::vector<int> colex_unrank(int64_t rank, int t);

// Design exchange format: line 1 "v k b", then one block per line as
// space-separated ascending point indices.
Design read_design(std::istream& in);
void write_design(std::ostream& out, const Design& d);

}  // namespace qrlab

#endif
