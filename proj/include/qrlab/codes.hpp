#ifndef QRLAB_CODES_HPP
#define QRLAB_CODES_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "qrlab/bitmatrix.hpp"
#include "qrlab/gf2poly.hpp"

namespace qrlab {

struct CapacityExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// [n,k] binary linear code given by a full-rank k x n generator matrix.
struct LinearCode {
    int n = 0;
    int k = 0;
    BitMatrix generator;
};

struct QrCodeSpec {
    int p = 0;                  // prime length, p = +-1 mod 8
    std::vector<int> residues;  // quadratic residues mod p, ascending
    int m = 0;                  // ord_p(2), extension degree of the splitting field
    Gf2Poly generator_poly;     // degree (p-1)/2, divides x^p - 1
};

struct WeightDistribution {
    int n = 0;
    std::map<int, uint64_t> counts;  // weight -> A_w, zero entries omitted

    bool operator==(const WeightDistribution& o) const = default;
    uint64_t total() const;
};

struct CodewordSet {
    int weight = 0;
    std::vector<BitVector> words;  // distinct, canonically sorted

    bool operator==(const CodewordSet& o) const = default;
};

LinearCode cyclic_code(int n, const Gf2Poly& g);
std::pair<QrCodeSpec, LinearCode> qr_code(int p);
LinearCode extend(const LinearCode& code);
LinearCode dual(const LinearCode& code);

// Parity-check membership test.
bool in_code(const LinearCode& code, const BitVector& word);

// Codes with k above this bound must go through low_weight_codewords.
inline constexpr int kFullEnumerationMaxK = 28;

// Exact weight distribution by Gray-code traversal of all 2^k messages.
// threads = 0 means use the available hardware parallelism.
WeightDistribution weight_distribution(const LinearCode& code, int threads = 0);
// Single-threaded reference kernel; kept as the test oracle for the
// parallel version.
WeightDistribution weight_distribution_serial(const LinearCode& code);

CodewordSet codewords_of_weight(const LinearCode& code, int w, int threads = 0);

// Dual distribution via the Krawtchouk sums; inputs must sum to 2^k and the
// output must come out as nonnegative integers.
WeightDistribution macwilliams_transform(const WeightDistribution& wd, int k);

struct AssmusMattsonResult {
    bool applies = false;
    int nonzero_dual_weights = 0;  // nonzero weights w <= n - t in the dual
};

AssmusMattsonResult assmus_mattson_check(int n, int d, int t,
                                         const WeightDistribution& dual_wd);

// All codewords of weight <= w_max, grouped by weight, via enumeration over
// disjoint information sets with a Brouwer-Zimmermann style completeness
// bound. Works for any k but is intended for codes too large for full
// enumeration, like [74,37].
std::map<int, CodewordSet> low_weight_codewords(const LinearCode& code, int w_max,
                                                int threads = 0);

uint64_t matrix_hash(const BitMatrix& m);

}  // namespace qrlab

#endif
