#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qrlab/designs.hpp"

using namespace qrlab;

namespace {

Design make_design(int v, int k, const std::vector<std::vector<int>>& blocks) {
    Design d;
    d.v = v;
    d.k = k;
    for (const auto& pts : blocks) {
        BitVector b(v);
        for (int p : pts) b.set(p);
        d.blocks.push_back(std::move(b));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

Design fano() {
    // cyclic shifts of {0,1,3}, the difference-set presentation
    return make_design(7, 3,
                       {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6},
                        {0, 4, 5}, {1, 5, 6}, {0, 2, 6}});
}

// 3-(8,4,1): the planes of AG(3,2), i.e. the weight-4 words of the extended
// Hamming code.
Design ag32() {
    LinearCode e = extend(qr_code(7).second);
    return design_from_codewords(codewords_of_weight(e, 4), 8);
}

Design random_design(std::mt19937& rng, int v, int k, int b) {
    std::vector<int> pts(v);
    std::iota(pts.begin(), pts.end(), 0);
    Design d;
    d.v = v;
    d.k = k;
    while (int(d.blocks.size()) < b) {
        std::shuffle(pts.begin(), pts.end(), rng);
        BitVector blk(v);
        for (int i = 0; i < k; ++i) blk.set(pts[i]);
        if (!std::count(d.blocks.begin(), d.blocks.end(), blk))
            d.blocks.push_back(std::move(blk));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

int64_t profile_mass(const IncidenceProfile& p) {
    int64_t s = 0;
    for (auto& [count, mult] : p.counts) s += count * mult;
    return s;
}

}  // namespace

TEST_CASE("colex rank round trip") {
    CHECK(binomial(42, 3) == 11480);
    CHECK(binomial(5, 7) == 0);
    CHECK(colex_rank({0, 1, 2}) == 0);
    for (int64_t r = 0; r < binomial(9, 3); ++r) {
        std::vector<int> s = colex_unrank(r, 3);
        CHECK(std::is_sorted(s.begin(), s.end()));
        CHECK(colex_rank(s) == r);
    }
}

TEST_CASE("design_from_codewords") {
    LinearCode ham = qr_code(7).second;
    Design d = design_from_codewords(codewords_of_weight(ham, 3), 7);
    CHECK(d.v == 7);
    CHECK(d.k == 3);
    CHECK(d.b() == 7);
    CHECK(d.blocks == fano().blocks);  // Hamming weight-3 supports are the Fano lines

    CodewordSet dup;
    dup.weight = 2;
    BitVector w(4);
    w.set(0);
    w.set(1);
    dup.words = {w, w};
    CHECK_THROWS(design_from_codewords(dup, 4));
    CHECK_THROWS_AS(design_from_codewords(dup, 5), std::invalid_argument);
}

TEST_CASE("verify_design on the Fano plane") {
    Design d = fano();
    DesignCheck c2 = verify_design(d, 2);
    CHECK(c2.is_design);
    CHECK(c2.params == DesignParams{2, 7, 3, 7, 3, 1});
    CHECK(c2.profile.counts == std::map<int64_t, int64_t>{{1, 21}});

    DesignCheck c1 = verify_design(d, 1);
    CHECK(c1.is_design);
    CHECK(c1.params.lambda == 3);
    CHECK(c1.r == 3);

    DesignCheck c3 = verify_design(d, 3);
    CHECK_FALSE(c3.is_design);  // lines cover 7 of the 35 triples once
    CHECK(c3.profile.counts == std::map<int64_t, int64_t>{{0, 28}, {1, 7}});
    CHECK_THROWS_AS(verify_design(d, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_design(d, 4), std::invalid_argument);
}

TEST_CASE("verify_design on a 3-design and lambda cascade") {
    Design d = ag32();
    CHECK(d.b() == 14);
    DesignCheck c3 = verify_design(d, 3);
    CHECK(c3.is_design);
    CHECK(c3.params == DesignParams{3, 8, 4, 14, 7, 1});
    // a t-design is an s-design for s < t
    CHECK(verify_design(d, 2).params.lambda == 3);
    CHECK(verify_design(d, 1).params.lambda == 7);
    CHECK(params_consistency(c3.params));
}

TEST_CASE("verify_design single-block profile") {
    Design d = make_design(5, 3, {{0, 1, 2}});
    DesignCheck c = verify_design(d, 2);
    CHECK_FALSE(c.is_design);
    CHECK_FALSE(c.constant_replication);
    CHECK(c.r == -1);
    CHECK(c.profile.counts == std::map<int64_t, int64_t>{{0, 7}, {1, 3}});
}

TEST_CASE("profile double counting") {
    std::mt19937 rng(41);
    for (int i = 0; i < 10; ++i) {
        Design d = random_design(rng, 10, 4, 12);
        for (int t = 1; t <= 4; ++t) {
            DesignCheck c = verify_design(d, t);
            CHECK(profile_mass(c.profile) == int64_t(d.b()) * binomial(d.k, t));
        }
        CHECK(verify_design(d, 2, 1).profile.counts ==
              verify_design(d, 2).profile.counts);
    }
}

TEST_CASE("derived and residual partition the blocks") {
    Design d = ag32();
    for (int x = 0; x < d.v; ++x) {
        Design der = derived_design(d, x);
        Design res = residual_at_point(d, x);
        CHECK(der.v == d.v - 1);
        CHECK(res.v == d.v - 1);
        CHECK(der.k == d.k - 1);
        CHECK(res.k == d.k);
        CHECK(der.b() + res.b() == d.b());

        // derived design of a 3-(8,4,1) is a 2-(7,3,1), the Fano plane
        DesignCheck dc = verify_design(der, 2);
        CHECK(dc.is_design);
        CHECK(dc.params == DesignParams{2, 7, 3, 7, 3, 1});

        DesignCheck rc = verify_design(res, 2);
        CHECK(rc.is_design);
        CHECK(rc.params == DesignParams{2, 7, 4, 7, 4, 2});
    }
    CHECK_THROWS_AS(derived_design(d, 8), std::invalid_argument);
    CHECK_THROWS_AS(residual_at_point(d, -1), std::invalid_argument);
}

TEST_CASE("linear_span") {
    Design d = fano();
    LinearCode span = linear_span(d);
    CHECK(span.n == 7);
    CHECK(span.k == 4);  // the Fano lines generate the [7,4] Hamming code
    for (const auto& blk : d.blocks) CHECK(in_code(span, blk));

    Design single = make_design(6, 2, {{1, 4}});
    CHECK(linear_span(single).k == 1);
    Design empty;
    empty.v = 6;
    CHECK(linear_span(empty).k == 0);
}

TEST_CASE("params_consistency rejects impossible parameter sets") {
    CHECK(params_consistency({3, 42, 10, 1722, 410, 18}));
    CHECK(params_consistency({2, 41, 9, 410, 90, 18}));
    CHECK(params_consistency({2, 41, 10, 1312, 320, 72}));
    CHECK_FALSE(params_consistency({2, 41, 10, 1312, 321, 72}));  // bk != vr
    CHECK_FALSE(params_consistency({2, 7, 3, 8, 3, 1}));  // bk != vr
    CHECK_FALSE(params_consistency({2, 8, 3, 8, 3, 1}));  // lambda_0 not integral
}

TEST_CASE("design exchange format round trip") {
    Design d = ag32();
    std::stringstream ss;
    write_design(ss, d);
    Design back = read_design(ss);
    CHECK(back.v == d.v);
    CHECK(back.k == d.k);
    CHECK(back.blocks == d.blocks);
}

TEST_CASE("design exchange format rejects malformed input") {
    auto fails = [](const std::string& text, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_design(in);
            return false;
        } catch (const std::runtime_error& e) {
            return std::string(e.what()).find(needle) != std::string::npos;
        }
    };
    CHECK(fails("", "missing header"));
    CHECK(fails("7 3\n", "header"));
    CHECK(fails("7 8 1\n0 1 2\n", "header"));
    CHECK(fails("7 3 2\n0 1 2\n", "unexpected end"));
    CHECK(fails("7 3 1\n0 1 9\n", "out of range"));
    CHECK(fails("7 3 1\n0 2 1\n", "ascending"));
    CHECK(fails("7 3 1\n0 1\n", "block size"));
    CHECK(fails("7 3 1\n0 x 2\n", "malformed"));
    CHECK(fails("7 3 2\n0 1 2\n0 1 2\n", "duplicate"));
}
