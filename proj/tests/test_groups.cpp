#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "qrlab/groups.hpp"

using namespace qrlab;

namespace {

// Exhaustive closure by BFS; the independent oracle for the stabilizer chain.
std::set<Permutation> closure(const std::vector<Permutation>& gens, int degree,
                              std::size_t limit = 100000) {
    std::set<Permutation> seen{Permutation::identity(degree)};
    std::vector<Permutation> queue(seen.begin(), seen.end());
    while (!queue.empty()) {
        Permutation g = std::move(queue.back());
        queue.pop_back();
        for (const auto& s : gens) {
            Permutation h = s * g;
            if (seen.insert(h).second) {
                REQUIRE(seen.size() <= limit);
                queue.push_back(std::move(h));
            }
        }
    }
    return seen;
}

Permutation cycle(int degree, const std::vector<int>& cyc) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    for (std::size_t i = 0; i < cyc.size(); ++i)
        img[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return Permutation(img);
}

// Matrix [[b, a], [d, c]] represents y -> (a + b*y)/(c + d*y); composition of
// maps is the matrix product.
MoebiusMap compose(const MoebiusMap& m1, const MoebiusMap& m2, int p) {
    MoebiusMap r;
    r.b = (m1.b * m2.b + m1.a * m2.d) % p;
    r.a = (m1.b * m2.a + m1.a * m2.c) % p;
    r.d = (m1.d * m2.b + m1.c * m2.d) % p;
    r.c = (m1.d * m2.a + m1.c * m2.c) % p;
    return r;
}

Design fano() {
    Design d;
    d.v = 7;
    d.k = 3;
    for (auto& pts : std::vector<std::vector<int>>{{0, 1, 3}, {1, 2, 4}, {2, 3, 5},
                                                   {3, 4, 6}, {0, 4, 5}, {1, 5, 6},
                                                   {0, 2, 6}}) {
        BitVector b(7);
        for (int p : pts) b.set(p);
        d.blocks.push_back(std::move(b));
    }
    std::sort(d.blocks.begin(), d.blocks.end());
    return d;
}

std::vector<Permutation> all_perms(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST_CASE("permutation basics") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);

    Permutation a({1, 2, 0});  // 0->1->2->0
    Permutation b({1, 0, 2});  // swap 0,1
    CHECK((a * b)(0) == a(b(0)));
    CHECK(a * a.inverse() == Permutation::identity(3));
    CHECK(a.inverse() * a == Permutation::identity(3));
    CHECK(Permutation::identity(4).is_identity());
    CHECK_FALSE(a.is_identity());
}

TEST_CASE("moebius_to_permutation examples") {
    // default map is the identity
    CHECK(moebius_to_permutation(MoebiusMap{}, 5).is_identity());

    // y -> y + 1: a 41-cycle fixing infinity (position 41)
    Permutation t = moebius_to_permutation({1, 1, 1, 0}, 41);
    CHECK(t(41) == 41);
    for (int i = 0; i < 41; ++i) CHECK(t(i) == (i + 1) % 41);

    // y -> -1/y: swaps 0 and infinity, sends 1 to -1
    Permutation s = moebius_to_permutation({40, 0, 0, 1}, 41);
    CHECK(s(0) == 41);
    CHECK(s(41) == 0);
    CHECK(s(1) == 40);
    CHECK(s(2) == 20);  // -1/2 = -21 = 20 mod 41

    // determinant b*c - a*d must be 1 mod p
    CHECK_THROWS_AS(moebius_to_permutation({0, 2, 1, 0}, 5), std::invalid_argument);
}

TEST_CASE("moebius_to_permutation is a homomorphism") {
    const int p = 13;
    MoebiusMap t{1, 1, 1, 0}, s{p - 1, 0, 0, 1};
    std::mt19937 rng(47);
    auto random_map = [&] {
        MoebiusMap m;  // identity
        int len = int(rng() % 12);
        for (int i = 0; i < len; ++i) m = compose(m, (rng() & 1) ? t : s, p);
        return m;
    };
    for (int i = 0; i < 200; ++i) {
        MoebiusMap m1 = random_map(), m2 = random_map();
        CHECK(moebius_to_permutation(m1, p) * moebius_to_permutation(m2, p) ==
              moebius_to_permutation(compose(m1, m2, p), p));
    }
}

TEST_CASE("psl2 orders match p(p^2-1)/2") {
    for (int p : {3, 5, 7, 11, 13, 41}) {
        PermutationGroup g = psl2(p);
        CHECK(g.degree() == p + 1);
        CHECK(g.order() == uint64_t(p) * (p - 1) * (p + 1) / 2);
    }
    // cross-check the small ones exhaustively
    for (int p : {3, 5, 7}) {
        PermutationGroup g = psl2(p);
        CHECK(g.order() == closure(g.generators(), g.degree()).size());
    }
}

TEST_CASE("stabilizer chain order matches exhaustive closure") {
    PermutationGroup trivial(5, {});
    CHECK(trivial.order() == 1);
    CHECK(PermutationGroup(6, {cycle(6, {0, 1, 2, 3, 4, 5})}).order() == 6);
    CHECK(PermutationGroup(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})}).order() ==
          120);

    std::mt19937 rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        int deg = 4 + int(rng() % 4);
        std::vector<int> img(deg);
        std::iota(img.begin(), img.end(), 0);
        std::vector<Permutation> gens;
        for (int i = 0; i < 2; ++i) {
            std::shuffle(img.begin(), img.end(), rng);
            gens.emplace_back(img);
        }
        std::set<Permutation> cl = closure(gens, deg);
        PermutationGroup g(deg, gens);
        CHECK(g.order() == cl.size());
        for (const auto& p : cl) CHECK(g.contains(p));
        for (const auto& p : all_perms(deg))
            CHECK(g.contains(p) == (cl.count(p) > 0));
    }
}

TEST_CASE("contains rejects elements outside the group") {
    // A4 from two 3-cycles contains no transposition
    PermutationGroup a4(4, {cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})});
    CHECK(a4.order() == 12);
    CHECK(a4.contains(Permutation::identity(4)));
    CHECK_FALSE(a4.contains(cycle(4, {0, 1})));
    CHECK_THROWS_AS(a4.contains(Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("orbits_on_subsets") {
    PermutationGroup trivial(5, {});
    OrbitPartition p2 = orbits_on_subsets(trivial, 2);
    CHECK(p2.orbits.size() == 10);
    for (auto& [rep, size] : p2.orbits) CHECK(size == 1);

    PermutationGroup s5(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1})});
    for (int s = 1; s <= 4; ++s) {
        OrbitPartition part = orbits_on_subsets(s5, s);
        CHECK(part.orbits.size() == 1);
        CHECK(is_s_homogeneous(s5, s));
    }

    // C5 splits the 10 pairs into two orbits of 5
    PermutationGroup c5(5, {cycle(5, {0, 1, 2, 3, 4})});
    OrbitPartition pairs = orbits_on_subsets(c5, 2);
    CHECK(pairs.orbits.size() == 2);
    int64_t total = 0;
    for (auto& [rep, size] : pairs.orbits) {
        CHECK(size == 5);
        CHECK(c5.order() % size == 0);
        CHECK(std::is_sorted(rep.begin(), rep.end()));
        total += size;
    }
    CHECK(total == 10);
    CHECK_FALSE(is_s_homogeneous(c5, 2));
}

TEST_CASE("preserves_design") {
    Design d = fano();
    CHECK(preserves_design(Permutation::identity(7), d));
    CHECK(preserves_design(cycle(7, {0, 1, 2, 3, 4, 5, 6}), d));  // difference set
    CHECK_FALSE(preserves_design(cycle(7, {0, 1}), d));
}

TEST_CASE("design automorphism group of the Fano plane") {
    Design d = fano();
    PermutationGroup aut = design_automorphism_group(d);
    CHECK(aut.order() == 168);
    for (const auto& g : aut.generators()) CHECK(preserves_design(g, d));

    // oracle: count preserving permutations among all 5040
    uint64_t count = 0;
    for (const auto& p : all_perms(7)) {
        bool pres = preserves_design(p, d);
        if (pres) ++count;
        CHECK(aut.contains(p) == pres);
    }
    CHECK(count == 168);
}

TEST_CASE("design automorphism group of the complete 2-design") {
    Design d;
    d.v = 5;
    d.k = 2;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            BitVector b(5);
            b.set(i);
            b.set(j);
            d.blocks.push_back(std::move(b));
        }
    std::sort(d.blocks.begin(), d.blocks.end());
    CHECK(design_automorphism_group(d).order() == 120);

    Design empty;
    empty.v = 4;
    CHECK_THROWS_AS(design_automorphism_group(empty), std::invalid_argument);
}

TEST_CASE("permutation exchange format round trip") {
    std::vector<Permutation> perms{cycle(5, {0, 1, 2, 3, 4}), cycle(5, {1, 3}),
                                   Permutation::identity(5)};
    std::stringstream ss;
    write_permutations(ss, perms);
    CHECK(read_permutations(ss, 5) == perms);

    std::istringstream bad("0 1 1 3 4\n");
    CHECK_THROWS(read_permutations(bad, 5));
    std::istringstream short_line("0 1 2\n");
    CHECK_THROWS(read_permutations(short_line, 5));
}
