#include "orbloop/finite_group.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace orbloop;

namespace {

Permutation transposition01(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    std::swap(p[0], p[1]);
    return p;
}

Permutation full_cycle(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

// brute-force isomorphism search, small orders only
bool tables_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    std::vector<int> f(n);
    std::iota(f.begin(), f.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            for (int y = 0; y < n && ok; ++y)
                ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
        if (ok) return true;
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
}

}  // namespace

TEST_CASE("closure from generators") {
    const FiniteGroup s3 =
        FiniteGroup::from_permutations({transposition01(3), full_cycle(3)}, 3);
    CHECK(s3.order() == 6);

    CHECK(FiniteGroup::from_permutations({}, 1).order() == 1);
    CHECK(FiniteGroup::from_permutations({full_cycle(5)}, 5).order() == 5);
}

TEST_CASE("closure error paths") {
    CHECK_THROWS_WITH(FiniteGroup::from_permutations({full_cycle(9), transposition01(9)}, 9,
                                                     100),
                      "group too large");
    CHECK_THROWS(FiniteGroup::from_permutations({{0, 0, 1}}, 3));  // not a bijection
    CHECK_THROWS(FiniteGroup::from_permutations({{0, 1}}, 3));     // wrong domain
}

TEST_CASE("determinant-1 matrix groups over small primes") {
    CHECK(FiniteGroup::special_linear_2(5).order() == 120);
    CHECK(FiniteGroup::special_linear_2(2).order() == 6);
    CHECK(FiniteGroup::special_linear_2(3).order() == 24);
    CHECK_THROWS(FiniteGroup::special_linear_2(4));
    CHECK_THROWS_WITH(FiniteGroup::special_linear_2(13), "group too large");
}

TEST_CASE("conjugacy classes of small groups") {
    const FiniteGroup s3 = FiniteGroup::named("S3");
    const ConjugacyClassSet cs = conjugacy_classes(s3);
    CHECK(cs.count() == 3);
    std::vector<int> sizes;
    for (const auto& c : cs.classes) sizes.push_back(static_cast<int>(c.size()));
    std::sort(sizes.begin(), sizes.end());
    CHECK(sizes == std::vector<int>{1, 2, 3});

    CHECK(conjugacy_classes(FiniteGroup::named("trivial")).count() == 1);
    CHECK(conjugacy_classes(FiniteGroup::special_linear_2(5)).count() == 9);
}

TEST_CASE("orbit-stabilizer and partition invariants") {
    for (const auto& name : catalog_group_names()) {
        const FiniteGroup G = FiniteGroup::named(name);
        if (G.order() > 24 && name != "SL2_5") continue;
        const ConjugacyClassSet cs = conjugacy_classes(G);

        int total = 0;
        for (int c = 0; c < cs.count(); ++c) {
            CHECK(cs.size_of(c) * cs.centralizer_order[c] == G.order());
            total += cs.size_of(c);
        }
        CHECK(total == G.order());
        // identity in a singleton class
        CHECK(cs.size_of(cs.class_of[G.identity()]) == 1);
    }
}

TEST_CASE("class count is invariant under relabeling") {
    const FiniteGroup G = FiniteGroup::named("D4");
    const int n = G.order();
    std::mt19937 rng(99);
    std::vector<int> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);

    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[relabel[a]][relabel[b]] = relabel[G.mul(a, b)];
    const FiniteGroup shuffled = FiniteGroup::from_table(std::move(table));
    CHECK(conjugacy_classes(shuffled).count() == conjugacy_classes(G).count());
}

TEST_CASE("redundant generators give the same group up to canonical relabeling") {
    const Permutation t = transposition01(3), c = full_cycle(3);
    Permutation tc(3);
    for (int i = 0; i < 3; ++i) tc[i] = c[t[i]];
    const FiniteGroup a = FiniteGroup::from_permutations({t, c}, 3);
    const FiniteGroup b = FiniteGroup::from_permutations({t, c, tc}, 3);
    CHECK(tables_isomorphic(a, b));
}

TEST_CASE("table constructor rejects malformed input") {
    CHECK_THROWS(FiniteGroup::from_table({{0, 1}, {0, 1}}));        // not Latin
    // identity need not sit at index 0
    CHECK_NOTHROW(FiniteGroup::from_table({{1, 0}, {0, 1}}));
    CHECK(FiniteGroup::from_table({{1, 0}, {0, 1}}).identity() == 1);
    CHECK_THROWS(FiniteGroup::from_table(
        {{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));                        // no identity
    CHECK_THROWS(FiniteGroup::from_table({{0, 1, 2}, {1, 2, 0}}));  // not square
}

TEST_CASE("named catalog") {
    CHECK(FiniteGroup::named("Z12").order() == 12);
    CHECK(FiniteGroup::named("S5").order() == 120);
    CHECK(FiniteGroup::named("D12").order() == 24);
    CHECK(FiniteGroup::named("Q8").order() == 8);
    CHECK(conjugacy_classes(FiniteGroup::named("Q8")).count() == 5);
    CHECK_THROWS(FiniteGroup::named("S6"));
    CHECK_THROWS(FiniteGroup::named("M11"));
    for (const auto& name : catalog_group_names()) CHECK_NOTHROW(FiniteGroup::named(name));
}
