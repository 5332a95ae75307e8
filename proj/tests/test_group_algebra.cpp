#include "orbloop/group_algebra.hpp"

#include "orbloop/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace orbloop;

namespace {

GroupAlgebraElement random_element(const FiniteGroup& G, const FieldSpec& k, std::mt19937& rng) {
    std::uniform_int_distribution<std::int64_t> coeff(-5, 5);
    GroupAlgebraElement x(G, k);
    for (int g = 0; g < G.order(); ++g) x.set_coeff(g, Scalar::of(k, coeff(rng)));
    return x;
}

bool same_span(const FieldSpec& k, const std::vector<GroupAlgebraElement>& a,
               const std::vector<GroupAlgebraElement>& b, std::size_t columns) {
    RowReducer ra(k, columns), rb(k, columns);
    for (const auto& x : a) ra.add_row(x.coefficients());
    for (const auto& x : b) rb.add_row(x.coefficients());
    if (ra.rank() != rb.rank()) return false;
    for (const auto& x : a)
        if (!rb.in_span(x.coefficients())) return false;
    for (const auto& x : b)
        if (!ra.in_span(x.coefficients())) return false;
    return true;
}

}  // namespace

TEST_CASE("convolution product in k[Z/2]") {
    const FiniteGroup z2 = FiniteGroup::named("Z2");
    const FieldSpec q(0);

    GroupAlgebraElement x(z2, q);
    x.set_coeff(0, Scalar::one(q));
    x.set_coeff(1, Scalar::one(q));
    const GroupAlgebraElement sq = x * x;  // (e + s)^2 = 2e + 2s
    CHECK(sq.coeff(0) == Scalar::of(q, 2));
    CHECK(sq.coeff(1) == Scalar::of(q, 2));

    const FieldSpec f2(2);
    GroupAlgebraElement y(z2, f2);
    y.set_coeff(0, Scalar::one(f2));
    y.set_coeff(1, Scalar::one(f2));
    CHECK((y * y).is_zero());
}

TEST_CASE("identity element is a unit") {
    const FiniteGroup s3 = FiniteGroup::named("S3");
    const FieldSpec f7(7);
    const GroupAlgebraElement e = GroupAlgebraElement::basis(s3, f7, s3.identity());
    std::mt19937 rng(3);
    for (int t = 0; t < 20; ++t) {
        const GroupAlgebraElement x = random_element(s3, f7, rng);
        CHECK(e * x == x);
        CHECK(x * e == x);
    }
}

TEST_CASE("mismatch errors") {
    const FiniteGroup z2 = FiniteGroup::named("Z2");
    const FiniteGroup z3 = FiniteGroup::named("Z3");
    const FieldSpec q(0), f7(7);
    CHECK_THROWS_WITH(GroupAlgebraElement(z2, q) * GroupAlgebraElement(z3, q),
                      "group mismatch");
    CHECK_THROWS_WITH(GroupAlgebraElement(z2, q) * GroupAlgebraElement(z2, f7),
                      "field mismatch");
}

TEST_CASE("class sums") {
    const FieldSpec q(0), f7(7);
    CHECK(class_sums(FiniteGroup::named("S3"), q).class_sums.size() == 3);
    const CenterBasis trivial = class_sums(FiniteGroup::named("trivial"), q);
    CHECK(trivial.class_sums.size() == 1);
    CHECK(trivial.class_sums[0].coeff(0).is_one());
    CHECK(class_sums(FiniteGroup::special_linear_2(5), f7).class_sums.size() == 9);
}

TEST_CASE("class sums are central") {
    const FieldSpec f7(7);
    for (const auto& name : {"S3", "D4", "Q8", "S4"}) {
        const FiniteGroup G = FiniteGroup::named(name);
        for (const auto& z : class_sums(G, f7).class_sums)
            for (int g = 0; g < G.order(); ++g) {
                const GroupAlgebraElement eg = GroupAlgebraElement::basis(G, f7, g);
                CHECK(z * eg == eg * z);
            }
    }
}

TEST_CASE("brute-force commutant dimensions") {
    const FieldSpec q(0);
    CHECK(center_brute_force(FiniteGroup::named("Z2"), q).size() == 2);  // abelian
    CHECK(center_brute_force(FiniteGroup::named("S3"), q).size() == 3);
    CHECK(center_brute_force(FiniteGroup::named("Q8"), q).size() == 5);
}

TEST_CASE("class-sum span equals commutant span (oracle equivalence)") {
    for (const auto& name : {"S3", "D5", "Q8", "Z6"}) {
        const FiniteGroup G = FiniteGroup::named(name);
        for (const std::int64_t ch : {std::int64_t{0}, std::int64_t{7}}) {
            const FieldSpec k(ch);
            CHECK(same_span(k, class_sums(G, k).class_sums, center_brute_force(G, k),
                            G.order()));
        }
    }
}

TEST_CASE("class multiplication constants") {
    const FiniteGroup z2 = FiniteGroup::named("Z2");
    const ClassConstants cz2 = class_constants(z2);
    // z_s z_s = z_e
    CHECK(cz2.at(1, 1, 0) == 1);
    CHECK(cz2.at(1, 1, 1) == 0);

    const FiniteGroup s3 = FiniteGroup::named("S3");
    const ConjugacyClassSet cs = conjugacy_classes(s3);
    const ClassConstants c = class_constants(s3);
    // locate the transposition class (size 3) and the 3-cycle class (size 2)
    int T = -1, R = -1, E = -1;
    for (int i = 0; i < cs.count(); ++i) {
        if (cs.size_of(i) == 3) T = i;
        if (cs.size_of(i) == 2) R = i;
        if (cs.size_of(i) == 1) E = i;
    }
    REQUIRE(T >= 0);
    REQUIRE(R >= 0);
    // z_T z_T = 3 z_e + 3 z_R
    CHECK(c.at(T, T, E) == 3);
    CHECK(c.at(T, T, R) == 3);
    CHECK(c.at(T, T, T) == 0);
}

TEST_CASE("class constant identities hold exhaustively") {
    for (const auto& name : {"S3", "S4", "D6", "Q8", "Z5"}) {
        const FiniteGroup G = FiniteGroup::named(name);
        const ConjugacyClassSet cs = conjugacy_classes(G);
        const ClassConstants c = class_constants(G);
        const int E = cs.class_of[G.identity()];
        for (int C = 0; C < cs.count(); ++C)
            for (int D = 0; D < cs.count(); ++D) {
                CHECK(c.at(E, C, D) == (C == D ? 1 : 0));
                std::int64_t pairs = 0;
                for (int F = 0; F < cs.count(); ++F) {
                    CHECK(c.at(C, D, F) == c.at(D, C, F));
                    CHECK(c.at(C, D, F) >= 0);
                    pairs += c.at(C, D, F) * cs.size_of(F);
                }
                CHECK(pairs == static_cast<std::int64_t>(cs.size_of(C)) * cs.size_of(D));
            }
    }
}

TEST_CASE("convolution is associative on random triples") {
    std::mt19937 rng(11);
    for (const auto& name : {"S3", "Q8", "D4"}) {
        const FiniteGroup G = FiniteGroup::named(name);
        for (const std::int64_t ch : {std::int64_t{0}, std::int64_t{7}}) {
            const FieldSpec k(ch);
            for (int t = 0; t < 50; ++t) {
                const auto x = random_element(G, k, rng);
                const auto y = random_element(G, k, rng);
                const auto z = random_element(G, k, rng);
                CHECK((x * y) * z == x * (y * z));
            }
        }
    }
}

TEST_CASE("center dimension equals class count across fields") {
    for (const auto& name : {"trivial", "Z4", "S3", "S4", "D6", "Q8"}) {
        const FiniteGroup G = FiniteGroup::named(name);
        const int c = conjugacy_classes(G).count();
        for (const std::int64_t ch : {std::int64_t{0}, std::int64_t{7}, std::int64_t{13}})
            CHECK(center_brute_force(G, FieldSpec(ch)).size() == static_cast<std::size_t>(c));
    }
}
