// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Takes the data directory as its single argument.

#include "orbloop/catalog.hpp"
#include "orbloop/condition_checker.hpp"
#include "orbloop/linalg.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace orbloop;

namespace {

struct Failure {
    std::string what;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure{what};
}

GradedPresentation sphere3_ring(const Catalog& catalog) {
    const LoopRingEntry* entry = catalog.manifold("S3").loop_ring_for(7);
    require(entry != nullptr, "catalog has no S3 loop ring");
    return *entry->presentation;
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

// 1. order-120 group: c(G) = 9, dim Z(k[G]) = 9, assembled dims = 9 x sphere
//    series on [-6, 8], over F_7 and Q
void criterion1(const Catalog& catalog) {
    const FiniteGroup G = FiniteGroup::special_linear_2(5);
    require(G.order() == 120, "group order != 120");
    require(conjugacy_classes(G).count() == 9, "c(G) != 9");

    const GradedPresentation A = sphere3_ring(catalog);
    for (const std::int64_t ch : {std::int64_t{7}, std::int64_t{0}}) {
        const FieldSpec k(ch);
        require(center_brute_force(G, k).size() == 9, "dim Z(k[G]) != 9");

        OrbifoldProblem problem{catalog.manifold("S3"), catalog.ambient("Spin(3)"), G, k};
        const OrbifoldReport rep = assemble(problem, std::pair{-6, 8});
        require(rep.applicable, "assembly not applicable: " + rep.reason);
        const auto base = A.poincare_series(-6, 8);
        for (const auto& [d, dim] : rep.dimension_table)
            require(dim == 9 * base.at(d),
                    "dimension mismatch at degree " + std::to_string(d));
    }
}

// 2. p o mu = |G| id on every quotient basis vector; span(Im mu) = invariant
//    span, for five small groups over F_7 and Q
void criterion2(const Catalog& catalog) {
    const GradedPresentation A = sphere3_ring(catalog);
    for (const auto& name : {"Z2", "Z3", "S3", "D4", "Q8"}) {
        const FiniteGroup G = FiniteGroup::named(name);
        for (const std::int64_t ch : {std::int64_t{7}, std::int64_t{0}}) {
            const FieldSpec k(ch);
            const SectorSpace space(G, A, k);
            const Scalar order = Scalar::of(k, G.order());

            std::vector<SectorElement> image;
            for (int c = 0; c < space.classes().count(); ++c)
                for (const auto& m : A.basis(-6, 8)) {
                    QuotientElement x = space.quotient_element();
                    x.add_term(c, m, Scalar::one(k));
                    const SectorElement mu = space.transfer_mu(x);
                    require(space.projection_p(mu) == x.scaled(order),
                            std::string("p o mu != |G| id for ") + name);
                    image.push_back(mu);
                }

            // compare spans degreewise via coordinates on (g, monomial) keys
            const std::vector<SectorElement> inv = space.invariant_basis(-6, 8);
            std::map<SectorElement::Key, std::size_t> index;
            for (const auto& v : image)
                for (const auto& [key, c] : v.terms())
                    index.emplace(key, index.size());
            for (const auto& v : inv)
                for (const auto& [key, c] : v.terms())
                    index.emplace(key, index.size());
            auto coords = [&](const SectorElement& v) {
                std::vector<Scalar> row(index.size(), Scalar::zero(k));
                for (const auto& [key, c] : v.terms()) row[index.at(key)] = c;
                return row;
            };
            RowReducer rim(k, index.size()), rinv(k, index.size());
            for (const auto& v : image) rim.add_row(coords(v));
            for (const auto& v : inv) rinv.add_row(coords(v));
            bool spans_equal = rim.rank() == rinv.rank();
            for (const auto& v : image)
                spans_equal = spans_equal && rinv.in_span(coords(v));
            for (const auto& v : inv)
                spans_equal = spans_equal && rim.in_span(coords(v));
            require(spans_equal, std::string("Im mu != invariants for ") + name);
        }
    }
}

// 3. class-sum span = brute-force commutant span, catalog groups of order
//    <= 24 plus the order-120 group, over F_7 and Q
void criterion3() {
    std::vector<FiniteGroup> groups;
    for (const auto& name : catalog_group_names()) {
        FiniteGroup G = FiniteGroup::named(name);
        if (G.order() <= 24) groups.push_back(std::move(G));
    }
    groups.push_back(FiniteGroup::special_linear_2(5));
    for (const auto& G : groups)
        for (const std::int64_t ch : {std::int64_t{7}, std::int64_t{0}}) {
            const FieldSpec k(ch);
            require(same_span(k, class_sums(G, k).class_sums, center_brute_force(G, k),
                              G.order()),
                    "center oracle disagrees for " + G.name());
        }
}

// 4. phi(x o y) = phi(x) phi(y) exhaustively on [-6, 8] for three groups
//    over F_7
void criterion4(const Catalog& catalog) {
    const GradedPresentation A = sphere3_ring(catalog);
    for (const auto& name : {"Z2", "S3", "Q8"}) {
        const SectorSpace space(FiniteGroup::named(name), A, FieldSpec(7));
        const TheoremReport r = space.verify_theorem(-6, 8);
        require(r.pass, std::string("theorem fails for ") + name + ": " + r.counterexample);
        require(r.pairs_checked > 0, "no pairs checked");
    }
}

// 5. trivial G: the orbifold product equals the product of A on all basis
//    pairs in the window
void criterion5(const Catalog& catalog) {
    const GradedPresentation A = sphere3_ring(catalog);
    const FieldSpec k(0);
    const SectorSpace space(FiniteGroup::named("trivial"), A, k);
    for (const auto& m : A.basis(-6, 8))
        for (const auto& n : A.basis(-6, 8)) {
            QuotientElement x = space.quotient_element();
            x.add_term(0, m, Scalar::one(k));
            QuotientElement y = space.quotient_element();
            y.add_term(0, n, Scalar::one(k));
            const QuotientElement got = space.orbifold_product(x, y);

            const GradedElement prod = GradedElement::monomial(A, k, m, Scalar::one(k)) *
                                       GradedElement::monomial(A, k, n, Scalar::one(k));
            QuotientElement want = space.quotient_element();
            for (const auto& [mono, c] : prod.terms()) want.add_term(0, mono, c);
            require(got == want, "trivial-group product != algebra product at " +
                                     A.monomial_name(m) + " * " + A.monomial_name(n));
        }
}

// 6. F_5 with the order-120 group rejected with reason "char divides |G|";
//    F_7 accepted
void criterion6(const Catalog& catalog) {
    const FiniteGroup G = FiniteGroup::special_linear_2(5);
    OrbifoldProblem rejected{catalog.manifold("S3"), catalog.ambient("Spin(3)"), G,
                             FieldSpec(5)};
    const OrbifoldReport r5 = assemble(rejected, std::pair{-6, 8});
    require(!r5.applicable, "F_5 problem was not rejected");
    require(r5.reason == "char divides |G|", "wrong rejection reason: " + r5.reason);

    OrbifoldProblem accepted{catalog.manifold("S3"), catalog.ambient("Spin(3)"), G,
                             FieldSpec(7)};
    require(assemble(accepted, std::pair{-6, 8}).applicable, "F_7 problem rejected");
}

// 7. the TNCZ remark list, reproduced exactly by tncz_lookup
void criterion7() {
    auto cp = [](int n) {
        ManifoldEntry m;
        m.dim = 2 * n;
        m.euler_characteristic = n + 1;
        m.tncz_rule.kind = TnczRule::Kind::EulerModP;
        return m;
    };
    auto stiefel = [](int mm, int nn) {
        ManifoldEntry m;
        m.tncz_rule.kind = TnczRule::Kind::SoStiefel;
        m.tncz_rule.m = mm;
        m.tncz_rule.n = nn;
        return m;
    };

    // (CP^n, p | n+1) -> true, (CP^n, p does not divide n+1) -> false
    require(tncz_lookup(cp(6), 7) == Verdict::True, "CP6 at p=7");
    require(tncz_lookup(cp(4), 5) == Verdict::True, "CP4 at p=5");
    require(tncz_lookup(cp(2), 7) == Verdict::False, "CP2 at p=7");
    require(tncz_lookup(cp(3), 3) == Verdict::False, "CP3 at p=3");

    // SU/Sp quotient families -> true for sampled (m, n, p)
    ManifoldEntry su;
    su.tncz_rule.kind = TnczRule::Kind::Always;
    for (std::int64_t p : {2, 3, 5, 7, 11})
        require(tncz_lookup(su, p) == Verdict::True, "SU/Sp family at p");

    // U(m+n)/(U(m) x U(n)) -> false
    ManifoldEntry grass;
    grass.tncz_rule.kind = TnczRule::Kind::Never;
    for (std::int64_t p : {2, 3, 5, 7, 11})
        require(tncz_lookup(grass, p) == Verdict::False, "U Grassmannian at p");

    // SO family: p > 2 iff n odd; p = 2 non-matching cases -> unknown
    require(tncz_lookup(stiefel(2, 5), 3) == Verdict::True, "SO(7)/SO(5) at p=3");
    require(tncz_lookup(stiefel(2, 5), 7) == Verdict::True, "SO(7)/SO(5) at p=7");
    require(tncz_lookup(stiefel(3, 4), 3) == Verdict::False, "SO(7)/SO(4) at p=3");
    require(tncz_lookup(stiefel(3, 4), 7) == Verdict::False, "SO(7)/SO(4) at p=7");
    require(tncz_lookup(stiefel(5, 4), 2) == Verdict::Unknown, "SO(9)/SO(4) at p=2");
    require(tncz_lookup(stiefel(6, 7), 2) == Verdict::Unknown, "SO(13)/SO(7) at p=2");
}

// 8. Koszul commutativity, associativity, unit law for every shipped
//    presentation, in characteristics 0, 2, 7
void criterion8(const Catalog& catalog) {
    int presentations = 0;
    for (const auto& [name, manifold] : catalog.manifolds)
        for (const auto& entry : manifold.loop_ring)
            for (const std::int64_t ch : {std::int64_t{0}, std::int64_t{2}, std::int64_t{7}}) {
                if (!entry.condition.matches(ch)) continue;
                const ValidationReport r =
                    validate_presentation(*entry.presentation, FieldSpec(ch), -6, 8);
                require(r.ok, "laws fail for " + entry.presentation->name() + " in char " +
                                  std::to_string(ch) + ": " + r.message);
                require(r.checks_run > 0, "no checks run");
                ++presentations;
            }
    require(presentations > 0, "catalog ships no presentations");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <data-dir>\n";
        return 2;
    }
    Catalog catalog;
    try {
        catalog.merge_file(std::string(argv[1]) + "/manifolds.json");
    } catch (const std::exception& e) {
        std::cerr << "cannot load catalog: " << e.what() << "\n";
        return 2;
    }

    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"1 order-120 group: c(G)=9, dim Z=9, assembled dims on [-6,8]",
         [&] { criterion1(catalog); }},
        {"2 transfer identities: p o mu = |G| id, Im mu = invariants",
         [&] { criterion2(catalog); }},
        {"3 center oracle equivalence on catalog groups and the order-120 group",
         [&] { criterion3(); }},
        {"4 rescaled isomorphism multiplicative on all basis pairs in [-6,8]",
         [&] { criterion4(catalog); }},
        {"5 trivial group degenerates to the coefficient algebra product",
         [&] { criterion5(catalog); }},
        {"6 hypothesis gating: F_5 rejected with reason, F_7 accepted",
         [&] { criterion6(catalog); }},
        {"7 TNCZ fixture table reproduced by tncz_lookup", [&] { criterion7(); }},
        {"8 graded-algebra law suite on every shipped presentation",
         [&] { criterion8(catalog); }},
    };

    int failures = 0;
    for (const auto& [label, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            run();
        } catch (const Failure& f) {
            error = f.what;
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (error.empty()) {
            std::cout << "PASS criterion " << label << " (" << ms << " ms)\n";
        } else {
            std::cout << "FAIL criterion " << label << ": " << error << "\n";
            ++failures;
        }
    }
    return failures == 0 ? 0 : 1;
}
