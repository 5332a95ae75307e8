#pragma once

#include "orbloop/field.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbloop {

/// Exponent vector over the presentation's generators, in fixed order.
using Monomial = std::vector<int>;

/// One term of a top-power rewrite, with a field-independent integer
/// coefficient (interpreted in whichever field is in play).
struct RewriteTerm {
    Monomial monomial;
    std::int64_t coefficient;
};

struct GradedGenerator {
    std::string name;
    int degree;                        // negative degrees are first-class
    std::optional<int> bound;          // admissible exponents are [0, bound)
    std::vector<RewriteTerm> rewrite;  // expansion of generator^bound
};

/// A finitely presented graded-commutative algebra with admissible-monomial
/// normal form: products g1^a1 ... gm^am with a_i < bound_i, relations given
/// by per-generator top-power rewrites. Covers exterior, polynomial,
/// truncated polynomial algebras and their tensor products.
class GradedPresentation {
public:
    GradedPresentation(std::string name, std::vector<GradedGenerator> generators,
                       std::string provenance = {});

    const std::string& name() const { return name_; }
    const std::string& provenance() const { return provenance_; }
    const std::vector<GradedGenerator>& generators() const { return generators_; }
    int generator_count() const { return static_cast<int>(generators_.size()); }

    int degree_of(const Monomial& m) const;
    bool is_admissible(const Monomial& m) const;
    Monomial unit_monomial() const { return Monomial(generators_.size(), 0); }

    std::string monomial_name(const Monomial& m) const;

    /// Admissible monomials with degree in [lo, hi], ordered by
    /// (degree, exponent vector). Throws if the count is not finite
    /// (an unbounded generator of degree zero, or unbounded generators
    /// of both signs).
    std::vector<Monomial> basis(int lo, int hi) const;

    /// Dimension per degree inside the window.
    std::map<int, std::int64_t> poincare_series(int lo, int hi) const;

private:
    std::string name_;
    std::vector<GradedGenerator> generators_;
    std::string provenance_;
};

/// An element: finitely many admissible monomials with nonzero coefficients.
class GradedElement {
public:
    GradedElement(const GradedPresentation& presentation, const FieldSpec& field);

    static GradedElement monomial(const GradedPresentation& p, const FieldSpec& k,
                                  const Monomial& m, Scalar coeff);
    static GradedElement unit(const GradedPresentation& p, const FieldSpec& k);

    const GradedPresentation& presentation() const { return *presentation_; }
    const FieldSpec& field() const { return field_; }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// Degree when homogeneous; throws on mixed degrees or zero.
    int degree() const;

    GradedElement operator+(const GradedElement& o) const;
    GradedElement operator*(const GradedElement& o) const;
    GradedElement scaled(const Scalar& s) const;
    bool operator==(const GradedElement& o) const;

    /// Adds coeff * m (reducing to normal form if m is inadmissible).
    void add_term(const Monomial& m, const Scalar& coeff);

    /// Adds coeff * u * v with the Koszul reordering sign, then reduces.
    void add_product(const Monomial& u, const Monomial& v, const Scalar& coeff);

    std::string str() const;

private:
    const GradedPresentation* presentation_;
    FieldSpec field_;
    std::map<Monomial, Scalar> terms_;

    void check_compatible(const GradedElement& o) const;
};

struct ValidationReport {
    bool ok = true;
    std::string message = "ok";
    std::int64_t checks_run = 0;
};

/// Checks associativity, Koszul graded commutativity, and the unit law on
/// all basis monomial pairs/triples with degrees inside the window.
/// Violations are report content, not exceptions.
ValidationReport validate_presentation(const GradedPresentation& p, const FieldSpec& k,
                                       int lo, int hi);

/// The presentation of A (x) B with A's generators first.
GradedPresentation tensor_presentation(const GradedPresentation& a,
                                       const GradedPresentation& b);

}  // namespace orbloop
