#pragma once

#include "orbloop/field.hpp"
#include "orbloop/finite_group.hpp"
#include "orbloop/graded_algebra.hpp"
#include "orbloop/group_algebra.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orbloop {

class SectorSpace;

/// Element of the sector algebra (+)_{g in G} A: finitely many
/// (group element, admissible monomial) terms with nonzero coefficients.
class SectorElement {
public:
    using Key = std::pair<int, Monomial>;  // (group element, monomial)

    explicit SectorElement(const SectorSpace& space);

    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(int g, const Monomial& m, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    SectorElement operator+(const SectorElement& o) const;
    SectorElement scaled(const Scalar& s) const;
    bool operator==(const SectorElement& o) const;

private:
    friend class SectorSpace;
    const SectorSpace* space_;
    std::map<Key, Scalar> terms_;
};

/// Element of the quotient model: terms indexed by (conjugacy class, monomial).
class QuotientElement {
public:
    using Key = std::pair<int, Monomial>;  // (class index, monomial)

    explicit QuotientElement(const SectorSpace& space);

    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(int class_index, const Monomial& m, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    QuotientElement operator+(const QuotientElement& o) const;
    QuotientElement scaled(const Scalar& s) const;
    bool operator==(const QuotientElement& o) const;

private:
    friend class SectorSpace;
    const SectorSpace* space_;
    std::map<Key, Scalar> terms_;
};

/// Element of A (x) Z(k[G]) on the basis { monomial (x) class sum }.
class TensorElement {
public:
    using Key = std::pair<Monomial, int>;  // (monomial, class index)

    explicit TensorElement(const SectorSpace& space);

    const std::map<Key, Scalar>& terms() const { return terms_; }
    void add_term(const Monomial& m, int class_index, const Scalar& c);
    bool is_zero() const { return terms_.empty(); }

    TensorElement operator+(const TensorElement& o) const;
    TensorElement operator*(const TensorElement& o) const;  // A-product (x) class-sum product
    TensorElement scaled(const Scalar& s) const;
    bool operator==(const TensorElement& o) const;

private:
    friend class SectorSpace;
    const SectorSpace* space_;
    std::map<Key, Scalar> terms_;
};

struct TheoremReport {
    bool pass = true;
    std::string counterexample;                 // empty when pass
    std::int64_t pairs_checked = 0;
    std::map<int, std::int64_t> quotient_dims;  // degree -> dimension
    std::map<int, std::int64_t> algebra_dims;   // degree -> dim of A
    int class_count = 0;
};

/// The algebraic model of the loop orbifold for a fixed (G, A, k):
/// the sector algebra with its product, conjugation action, transfer and
/// projection, the orbifold product on the quotient, and the rescaled
/// isomorphism onto A (x) Z(k[G]).
class SectorSpace {
public:
    SectorSpace(const FiniteGroup& group, const GradedPresentation& algebra,
                const FieldSpec& field);

    const FiniteGroup& group() const { return group_; }
    const GradedPresentation& algebra() const { return algebra_; }
    const FieldSpec& field() const { return field_; }
    const ConjugacyClassSet& classes() const { return classes_; }
    const ClassConstants& constants() const { return constants_; }

    SectorElement sector_element() const { return SectorElement(*this); }
    QuotientElement quotient_element() const { return QuotientElement(*this); }
    TensorElement tensor_element() const { return TensorElement(*this); }

    /// (a (x) e_g) . (b (x) e_h) = (a b) (x) e_{gh}, extended bilinearly.
    SectorElement sector_product(const SectorElement& x, const SectorElement& y) const;

    /// Relabels sector g -> h^{-1} g h; identity on the algebra factor.
    SectorElement conjugation_action(int h, const SectorElement& x) const;

    /// Basis { m (x) z_C } of the conjugation invariants, monomial degrees
    /// inside [lo, hi].
    std::vector<SectorElement> invariant_basis(int lo, int hi) const;

    /// Transfer: mu(C, m) = |Z_C| * (m (x) z_C), the sum over all |G|
    /// translates of one lift.
    SectorElement transfer_mu(const QuotientElement& x) const;

    /// Covering projection: (g, m) -> (class(g), m).
    QuotientElement projection_p(const SectorElement& x) const;

    /// The literal composite p(mu(x) . mu(y)). Requires char(k) coprime
    /// to |G| ("transfer unavailable" otherwise). Its unit is
    /// ([e], 1) / |G|^2; no hidden normalization is applied.
    QuotientElement orbifold_product(const QuotientElement& x, const QuotientElement& y) const;

    /// The rescaled isomorphism phi(C, m) = |G| * |Z_C| * (m (x) z_C),
    /// multiplicative for the orbifold product. Requires coprimality.
    TensorElement tensor_iso_phi(const QuotientElement& x) const;

    /// Exhaustive check of phi(x o y) = phi(x) phi(y) over quotient basis
    /// pairs with monomial degrees in [lo, hi], plus the per-degree
    /// dimension count dim = dim_A * c(G).
    TheoremReport verify_theorem(int lo, int hi) const;

    std::string describe_quotient_key(const QuotientElement::Key& k) const;

private:
    FiniteGroup group_;        // owned copies: the space must outlive its
    GradedPresentation algebra_;  // elements, but not its constructor inputs
    FieldSpec field_;
    ConjugacyClassSet classes_;
    ClassConstants constants_;

    void require_transfer() const;  // throws "transfer unavailable"
};

}  // namespace orbloop
