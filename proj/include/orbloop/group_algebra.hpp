#pragma once

#include "orbloop/field.hpp"
#include "orbloop/finite_group.hpp"

#include <cstdint>
#include <vector>

namespace orbloop {

/// An element of the group algebra k[G]: one coefficient per group element.
class GroupAlgebraElement {
public:
    GroupAlgebraElement(const FiniteGroup& group, const FieldSpec& field);

    static GroupAlgebraElement basis(const FiniteGroup& group, const FieldSpec& field, int g);

    const FiniteGroup& group() const { return *group_; }
    const FieldSpec& field() const { return field_; }
    const Scalar& coeff(int g) const { return coeffs_[g]; }
    void set_coeff(int g, Scalar s) { coeffs_[g] = std::move(s); }

    GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
    GroupAlgebraElement operator*(const GroupAlgebraElement& o) const;  // convolution
    GroupAlgebraElement scaled(const Scalar& s) const;

    bool operator==(const GroupAlgebraElement& o) const;
    bool is_zero() const;

    const std::vector<Scalar>& coefficients() const { return coeffs_; }

private:
    const FiniteGroup* group_;
    FieldSpec field_;
    std::vector<Scalar> coeffs_;

    void check_compatible(const GroupAlgebraElement& o) const;
};

/// The class sums z_C = sum of a conjugacy class, the canonical basis of
/// the center Z(k[G]); one per class, ordered by class representative.
struct CenterBasis {
    ConjugacyClassSet classes;
    std::vector<GroupAlgebraElement> class_sums;
};

CenterBasis class_sums(const FiniteGroup& G, const FieldSpec& k);

/// Independent oracle: basis of { x : x e_g = e_g x for all g }, found by
/// exact Gaussian elimination of the commutant system.
std::vector<GroupAlgebraElement> center_brute_force(const FiniteGroup& G, const FieldSpec& k);

/// Integer structure constants of the center: z_C z_D = sum_E c[C][D][E] z_E.
/// Field-independent; computed over Q by multiplying class sums.
struct ClassConstants {
    std::vector<std::vector<std::vector<std::int64_t>>> c;

    std::int64_t at(int C, int D, int E) const { return c[C][D][E]; }
    int count() const { return static_cast<int>(c.size()); }
};

ClassConstants class_constants(const FiniteGroup& G);

}  // namespace orbloop
