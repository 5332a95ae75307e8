#include "orbloop/group_algebra.hpp"

#include "orbloop/linalg.hpp"

#include <set>
#include <stdexcept>
#include <utility>

namespace orbloop {

GroupAlgebraElement::GroupAlgebraElement(const FiniteGroup& group, const FieldSpec& field)
    : group_(&group), field_(field), coeffs_(group.order(), Scalar::zero(field)) {}

GroupAlgebraElement GroupAlgebraElement::basis(const FiniteGroup& group, const FieldSpec& field,
                                               int g) {
    GroupAlgebraElement e(group, field);
    e.coeffs_[g] = Scalar::one(field);
    return e;
}

void GroupAlgebraElement::check_compatible(const GroupAlgebraElement& o) const {
    if (group_ != o.group_) throw std::invalid_argument("group mismatch");
    if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
    check_compatible(o);
    GroupAlgebraElement r(*group_, field_);
    for (int g = 0; g < group_->order(); ++g) r.coeffs_[g] = coeffs_[g] + o.coeffs_[g];
    return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const GroupAlgebraElement& o) const {
    check_compatible(o);
    GroupAlgebraElement r(*group_, field_);
    for (int a = 0; a < group_->order(); ++a) {
        if (coeffs_[a].is_zero()) continue;
        for (int b = 0; b < group_->order(); ++b) {
            if (o.coeffs_[b].is_zero()) continue;
            const int g = group_->mul(a, b);
            r.coeffs_[g] = r.coeffs_[g] + coeffs_[a] * o.coeffs_[b];
        }
    }
    return r;
}

GroupAlgebraElement GroupAlgebraElement::scaled(const Scalar& s) const {
    GroupAlgebraElement r(*group_, field_);
    for (int g = 0; g < group_->order(); ++g) r.coeffs_[g] = coeffs_[g] * s;
    return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
    check_compatible(o);
    return coeffs_ == o.coeffs_;
}

bool GroupAlgebraElement::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

CenterBasis class_sums(const FiniteGroup& G, const FieldSpec& k) {
    CenterBasis basis{conjugacy_classes(G), {}};
    for (const auto& cls : basis.classes.classes) {
        GroupAlgebraElement z(G, k);
        for (int g : cls) z.set_coeff(g, Scalar::one(k));
        basis.class_sums.push_back(std::move(z));
    }
    return basis;
}

std::vector<GroupAlgebraElement> center_brute_force(const FiniteGroup& G, const FieldSpec& k) {
    const int n = G.order();
    if (n > static_cast<int>(FiniteGroup::kDefaultClosureCap))
        throw std::invalid_argument("group too large for the commutant solve");

    // x e_h = e_h x  <=>  x(g h^{-1}) = x(h^{-1} g) for all g, h, i.e. each
    // equation relates two coordinates of x. Deduplicate the index pairs
    // before elimination.
    std::set<std::pair<int, int>> pairs;
    for (int h = 0; h < n; ++h)
        for (int g = 0; g < n; ++g) {
            int i = G.mul(g, G.inverse(h));
            int j = G.mul(G.inverse(h), g);
            if (i == j) continue;
            if (i > j) std::swap(i, j);
            pairs.emplace(i, j);
        }

    std::vector<std::vector<Scalar>> equations;
    equations.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        std::vector<Scalar> row(n, Scalar::zero(k));
        row[i] = Scalar::one(k);
        row[j] = -Scalar::one(k);
        equations.push_back(std::move(row));
    }

    std::vector<GroupAlgebraElement> result;
    for (auto& v : null_space(k, equations, static_cast<std::size_t>(n))) {
        GroupAlgebraElement x(G, k);
        for (int g = 0; g < n; ++g) x.set_coeff(g, std::move(v[g]));
        result.push_back(std::move(x));
    }
    return result;
}

ClassConstants class_constants(const FiniteGroup& G) {
    const FieldSpec rationals(0);
    const CenterBasis basis = class_sums(G, rationals);
    const int m = basis.classes.count();

    ClassConstants cc;
    cc.c.assign(m, std::vector<std::vector<std::int64_t>>(m, std::vector<std::int64_t>(m, 0)));
    for (int C = 0; C < m; ++C)
        for (int D = 0; D < m; ++D) {
            const GroupAlgebraElement prod = basis.class_sums[C] * basis.class_sums[D];
            // the product is central, so its coefficient is constant on each
            // class; read it at the representative
            for (int E = 0; E < m; ++E) {
                const Rational& v = prod.coeff(basis.classes.representative[E]).rational();
                if (boost::multiprecision::denominator(v) != 1)
                    throw std::logic_error("non-integer class constant");
                cc.c[C][D][E] =
                    boost::multiprecision::numerator(v).convert_to<std::int64_t>();
            }
        }
    return cc;
}

}  // namespace orbloop
