#include "orbloop/sector_model.hpp"

#include <stdexcept>

namespace orbloop {

namespace {

template <typename Map, typename Key>
void accumulate(Map& terms, const Key& key, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(key, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms.erase(it);
    }
}

void check_same_space(const void* sa, const void* sb) {
    if (sa != sb) throw std::invalid_argument("sector space mismatch");
}

}  // namespace

SectorElement::SectorElement(const SectorSpace& space) : space_(&space) {}

void SectorElement::add_term(int g, const Monomial& m, const Scalar& c) {
    if (g < 0 || g >= space_->group().order())
        throw std::invalid_argument("sector index out of range");
    if (!space_->algebra().is_admissible(m)) {
        // reduce through the graded algebra, then scatter back into the sector
        GradedElement e = GradedElement::monomial(space_->algebra(), space_->field(), m, c);
        for (const auto& [mm, cc] : e.terms()) accumulate(terms_, Key{g, mm}, cc);
        return;
    }
    accumulate(terms_, Key{g, m}, c);
}

SectorElement SectorElement::operator+(const SectorElement& o) const {
    check_same_space(space_, o.space_);
    SectorElement r(*this);
    for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, c);
    return r;
}

SectorElement SectorElement::scaled(const Scalar& s) const {
    SectorElement r(*space_);
    for (const auto& [k, c] : terms_) accumulate(r.terms_, k, c * s);
    return r;
}

bool SectorElement::operator==(const SectorElement& o) const {
    check_same_space(space_, o.space_);
    return terms_ == o.terms_;
}

QuotientElement::QuotientElement(const SectorSpace& space) : space_(&space) {}

void QuotientElement::add_term(int class_index, const Monomial& m, const Scalar& c) {
    if (class_index < 0 || class_index >= space_->classes().count())
        throw std::invalid_argument("class index out of range");
    if (!space_->algebra().is_admissible(m)) {
        GradedElement e = GradedElement::monomial(space_->algebra(), space_->field(), m, c);
        for (const auto& [mm, cc] : e.terms()) accumulate(terms_, Key{class_index, mm}, cc);
        return;
    }
    accumulate(terms_, Key{class_index, m}, c);
}

QuotientElement QuotientElement::operator+(const QuotientElement& o) const {
    check_same_space(space_, o.space_);
    QuotientElement r(*this);
    for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, c);
    return r;
}

QuotientElement QuotientElement::scaled(const Scalar& s) const {
    QuotientElement r(*space_);
    for (const auto& [k, c] : terms_) accumulate(r.terms_, k, c * s);
    return r;
}

bool QuotientElement::operator==(const QuotientElement& o) const {
    check_same_space(space_, o.space_);
    return terms_ == o.terms_;
}

TensorElement::TensorElement(const SectorSpace& space) : space_(&space) {}

void TensorElement::add_term(const Monomial& m, int class_index, const Scalar& c) {
    if (class_index < 0 || class_index >= space_->classes().count())
        throw std::invalid_argument("class index out of range");
    if (!space_->algebra().is_admissible(m)) {
        GradedElement e = GradedElement::monomial(space_->algebra(), space_->field(), m, c);
        for (const auto& [mm, cc] : e.terms()) accumulate(terms_, Key{mm, class_index}, cc);
        return;
    }
    accumulate(terms_, Key{m, class_index}, c);
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
    check_same_space(space_, o.space_);
    TensorElement r(*this);
    for (const auto& [k, c] : o.terms_) accumulate(r.terms_, k, c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    check_same_space(space_, o.space_);
    const auto& space = *space_;
    const auto& constants = space.constants();
    TensorElement r(space);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            const GradedElement prod =
                GradedElement::monomial(space.algebra(), space.field(), k1.first, c1 * c2) *
                GradedElement::monomial(space.algebra(), space.field(), k2.first,
                                        Scalar::one(space.field()));
            for (int E = 0; E < space.classes().count(); ++E) {
                const std::int64_t n = constants.at(k1.second, k2.second, E);
                if (n == 0) continue;
                const Scalar factor = Scalar::of(space.field(), n);
                for (const auto& [m, c] : prod.terms())
                    accumulate(r.terms_, Key{m, E}, c * factor);
            }
        }
    return r;
}

TensorElement TensorElement::scaled(const Scalar& s) const {
    TensorElement r(*space_);
    for (const auto& [k, c] : terms_) accumulate(r.terms_, k, c * s);
    return r;
}

bool TensorElement::operator==(const TensorElement& o) const {
    check_same_space(space_, o.space_);
    return terms_ == o.terms_;
}

SectorSpace::SectorSpace(const FiniteGroup& group, const GradedPresentation& algebra,
                         const FieldSpec& field)
    : group_(group), algebra_(algebra), field_(field),
      classes_(conjugacy_classes(group)), constants_(class_constants(group)) {}

void SectorSpace::require_transfer() const {
    if (!field_.is_coprime_to(group_.order()))
        throw std::domain_error("transfer unavailable: characteristic divides |G|");
}

SectorElement SectorSpace::sector_product(const SectorElement& x, const SectorElement& y) const {
    if (x.space_ != this || y.space_ != this)
        throw std::invalid_argument("sector space mismatch");
    SectorElement r(*this);
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            const int target = group_.mul(kx.first, ky.first);
            const GradedElement prod =
                GradedElement::monomial(algebra_, field_, kx.second, cx * cy) *
                GradedElement::monomial(algebra_, field_, ky.second, Scalar::one(field_));
            for (const auto& [m, c] : prod.terms())
                accumulate(r.terms_, SectorElement::Key{target, m}, c);
        }
    return r;
}

SectorElement SectorSpace::conjugation_action(int h, const SectorElement& x) const {
    if (h < 0 || h >= group_.order()) throw std::invalid_argument("element out of range");
    SectorElement r(*this);
    for (const auto& [k, c] : x.terms())
        accumulate(r.terms_, SectorElement::Key{group_.conjugate(k.first, h), k.second}, c);
    return r;
}

std::vector<SectorElement> SectorSpace::invariant_basis(int lo, int hi) const {
    std::vector<SectorElement> out;
    for (const auto& m : algebra_.basis(lo, hi))
        for (int C = 0; C < classes_.count(); ++C) {
            SectorElement v(*this);
            for (int g : classes_.classes[C]) v.add_term(g, m, Scalar::one(field_));
            out.push_back(std::move(v));
        }
    return out;
}

SectorElement SectorSpace::transfer_mu(const QuotientElement& x) const {
    if (x.space_ != this) throw std::invalid_argument("sector space mismatch");
    SectorElement r(*this);
    for (const auto& [k, c] : x.terms()) {
        const Scalar weight = c * Scalar::of(field_, classes_.centralizer_order[k.first]);
        for (int g : classes_.classes[k.first])
            accumulate(r.terms_, SectorElement::Key{g, k.second}, weight);
    }
    return r;
}

QuotientElement SectorSpace::projection_p(const SectorElement& x) const {
    if (x.space_ != this) throw std::invalid_argument("sector space mismatch");
    QuotientElement r(*this);
    for (const auto& [k, c] : x.terms())
        accumulate(r.terms_, QuotientElement::Key{classes_.class_of[k.first], k.second}, c);
    return r;
}

QuotientElement SectorSpace::orbifold_product(const QuotientElement& x,
                                              const QuotientElement& y) const {
    require_transfer();
    return projection_p(sector_product(transfer_mu(x), transfer_mu(y)));
}

TensorElement SectorSpace::tensor_iso_phi(const QuotientElement& x) const {
    require_transfer();
    if (x.space_ != this) throw std::invalid_argument("sector space mismatch");
    TensorElement r(*this);
    const Scalar order = Scalar::of(field_, group_.order());
    for (const auto& [k, c] : x.terms()) {
        const Scalar lambda = order * Scalar::of(field_, classes_.centralizer_order[k.first]);
        accumulate(r.terms_, TensorElement::Key{k.second, k.first}, c * lambda);
    }
    return r;
}

TheoremReport SectorSpace::verify_theorem(int lo, int hi) const {
    require_transfer();
    TheoremReport rep;
    rep.class_count = classes_.count();
    rep.algebra_dims = algebra_.poincare_series(lo, hi);
    for (const auto& [d, dim] : rep.algebra_dims)
        rep.quotient_dims[d] = dim * classes_.count();

    const auto monomials = algebra_.basis(lo, hi);
    std::vector<QuotientElement> basis;
    for (int C = 0; C < classes_.count(); ++C)
        for (const auto& m : monomials) {
            QuotientElement q(*this);
            q.add_term(C, m, Scalar::one(field_));
            basis.push_back(std::move(q));
        }

    std::vector<TensorElement> images;
    images.reserve(basis.size());
    for (const auto& q : basis) images.push_back(tensor_iso_phi(q));

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            ++rep.pairs_checked;
            const TensorElement lhs = tensor_iso_phi(orbifold_product(basis[i], basis[j]));
            const TensorElement rhs = images[i] * images[j];
            if (!(lhs == rhs)) {
                rep.pass = false;
                rep.counterexample =
                    "phi(x o y) != phi(x) phi(y) for x = " +
                    describe_quotient_key(basis[i].terms().begin()->first) + ", y = " +
                    describe_quotient_key(basis[j].terms().begin()->first);
                return rep;
            }
        }
    return rep;
}

std::string SectorSpace::describe_quotient_key(const QuotientElement::Key& k) const {
    return "([" + group_.label(classes_.representative[k.first]) + "], " +
           algebra_.monomial_name(k.second) + ")";
}

}  // namespace orbloop
