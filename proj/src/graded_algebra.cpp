#include "orbloop/graded_algebra.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbloop {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

int exponent_weight(const Monomial& m) {
    int s = 0;
    for (int e : m) s += e;
    return s;
}

bool deglex_less(const Monomial& a, const Monomial& b) {
    const int wa = exponent_weight(a), wb = exponent_weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

}  // namespace

GradedPresentation::GradedPresentation(std::string name,
                                       std::vector<GradedGenerator> generators,
                                       std::string provenance)
    : name_(std::move(name)), generators_(std::move(generators)),
      provenance_(std::move(provenance)) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (g.name.empty() || !names.insert(g.name).second)
            throw std::invalid_argument("generator names must be nonempty and distinct");
        if (g.bound && *g.bound < 1)
            throw std::invalid_argument("generator bound must be positive");
        if (!g.bound && !g.rewrite.empty())
            throw std::invalid_argument("rewrite on an unbounded generator");
        for (const auto& term : g.rewrite) {
            if (term.monomial.size() != generators_.size())
                throw std::invalid_argument("rewrite monomial has wrong length");
            if (!is_admissible(term.monomial))
                throw std::invalid_argument("rewrite monomial is not admissible");
            if (degree_of(term.monomial) != *g.bound * g.degree)
                throw std::invalid_argument("rewrite is not degree-homogeneous");
            Monomial top(generators_.size(), 0);
            top[i] = *g.bound;
            if (!deglex_less(term.monomial, top))
                throw std::invalid_argument("rewrite does not decrease in deglex order");
        }
    }
}

int GradedPresentation::degree_of(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < generators_.size(); ++i) d += m[i] * generators_[i].degree;
    return d;
}

bool GradedPresentation::is_admissible(const Monomial& m) const {
    if (m.size() != generators_.size()) return false;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (m[i] < 0) return false;
        if (generators_[i].bound && m[i] >= *generators_[i].bound) return false;
    }
    return true;
}

std::string GradedPresentation::monomial_name(const Monomial& m) const {
    std::string s;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += generators_[i].name;
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

std::vector<Monomial> GradedPresentation::basis(int lo, int hi) const {
    const int n = generator_count();
    bool unbounded_pos = false, unbounded_neg = false;
    for (const auto& g : generators_) {
        if (g.bound) continue;
        if (g.degree == 0)
            throw std::invalid_argument("unbounded degree-0 generator: infinite dimensions");
        (g.degree > 0 ? unbounded_pos : unbounded_neg) = true;
    }
    if (unbounded_pos && unbounded_neg)
        throw std::invalid_argument("unbounded generators of both signs: cannot enumerate");

    // min/max degree reachable from the suffix of generators i..n-1
    std::vector<std::int64_t> suffix_min(n + 1, 0), suffix_max(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        const auto& g = generators_[i];
        std::int64_t mn, mx;
        if (g.bound) {
            const std::int64_t top = static_cast<std::int64_t>(*g.bound - 1) * g.degree;
            mn = std::min<std::int64_t>(0, top);
            mx = std::max<std::int64_t>(0, top);
        } else {
            mn = g.degree > 0 ? 0 : -kInf;
            mx = g.degree > 0 ? kInf : 0;
        }
        suffix_min[i] = std::max(-kInf, suffix_min[i + 1] + mn);
        suffix_max[i] = std::min(kInf, suffix_max[i + 1] + mx);
    }

    std::vector<Monomial> out;
    Monomial current(n, 0);
    std::function<void(int, std::int64_t)> dfs = [&](int i, std::int64_t deg) {
        if (i == n) {
            if (deg >= lo && deg <= hi) out.push_back(current);
            return;
        }
        const auto& g = generators_[i];
        for (int e = 0;; ++e) {
            if (g.bound && e >= *g.bound) break;
            const std::int64_t d = deg + static_cast<std::int64_t>(e) * g.degree;
            if (!g.bound) {
                // termination for unbounded generators: the window eventually
                // becomes unreachable as |e| grows
                if (g.degree > 0 && d + suffix_min[i + 1] > hi) break;
                if (g.degree < 0 && d + suffix_max[i + 1] < lo) break;
            }
            if (d + suffix_min[i + 1] <= hi && d + suffix_max[i + 1] >= lo) {
                current[i] = e;
                dfs(i + 1, d);
                current[i] = 0;
            }
        }
    };
    dfs(0, 0);

    std::stable_sort(out.begin(), out.end(), [this](const Monomial& a, const Monomial& b) {
        const int da = degree_of(a), db = degree_of(b);
        if (da != db) return da < db;
        return a < b;
    });
    return out;
}

std::map<int, std::int64_t> GradedPresentation::poincare_series(int lo, int hi) const {
    if (lo > hi) throw std::invalid_argument("empty degree window");
    std::map<int, std::int64_t> dims;
    for (int d = lo; d <= hi; ++d) dims[d] = 0;
    for (const auto& m : basis(lo, hi)) ++dims[degree_of(m)];
    return dims;
}

GradedElement::GradedElement(const GradedPresentation& presentation, const FieldSpec& field)
    : presentation_(&presentation), field_(field) {}

GradedElement GradedElement::monomial(const GradedPresentation& p, const FieldSpec& k,
                                      const Monomial& m, Scalar coeff) {
    GradedElement e(p, k);
    e.add_term(m, coeff);
    return e;
}

GradedElement GradedElement::unit(const GradedPresentation& p, const FieldSpec& k) {
    return monomial(p, k, p.unit_monomial(), Scalar::one(k));
}

void GradedElement::check_compatible(const GradedElement& o) const {
    if (presentation_ != o.presentation_) throw std::invalid_argument("presentation mismatch");
    if (!(field_ == o.field_)) throw std::invalid_argument("field mismatch");
}

int GradedElement::degree() const {
    if (terms_.empty()) throw std::logic_error("degree of zero element");
    int d = presentation_->degree_of(terms_.begin()->first);
    for (const auto& [m, c] : terms_)
        if (presentation_->degree_of(m) != d)
            throw std::logic_error("degree of a non-homogeneous element");
    return d;
}

void GradedElement::add_term(const Monomial& m, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    const auto& gens = presentation_->generators();
    if (m.size() != gens.size()) throw std::invalid_argument("monomial length mismatch");

    int bad = -1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (m[i] < 0) throw std::invalid_argument("negative exponent");
        if (gens[i].bound && m[i] >= *gens[i].bound) {
            bad = static_cast<int>(i);
            break;
        }
    }
    if (bad < 0) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, coeff);
        } else {
            it->second = it->second + coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
        return;
    }

    // Pull one g_bad^bound out of the monomial: m = left * g_bad^bound, where
    // the extracted block passes every factor to its right (Koszul sign).
    const int bound = *gens[bad].bound;
    Monomial left = m;
    left[bad] -= bound;
    long crossings = 0;
    if (gens[bad].degree % 2 != 0) {
        long odd_right = 0;
        for (std::size_t j = bad + 1; j < gens.size(); ++j)
            if (gens[j].degree % 2 != 0) odd_right += m[j];
        crossings = static_cast<long>(bound) * odd_right;
    }
    Scalar sign = crossings % 2 == 0 ? Scalar::one(field_) : -Scalar::one(field_);
    for (const auto& term : gens[bad].rewrite)
        add_product(left, term.monomial, coeff * sign * Scalar::of(field_, term.coefficient));
}

void GradedElement::add_product(const Monomial& u, const Monomial& v, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    const auto& gens = presentation_->generators();
    // reordering u * v into canonical order: each factor g_i of v crosses
    // the factors g_j of u with j > i
    long crossings = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (v[i] == 0 || gens[i].degree % 2 == 0) continue;
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (u[j] != 0 && gens[j].degree % 2 != 0)
                crossings += static_cast<long>(v[i]) * u[j];
    }
    Monomial sum(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) sum[i] = u[i] + v[i];
    add_term(sum, crossings % 2 == 0 ? coeff : -coeff);
}

GradedElement GradedElement::operator+(const GradedElement& o) const {
    check_compatible(o);
    GradedElement r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

GradedElement GradedElement::operator*(const GradedElement& o) const {
    check_compatible(o);
    GradedElement r(*presentation_, field_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_product(m1, m2, c1 * c2);
    return r;
}

GradedElement GradedElement::scaled(const Scalar& s) const {
    GradedElement r(*presentation_, field_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

bool GradedElement::operator==(const GradedElement& o) const {
    check_compatible(o);
    return terms_ == o.terms_;
}

std::string GradedElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*" << presentation_->monomial_name(m);
    }
    return os.str();
}

ValidationReport validate_presentation(const GradedPresentation& p, const FieldSpec& k,
                                       int lo, int hi) {
    ValidationReport rep;
    auto fail = [&rep](std::string msg) {
        rep.ok = false;
        rep.message = std::move(msg);
        return rep;
    };

    // graded commutativity forces odd squares to vanish outside char 2
    if (k.characteristic != 2) {
        for (const auto& g : p.generators()) {
            if (g.degree % 2 == 0) continue;
            if (!g.bound || *g.bound > 2)
                return fail("odd-degree generator '" + g.name +
                            "' must square to zero when char != 2");
            if (*g.bound == 2)
                for (const auto& t : g.rewrite)
                    if (!Scalar::of(k, t.coefficient).is_zero())
                        return fail("odd-degree generator '" + g.name +
                                    "' has a nonzero square rewrite, char != 2");
        }
    }

    const auto monomials = p.basis(lo, hi);
    std::vector<GradedElement> elems;
    elems.reserve(monomials.size());
    for (const auto& m : monomials)
        elems.push_back(GradedElement::monomial(p, k, m, Scalar::one(k)));

    const GradedElement one = GradedElement::unit(p, k);
    for (std::size_t i = 0; i < elems.size(); ++i) {
        ++rep.checks_run;
        if (!(one * elems[i] == elems[i]) || !((elems[i] * one) == elems[i]))
            return fail("unit law fails on " + p.monomial_name(monomials[i]));
    }

    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i; j < elems.size(); ++j) {
            ++rep.checks_run;
            const int di = p.degree_of(monomials[i]), dj = p.degree_of(monomials[j]);
            GradedElement rhs = elems[j] * elems[i];
            if ((di % 2 != 0) && (dj % 2 != 0)) rhs = rhs.scaled(-Scalar::one(k));
            if (!(elems[i] * elems[j] == rhs))
                return fail("graded commutativity fails on (" + p.monomial_name(monomials[i]) +
                            ", " + p.monomial_name(monomials[j]) + ")");
        }

    // associativity; stride-sample triples when the cube gets large
    const std::size_t n = elems.size();
    std::size_t stride = 1;
    while (n * n * n / (stride * stride * stride) > 200000) ++stride;
    for (std::size_t i = 0; i < n; i += stride)
        for (std::size_t j = 0; j < n; j += stride)
            for (std::size_t l = 0; l < n; l += stride) {
                ++rep.checks_run;
                if (!((elems[i] * elems[j]) * elems[l] == elems[i] * (elems[j] * elems[l])))
                    return fail("associativity fails on (" + p.monomial_name(monomials[i]) +
                                ", " + p.monomial_name(monomials[j]) + ", " +
                                p.monomial_name(monomials[l]) + ")");
            }
    return rep;
}

GradedPresentation tensor_presentation(const GradedPresentation& a,
                                       const GradedPresentation& b) {
    std::vector<GradedGenerator> gens = a.generators();
    const std::size_t shift = gens.size();
    std::set<std::string> used;
    for (const auto& g : gens) used.insert(g.name);
    for (GradedGenerator g : b.generators()) {
        while (used.count(g.name)) g.name += "'";
        used.insert(g.name);
        for (auto& t : g.rewrite) {
            Monomial m(shift, 0);
            m.insert(m.end(), t.monomial.begin(), t.monomial.end());
            t.monomial = std::move(m);
        }
        gens.push_back(std::move(g));
    }
    std::string prov = a.provenance();
    if (!b.provenance().empty())
        prov = prov.empty() ? b.provenance() : prov + "; " + b.provenance();
    return GradedPresentation(a.name() + " (x) " + b.name(), std::move(gens), std::move(prov));
}

}  // namespace orbloop
