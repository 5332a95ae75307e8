#include "orbloop/condition_checker.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace orbloop {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

std::vector<std::int64_t> parse_set(const std::string& body) {
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream is(body);
    while (std::getline(is, item, ',')) out.push_back(std::stoll(trim(item)));
    return out;
}

}  // namespace

CharPredicate CharPredicate::parse(const std::string& text) {
    CharPredicate p;
    p.text_ = trim(text);
    const std::string& t = p.text_;
    if (t.empty() || t == "any") {
        p.kind_ = Kind::Any;
        return p;
    }
    auto expect_p = [&t](std::size_t n) {
        if (t.rfind("p", 0) != 0) throw std::invalid_argument("bad char condition: " + t);
        return trim(t.substr(n));
    };
    if (t.rfind("p not in", 0) == 0) {
        std::string body = trim(t.substr(8));
        if (body.size() < 2 || body.front() != '{' || body.back() != '}')
            throw std::invalid_argument("bad char condition: " + t);
        p.kind_ = Kind::NotIn;
        p.set_ = parse_set(body.substr(1, body.size() - 2));
        return p;
    }
    if (t.rfind("p in", 0) == 0) {
        std::string body = trim(t.substr(4));
        if (body.size() < 2 || body.front() != '{' || body.back() != '}')
            throw std::invalid_argument("bad char condition: " + t);
        p.kind_ = Kind::In;
        p.set_ = parse_set(body.substr(1, body.size() - 2));
        return p;
    }
    if (t.rfind("p ==", 0) == 0 || t.rfind("p =", 0) == 0) {
        p.kind_ = Kind::Eq;
        p.value_ = std::stoll(expect_p(t.rfind("p ==", 0) == 0 ? 4 : 3));
        return p;
    }
    if (t.rfind("p !=", 0) == 0) {
        p.kind_ = Kind::Ne;
        p.value_ = std::stoll(expect_p(4));
        return p;
    }
    if (t.rfind("p >", 0) == 0) {
        p.kind_ = Kind::Gt;
        p.value_ = std::stoll(expect_p(3));
        return p;
    }
    throw std::invalid_argument("bad char condition: " + t);
}

bool CharPredicate::matches(std::int64_t c) const {
    switch (kind_) {
        case Kind::Any: return true;
        case Kind::Eq: return c == value_;
        case Kind::Ne: return c != value_;
        case Kind::Gt: return c > value_;
        case Kind::In: return std::find(set_.begin(), set_.end(), c) != set_.end();
        case Kind::NotIn: return std::find(set_.begin(), set_.end(), c) == set_.end();
    }
    return false;
}

const LoopRingEntry* ManifoldEntry::loop_ring_for(std::int64_t characteristic) const {
    const LoopRingEntry* found = nullptr;
    for (const auto& entry : loop_ring)
        if (entry.condition.matches(characteristic)) {
            if (found)
                throw std::logic_error("manifold '" + name +
                                       "': multiple loop ring entries match char " +
                                       std::to_string(characteristic));
            found = &entry;
        }
    return found;
}

std::optional<int> ManifoldEntry::h_top_rank_for(std::int64_t characteristic) const {
    for (const auto& entry : h_top_rank)
        if (entry.condition.matches(characteristic)) return entry.rank;
    return std::nullopt;
}

std::string to_string(Triviality t) {
    switch (t) {
        case Triviality::TrivialBySimplyConnected: return "trivial_by_simply_connected";
        case Triviality::TrivialByTopHomology: return "trivial_by_top_homology";
        case Triviality::TrivialByTncz: return "trivial_by_tncz";
        case Triviality::Undetermined: return "undetermined";
    }
    return "undetermined";
}

bool check_coprime(const OrbifoldProblem& problem) {
    return problem.field.is_coprime_to(problem.group.order());
}

Verdict tncz_lookup(const ManifoldEntry& manifold, std::int64_t p) {
    if (p == 0) {
        // Vigue: TNCZ over Q iff H^*(M;Q) is free graded commutative
        if (manifold.cohomology_free_graded_commutative)
            return *manifold.cohomology_free_graded_commutative ? Verdict::True : Verdict::False;
        return Verdict::Unknown;
    }
    switch (manifold.tncz_rule.kind) {
        case TnczRule::Kind::None:
            return Verdict::Unknown;
        case TnczRule::Kind::EulerModP:
            return manifold.euler_characteristic % p == 0 ? Verdict::True : Verdict::False;
        case TnczRule::Kind::Always:
            return Verdict::True;
        case TnczRule::Kind::Never:
            return Verdict::False;
        case TnczRule::Kind::SoStiefel: {
            const int n = manifold.tncz_rule.n, m = manifold.tncz_rule.m;
            if (p > 2) return n % 2 != 0 ? Verdict::True : Verdict::False;
            // p = 2: the criterion is sufficient only
            if (m <= 4 || (m >= 1 && m <= 8 && n >= 43)) return Verdict::True;
            return Verdict::Unknown;
        }
    }
    return Verdict::Unknown;
}

Triviality check_trivial_action(const OrbifoldProblem& problem) {
    if (problem.ambient.simply_connected) return Triviality::TrivialBySimplyConnected;

    const auto top_rank = problem.manifold.h_top_rank_for(problem.field.characteristic);
    if (top_rank && *top_rank == 1) return Triviality::TrivialByTopHomology;

    if (problem.manifold.simply_connected && problem.ambient.pi1_order &&
        tncz_lookup(problem.manifold, problem.field.characteristic) == Verdict::True &&
        problem.field.is_coprime_to(*problem.ambient.pi1_order))
        return Triviality::TrivialByTncz;

    return Triviality::Undetermined;
}

OrbifoldReport assemble(const OrbifoldProblem& problem,
                        std::optional<std::pair<int, int>> window) {
    OrbifoldReport rep;
    const int lo = window ? window->first : -2 * problem.manifold.dim;
    const int hi = window ? window->second : 4 * problem.manifold.dim;
    if (lo > hi) throw std::invalid_argument("window bounds reversed");
    rep.window_lo = lo;
    rep.window_hi = hi;

    rep.coprime_ok = check_coprime(problem);
    rep.triviality = check_trivial_action(problem);

    if (!rep.coprime_ok) {
        rep.reason = "char divides |G|";
        return rep;
    }
    if (rep.triviality == Triviality::Undetermined) {
        rep.reason = "triviality of the Pontrjagin action undetermined";
        rep.notes = "no sufficient criterion fired; the theorem is not asserted";
        return rep;
    }

    const LoopRingEntry* ring = problem.manifold.loop_ring_for(problem.field.characteristic);
    if (!ring) {
        rep.reason = "no loop ring catalog data for this characteristic";
        return rep;
    }
    const ValidationReport v = validate_presentation(*ring->presentation, problem.field, lo, hi);
    if (!v.ok) {
        rep.reason = "catalog presentation invalid: " + v.message;
        return rep;
    }

    SectorSpace space(problem.group, *ring->presentation, problem.field);

    // internal self-check of the isomorphism; a failure here is a bug
    const TheoremReport thm = space.verify_theorem(lo, hi);
    if (!thm.pass)
        throw std::logic_error("internal self-check failed: " + thm.counterexample);

    rep.applicable = true;
    rep.class_count = space.classes().count();
    rep.dimension_table = thm.quotient_dims;
    rep.algebra = ring->presentation;
    rep.algebra_provenance = ring->provenance;
    rep.wedderburn_split = problem.field.algebraically_closed;
    rep.reason = "hypotheses satisfied";
    return rep;
}

}  // namespace orbloop
