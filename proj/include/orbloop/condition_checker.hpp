#pragma once

#include "orbloop/field.hpp"
#include "orbloop/finite_group.hpp"
#include "orbloop/graded_algebra.hpp"
#include "orbloop/sector_model.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace orbloop {

/// A predicate on the field characteristic, as written in catalog files:
/// "any", "p == 0", "p != 0", "p == N", "p != N", "p > N",
/// "p in {a,b,...}", "p not in {a,b,...}".
class CharPredicate {
public:
    static CharPredicate parse(const std::string& text);
    bool matches(std::int64_t characteristic) const;
    const std::string& text() const { return text_; }

private:
    enum class Kind { Any, Eq, Ne, Gt, In, NotIn };
    Kind kind_ = Kind::Any;
    std::int64_t value_ = 0;
    std::vector<std::int64_t> set_;
    std::string text_ = "any";
};

/// How TNCZ of the free loop fibration is decided for a manifold family.
struct TnczRule {
    enum class Kind {
        None,         // no rule recorded
        EulerModP,    // TNCZ iff chi(M) = 0 in F_p (and chi = 0 for p = 0)
        Always,       // TNCZ for every p > 0
        Never,        // not TNCZ for any p > 0
        SoStiefel,    // SO(m+n)/SO(n): p > 2 iff n odd; p = 2 sufficient-only
    };
    Kind kind = Kind::None;
    int m = 0, n = 0;  // family parameters for SoStiefel
};

enum class Verdict { True, False, Unknown };

struct LoopRingEntry {
    CharPredicate condition;
    std::shared_ptr<GradedPresentation> presentation;
    std::string provenance;
};

struct HTopRankEntry {
    CharPredicate condition;
    int rank;
};

/// Declarative catalog data for one manifold (or manifold family); the loop
/// homology rings are literature inputs, validated at load, never computed.
struct ManifoldEntry {
    std::string name;
    int dim = 0;
    bool simply_connected = false;
    std::int64_t euler_characteristic = 0;
    std::optional<bool> cohomology_free_graded_commutative;  // Vigue criterion, p = 0
    TnczRule tncz_rule;
    std::vector<HTopRankEntry> h_top_rank;
    std::vector<LoopRingEntry> loop_ring;

    const LoopRingEntry* loop_ring_for(std::int64_t characteristic) const;
    std::optional<int> h_top_rank_for(std::int64_t characteristic) const;
};

struct AmbientGroupEntry {
    std::string name;
    bool simply_connected = false;
    std::optional<std::int64_t> pi1_order;  // nullopt = infinite
    std::string provenance;
};

struct OrbifoldProblem {
    ManifoldEntry manifold;
    AmbientGroupEntry ambient;
    FiniteGroup group;
    FieldSpec field;
};

enum class Triviality {
    TrivialBySimplyConnected,
    TrivialByTopHomology,
    TrivialByTncz,
    Undetermined,
};

std::string to_string(Triviality t);

struct OrbifoldReport {
    bool coprime_ok = false;
    Triviality triviality = Triviality::Undetermined;
    bool applicable = false;
    std::string reason;  // names the failing hypothesis when not applicable
    int class_count = 0;
    int window_lo = 0, window_hi = 0;
    std::map<int, std::int64_t> dimension_table;          // assembled ring, per degree
    std::shared_ptr<GradedPresentation> algebra;          // the catalog A actually used
    std::string algebra_provenance;
    bool wedderburn_split = false;  // Z(k[G]) = k^{c(G)} reportable
    std::string notes;
};

bool check_coprime(const OrbifoldProblem& problem);

Triviality check_trivial_action(const OrbifoldProblem& problem);

/// Evaluates the manifold's TNCZ rule at the given characteristic.
Verdict tncz_lookup(const ManifoldEntry& manifold, std::int64_t characteristic);

/// Runs the hypothesis checks; when they pass, builds the answer ring
/// A (x) Z(k[G]), verifies the isomorphism mechanically inside the window
/// (a failure there is an internal error, never a math outcome), and emits
/// the report. Total: every problem yields a report.
OrbifoldReport assemble(const OrbifoldProblem& problem,
                        std::optional<std::pair<int, int>> window = std::nullopt);

}  // namespace orbloop
