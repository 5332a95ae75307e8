#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace orbloop {

/// A permutation of {0, ..., n-1}, stored as the image table.
using Permutation = std::vector<int>;

/// A finite group materialized as a full multiplication table.
/// Elements are indices 0..order-1; index 0 need not be the identity
/// (it is for every built-in constructor). Immutable after construction.
class FiniteGroup {
public:
    static constexpr std::size_t kDefaultClosureCap = 2000;

    /// Validates the table: Latin square, identity, inverses, associativity
    /// (exhaustive for order <= 256, sampled with >= 10^4 triples above).
    static FiniteGroup from_table(std::vector<std::vector<int>> mult,
                                  std::vector<std::string> labels = {});

    /// Breadth-first closure of the generated subgroup, starting from the
    /// identity, applying generators in the given order. Deterministic
    /// element numbering: discovery order.
    static FiniteGroup from_permutations(const std::vector<Permutation>& generators,
                                         int domain_size,
                                         std::size_t cap = kDefaultClosureCap);

    /// All 2x2 matrices over F_p with determinant 1; order p(p^2-1).
    static FiniteGroup special_linear_2(std::int64_t p);

    /// Named catalog: "trivial", "Z<n>"/"C<n>" (n <= 50), "S<n>" (n <= 5),
    /// "D<n>" (symmetries of the n-gon, order 2n, n <= 12), "Q8", "SL2_<p>".
    static FiniteGroup named(const std::string& name);

    int order() const { return static_cast<int>(mult_.size()); }
    int mul(int a, int b) const { return mult_[a][b]; }
    int inverse(int a) const { return inverse_[a]; }
    int identity() const { return identity_; }
    int conjugate(int g, int h) const {  // h^{-1} g h
        return mul(mul(inverse_[h], g), h);
    }
    const std::string& label(int a) const { return labels_[a]; }
    const std::string& name() const { return name_; }

    /// Structural equality of multiplication tables under the canonical
    /// enumeration (not isomorphism testing).
    bool same_table(const FiniteGroup& o) const { return mult_ == o.mult_; }

private:
    FiniteGroup() = default;

    std::vector<std::vector<int>> mult_;
    std::vector<int> inverse_;
    int identity_ = 0;
    std::vector<std::string> labels_;
    std::string name_;
};

/// The partition of a group into conjugacy classes.
struct ConjugacyClassSet {
    std::vector<std::vector<int>> classes;   // each sorted ascending
    std::vector<int> representative;         // least element of each class
    std::vector<int> class_of;               // element -> class index
    std::vector<int> centralizer_order;      // per class

    int count() const { return static_cast<int>(classes.size()); }
    int size_of(int c) const { return static_cast<int>(classes[c].size()); }
};

/// Partition by g ~ h^{-1} g h; classes ordered by least element index,
/// centralizer orders by direct count.
ConjugacyClassSet conjugacy_classes(const FiniteGroup& G);

/// Names of every catalog group shipped with the library.
std::vector<std::string> catalog_group_names();

}  // namespace orbloop
