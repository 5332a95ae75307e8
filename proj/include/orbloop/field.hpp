#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace orbloop {

using Rational = boost::multiprecision::cpp_rational;

/// A prime field F_p (characteristic p) or the rationals (characteristic 0).
/// The algebraically-closed flag is user-declared metadata; it only affects
/// reporting (the k^{c(G)} refinement), never arithmetic.
struct FieldSpec {
    std::int64_t characteristic = 0;
    bool algebraically_closed = false;

    FieldSpec() = default;
    explicit FieldSpec(std::int64_t ch, bool alg_closed = false);

    bool operator==(const FieldSpec& o) const {
        return characteristic == o.characteristic;
    }

    /// True iff the characteristic is coprime to n (always true in char 0).
    bool is_coprime_to(std::int64_t n) const;

    std::string describe() const;
};

/// An exact field element: a reduced residue mod p, or an exact rational.
/// Immutable value type; all operations are pure.
class Scalar {
public:
    Scalar() = default;

    static Scalar of(const FieldSpec& field, std::int64_t n);
    static Scalar of(const FieldSpec& field, const Rational& q);
    static Scalar zero(const FieldSpec& field) { return of(field, 0); }
    static Scalar one(const FieldSpec& field) { return of(field, 1); }

    std::int64_t characteristic() const { return char_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Residue in [0, p) for prime characteristic.
    std::int64_t residue() const;
    /// Exact value for characteristic 0.
    const Rational& rational() const { return rat_; }

    std::string str() const;

private:
    std::int64_t char_ = 0;
    std::int64_t res_ = 0;   // used when char_ > 0
    Rational rat_ = 0;       // used when char_ == 0

    void check_same_field(const Scalar& o) const;
};

bool is_prime(std::int64_t n);

}  // namespace orbloop
