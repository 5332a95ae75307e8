#include "orbloop/field.hpp"

#include <numeric>
#include <sstream>

namespace orbloop {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::int64_t ch, bool alg_closed)
    : characteristic(ch), algebraically_closed(alg_closed) {
    if (ch != 0 && !is_prime(ch))
        throw std::invalid_argument("field characteristic must be 0 or prime, got " +
                                    std::to_string(ch));
}

bool FieldSpec::is_coprime_to(std::int64_t n) const {
    if (n < 1) throw std::invalid_argument("is_coprime_to: n must be positive");
    if (characteristic == 0) return true;
    return n % characteristic != 0;
}

std::string FieldSpec::describe() const {
    if (characteristic == 0) return algebraically_closed ? "Q (declared alg. closed)" : "Q";
    std::string s = "F_" + std::to_string(characteristic);
    if (algebraically_closed) s += " (declared alg. closed)";
    return s;
}

namespace {

std::int64_t mod_reduce(std::int64_t n, std::int64_t p) {
    std::int64_t r = n % p;
    return r < 0 ? r + p : r;
}

// extended Euclid: returns x with a*x = 1 mod p, a in [1, p)
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    return mod_reduce(t, p);
}

}  // namespace

Scalar Scalar::of(const FieldSpec& field, std::int64_t n) {
    Scalar s;
    s.char_ = field.characteristic;
    if (s.char_ > 0)
        s.res_ = mod_reduce(n, s.char_);
    else
        s.rat_ = n;
    return s;
}

Scalar Scalar::of(const FieldSpec& field, const Rational& q) {
    if (field.characteristic != 0) {
        // only integral rationals embed into F_p here
        if (boost::multiprecision::denominator(q) != 1)
            throw std::invalid_argument("non-integral rational in prime field");
        auto rem = boost::multiprecision::numerator(q) % field.characteristic;
        return of(field, rem.convert_to<std::int64_t>());
    }
    Scalar s;
    s.char_ = 0;
    s.rat_ = q;
    return s;
}

bool Scalar::is_zero() const {
    return char_ > 0 ? res_ == 0 : rat_ == 0;
}

bool Scalar::is_one() const {
    return char_ > 0 ? res_ == 1 : rat_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (char_ != o.char_) throw std::invalid_argument("field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (char_ > 0)
        s.res_ = mod_reduce(res_ + o.res_, char_);
    else
        s.rat_ = rat_ + o.rat_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(*this);
    if (char_ > 0)
        s.res_ = mod_reduce(res_ * o.res_, char_);
    else
        s.rat_ = rat_ * o.rat_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (char_ > 0)
        s.res_ = res_ == 0 ? 0 : char_ - res_;
    else
        s.rat_ = -rat_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s(*this);
    if (char_ > 0)
        s.res_ = mod_inverse(res_, char_);
    else
        s.rat_ = 1 / rat_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return char_ > 0 ? res_ == o.res_ : rat_ == o.rat_;
}

std::int64_t Scalar::residue() const {
    if (char_ == 0) throw std::logic_error("residue() on a rational scalar");
    return res_;
}

std::string Scalar::str() const {
    if (char_ > 0) return std::to_string(res_);
    std::ostringstream os;
    os << rat_;
    return os.str();
}

}  // namespace orbloop
