#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hopfcat {

// Exact coefficient fields: the rationals, or a prime field F_p.
// No floating point appears anywhere in this library.
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };

    Kind kind = Kind::Rationals;
    unsigned long p = 0;  // modulus, PrimeField only

    static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }
    static FieldSpec prime_field(unsigned long p);

    bool operator==(const FieldSpec&) const = default;

    std::string str() const;
};

bool is_prime(unsigned long n);

// One field element. Rationals are kept as reduced fractions; prime-field
// values as canonical representatives in [0, p). Mixing fields throws.
class Scalar {
  public:
    Scalar() : field_(FieldSpec::rationals()), v_(0) {}
    Scalar(FieldSpec field, mpq_class value) : field_(field), v_(std::move(value)) { canonicalize(); }

    static Scalar zero(const FieldSpec& f) { return Scalar(f, 0); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    static Scalar of(const FieldSpec& f, long num, long den = 1);
    // Accepts "3", "-3", or "3/4" (rationals only for the latter).
    static Scalar parse(const FieldSpec& f, const std::string& text);

    const FieldSpec& field() const { return field_; }
    const mpq_class& value() const { return v_; }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return field_ == o.field_ && v_ == o.v_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    FieldSpec field_;
    mpq_class v_;

    void canonicalize();
    void require_same_field(const Scalar& o) const;
};

}  // namespace hopfcat
