#include "hopfcat/field.hpp"

namespace hopfcat {

bool is_prime(unsigned long n) {
    if (n < 2) return false;
    for (unsigned long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(unsigned long p) {
    if (!is_prime(p)) throw std::invalid_argument("prime_field: modulus " + std::to_string(p) + " is not prime");
    return FieldSpec{Kind::PrimeField, p};
}

std::string FieldSpec::str() const {
    return kind == Kind::Rationals ? "Q" : "F" + std::to_string(p);
}

Scalar Scalar::of(const FieldSpec& f, long num, long den) {
    if (den == 0) throw std::invalid_argument("Scalar::of: zero denominator");
    return Scalar(f, mpq_class(num, den));
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw std::invalid_argument("Scalar::parse: bad literal '" + text + "'");
    q.canonicalize();
    if (f.kind == FieldSpec::Kind::PrimeField && q.get_den() != 1)
        throw std::invalid_argument("Scalar::parse: fractional literal '" + text + "' over a prime field");
    return Scalar(f, q);
}

void Scalar::canonicalize() {
    v_.canonicalize();
    if (field_.kind == FieldSpec::Kind::PrimeField) {
        // Values over F_p are integers once the denominator is inverted mod p.
        mpz_class p(static_cast<unsigned long>(field_.p));
        mpz_class den = v_.get_den();
        mpz_class num = v_.get_num();
        if (den != 1) {
            mpz_class den_inv;
            if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("Scalar: denominator not invertible mod " + std::to_string(field_.p));
            num *= den_inv;
        }
        mpz_class r;
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        v_ = mpq_class(r);
    }
}

void Scalar::require_same_field(const Scalar& o) const {
    if (!(field_ == o.field_))
        throw std::invalid_argument("Scalar: mixed fields " + field_.str() + " and " + o.field_.str());
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.v_ = -r.v_;
    r.canonicalize();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same_field(o);
    v_ += o.v_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same_field(o);
    v_ -= o.v_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same_field(o);
    v_ *= o.v_;
    canonicalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same_field(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse: division by zero");
    if (field_.kind == FieldSpec::Kind::Rationals) return Scalar(field_, 1 / v_);
    mpz_class p(static_cast<unsigned long>(field_.p));
    mpz_class num = v_.get_num();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
    return Scalar(field_, mpq_class(inv));
}

std::string Scalar::str() const { return v_.get_str(); }

}  // namespace hopfcat
