#include "qglue/field.hpp"

#include <cctype>

namespace qglue {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
        if (n % d == 0) return n == d;
    }
    for (std::uint64_t d = 17; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (1ULL << 32) || !is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not a prime below 2^32");
    }
    return Field(p);
}

std::string Field::name() const {
    return is_rational() ? std::string("Q") : "F " + std::to_string(p_);
}

std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) {
    if (a % p == 0) throw std::domain_error("division by zero");
    return mod_pow(a, p - 2, p);
}

std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p) {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class n = q.get_num() % pz;
    if (n < 0) n += pz;
    mpz_class d = q.get_den() % pz;
    if (d == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
    std::uint64_t ni = n.get_ui();
    std::uint64_t di = d.get_ui();
    return mod_mul(ni, mod_inv(di, p), p);
}

Scalar::Scalar(const Field& f, long v) : field_(f) {
    if (f.is_rational()) {
        q_ = v;
    } else {
        long m = v % static_cast<long>(f.modulus());
        if (m < 0) m += static_cast<long>(f.modulus());
        r_ = static_cast<std::uint64_t>(m);
    }
}

Scalar::Scalar(const Field& f, const mpq_class& v) : field_(f) {
    if (f.is_rational()) {
        q_ = v;
        q_.canonicalize();
    } else {
        r_ = reduce_rational(v, f.modulus());
    }
}

Scalar Scalar::residue(const Field& f, std::uint64_t r) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.q_ = static_cast<unsigned long>(r);
    } else {
        s.r_ = r % f.modulus();
    }
    return s;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    bool seen_digit = false, seen_slash = false, ok = i < text.size();
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            seen_digit = true;
        } else if (c == '/' && seen_digit && !seen_slash) {
            seen_slash = true;
            seen_digit = false;
        } else {
            ok = false;
            break;
        }
    }
    if (!ok || !seen_digit) throw std::invalid_argument("not a rational number: '" + text + "'");
    std::string t = text[0] == '+' ? text.substr(1) : text;
    mpq_class q(t, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return Scalar(f, q);
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? q_ == 1 : r_ == 1;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational()) {
        s.q_ = -q_;
    } else {
        s.r_ = r_ == 0 ? 0 : field_.modulus() - r_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) q_ += o.q_;
    else r_ = mod_add(r_, o.r_, field_.modulus());
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) q_ -= o.q_;
    else r_ = mod_sub(r_, o.r_, field_.modulus());
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check(o);
    if (field_.is_rational()) q_ *= o.q_;
    else r_ = mod_mul(r_, o.r_, field_.modulus());
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    check(o);
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Scalar s = *this;
    if (field_.is_rational()) s.q_ = 1 / q_;
    else s.r_ = mod_inv(r_, field_.modulus());
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) return false;
    return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
    return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

}  // namespace qglue
