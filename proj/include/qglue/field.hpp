#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qglue {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

struct FieldMismatch : std::invalid_argument {
    FieldMismatch() : std::invalid_argument("field mismatch") {}
};

// Either the rationals (modulus 0) or a prime field F_p with p < 2^32.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    static Field prime(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t modulus() const { return p_; }
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}
    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

inline std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}
inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}
inline std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}
std::uint64_t mod_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce_rational(const mpq_class& q, std::uint64_t p);

class Scalar {
public:
    Scalar() = default;
    Scalar(const Field& f, long v);
    Scalar(const Field& f, const mpq_class& v);
    static Scalar residue(const Field& f, std::uint64_t r);
    // Accepts integers and fractions such as "-3/4".
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    const mpq_class& rational() const { return q_; }
    std::uint64_t residue() const { return r_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inverse() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    std::string to_string() const;

private:
    void check(const Scalar& o) const {
        if (!(field_ == o.field_)) throw FieldMismatch();
    }

    Field field_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

}  // namespace qglue
