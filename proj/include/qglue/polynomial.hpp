#pragma once

#include "qglue/matrix.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace qglue {

// Univariate polynomial, coefficients stored from the constant term upward.
class Polynomial {
public:
    explicit Polynomial(const Field& f) : field_(f) {}
    Polynomial(const Field& f, std::vector<Scalar> coeffs);
    static Polynomial constant(const Scalar& c);
    static Polynomial x(const Field& f);
    static Polynomial linear_root(const Scalar& r);  // x - r

    const Field& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Scalar coeff(std::size_t i) const;
    Scalar leading() const;
    const std::vector<Scalar>& coeffs() const { return c_; }

    Polynomial monic() const;
    Polynomial derivative() const;
    Scalar evaluate(const Scalar& s) const;
    Matrix evaluate(const Matrix& a) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<Scalar> c_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);

struct Bezout {
    Polynomial g, u, v;  // u*a + v*b = g, g monic
};
Bezout extended_gcd(const Polynomial& a, const Polynomial& b);

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod);

// Yun's algorithm; valid in characteristic 0 and for degree below the characteristic.
std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f);

// Distinct roots in F_p (sorted), via gcd with x^p - x and equal-degree splitting.
std::vector<std::uint64_t> roots_mod_p(const Polynomial& f, std::uint64_t seed = 0);

// Distinct rational roots found through modular roots and rational reconstruction; each is verified exactly.
std::vector<mpq_class> rational_roots(const Polynomial& f);

Polynomial characteristic_polynomial(const Matrix& a);

}  // namespace qglue
