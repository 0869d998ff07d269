#include "qglue/polynomial.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace qglue {

Polynomial::Polynomial(const Field& f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
    for (const auto& s : c_)
        if (!(s.field() == f)) throw FieldMismatch();
    trim();
}

Polynomial Polynomial::constant(const Scalar& c) {
    return Polynomial(c.field(), {c});
}

Polynomial Polynomial::x(const Field& f) {
    return Polynomial(f, {Scalar(f, 0L), Scalar(f, 1L)});
}

Polynomial Polynomial::linear_root(const Scalar& r) {
    return Polynomial(r.field(), {-r, Scalar(r.field(), 1L)});
}

void Polynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Polynomial::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : Scalar(field_, 0L);
}

Scalar Polynomial::leading() const {
    return c_.empty() ? Scalar(field_, 0L) : c_.back();
}

Polynomial Polynomial::monic() const {
    if (c_.empty()) return *this;
    Scalar inv = c_.back().inverse();
    Polynomial m = *this;
    for (auto& s : m.c_) s *= inv;
    return m;
}

Polynomial Polynomial::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
    return Polynomial(field_, std::move(d));
}

Scalar Polynomial::evaluate(const Scalar& s) const {
    Scalar v(field_, 0L);
    for (std::size_t i = c_.size(); i-- > 0;) v = v * s + c_[i];
    return v;
}

Matrix Polynomial::evaluate(const Matrix& a) const {
    if (a.rows() != a.cols()) throw std::invalid_argument("polynomial of a non-square matrix");
    Matrix v(a.field(), a.rows(), a.cols());
    Matrix id = Matrix::identity(a.field(), a.rows());
    for (std::size_t i = c_.size(); i-- > 0;) v = v * a + id.scaled(c_[i]);
    return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(field_, 0L));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (!(field_ == o.field_)) throw FieldMismatch();
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar(field_, 0L));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_)) throw FieldMismatch();
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1, Scalar(a.field_, 0L));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(a.field_, std::move(c));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
}

std::string Polynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << '(' << c_[i].to_string() << ')';
        if (i > 0) os << "x^" << i;
    }
    return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Polynomial(f), a};
    std::vector<Scalar> r = a.coeffs();
    std::vector<Scalar> q(a.degree() - b.degree() + 1, Scalar(f, 0L));
    Scalar inv = b.leading().inverse();
    const auto& bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Scalar t = r[k + b.degree()] * inv;
        q[k] = t;
        if (t.is_zero()) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) r[k + j] -= t * bc[j];
    }
    r.resize(b.degree());
    return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return divmod(a, b).second;
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) {
    return divmod(a, b).first;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Bezout extended_gcd(const Polynomial& a, const Polynomial& b) {
    const Field& f = a.field();
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(Scalar(f, 1L)), s1(f);
    Polynomial t0(f), t1 = Polynomial::constant(Scalar(f, 1L));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Polynomial lc = Polynomial::constant(r0.leading().inverse());
    return {r0 * lc, s0 * lc, t0 * lc};
}

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& mod) {
    Polynomial r = Polynomial::constant(Scalar(base.field(), 1L)) % mod;
    Polynomial b = base % mod;
    while (e) {
        if (e & 1) r = (r * b) % mod;
        b = (b * b) % mod;
        e >>= 1;
    }
    return r;
}

std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
    std::vector<std::pair<Polynomial, int>> out;
    if (f.degree() < 1) return out;
    Polynomial fm = f.monic();
    Polynomial a0 = gcd(fm, fm.derivative());
    Polynomial b = fm / a0;
    Polynomial c = fm.derivative() / a0;
    Polynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Polynomial a = gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = b / a;
        c = d / a;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

void split_linear(const Polynomial& g, std::mt19937_64& rng, std::vector<std::uint64_t>& roots) {
    const Field& f = g.field();
    std::uint64_t p = f.modulus();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        Polynomial m = g.monic();
        roots.push_back((-m.coeff(0)).residue());
        return;
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    for (int attempt = 0; attempt < 200; ++attempt) {
        Polynomial shift(f, {Scalar::residue(f, dist(rng)), Scalar(f, 1L)});
        Polynomial h = powmod(shift, (p - 1) / 2, g) - Polynomial::constant(Scalar(f, 1L));
        Polynomial d = gcd(g, h);
        if (d.degree() > 0 && d.degree() < g.degree()) {
            split_linear(d, rng, roots);
            split_linear(g / d, rng, roots);
            return;
        }
    }
    throw std::runtime_error("root splitting failed to converge");
}

std::optional<mpq_class> reconstruct(std::uint64_t r, std::uint64_t p) {
    // Half-extended Euclid stopped at sqrt(p/2).
    mpz_class r0(static_cast<unsigned long>(p)), r1(static_cast<unsigned long>(r));
    mpz_class t0(0), t1(1);
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class(static_cast<unsigned long>(p / 2)).get_mpz_t());
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        mpz_class t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    mpq_class v(r1, t1);
    v.canonicalize();
    return v;
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const Polynomial& f, std::uint64_t seed) {
    const Field& fld = f.field();
    if (fld.is_rational()) throw std::invalid_argument("roots_mod_p needs a prime field");
    std::vector<std::uint64_t> roots;
    if (f.degree() < 1) return roots;
    std::uint64_t p = fld.modulus();
    if (p < 64) {
        for (std::uint64_t a = 0; a < p; ++a)
            if (f.evaluate(Scalar::residue(fld, a)).is_zero()) roots.push_back(a);
        return roots;
    }
    Polynomial fm = f.monic();
    Polynomial xp = powmod(Polynomial::x(fld), p, fm);
    Polynomial g = gcd(fm, xp - Polynomial::x(fld));
    if (g.degree() >= 1 && g.coeff(0).is_zero()) {
        roots.push_back(0);
        g = g / Polynomial::x(fld);
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    split_linear(g, rng, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<mpq_class> rational_roots(const Polynomial& f) {
    if (!f.field().is_rational()) throw std::invalid_argument("rational_roots needs the rationals");
    std::vector<mpq_class> out;
    if (f.degree() < 1) return out;
    Polynomial g = f.monic();
    if (g.coeff(0).is_zero()) {
        out.push_back(0);
        while (g.coeff(0).is_zero()) g = g / Polynomial::x(g.field());
    }
    for (std::uint64_t p : {2147483647ULL, 4294967291ULL}) {
        Field fp = Field::prime(p);
        std::vector<Scalar> red;
        bool ok = true;
        for (const auto& c : g.coeffs()) {
            try {
                red.push_back(Scalar(fp, c.rational()));
            } catch (const std::domain_error&) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        for (std::uint64_t r : roots_mod_p(Polynomial(fp, red))) {
            auto cand = reconstruct(r, p);
            if (!cand) continue;
            if (g.evaluate(Scalar(g.field(), *cand)).is_zero() &&
                std::find(out.begin(), out.end(), *cand) == out.end()) {
                out.push_back(*cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Polynomial characteristic_polynomial(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
    const Field& f = a.field();
    std::size_t n = a.rows();
    std::vector<std::vector<Scalar>> h(n, std::vector<Scalar>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h[i][j] = a.at(i, j);
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h[i][m - 1].is_zero()) ++i;
        if (i == n) continue;
        if (i != m) {
            std::swap(h[i], h[m]);
            for (std::size_t r = 0; r < n; ++r) std::swap(h[r][i], h[r][m]);
        }
        Scalar t = h[m][m - 1].inverse();
        for (std::size_t k = m + 1; k < n; ++k) {
            if (h[k][m - 1].is_zero()) continue;
            Scalar u = h[k][m - 1] * t;
            for (std::size_t j = 0; j < n; ++j) h[k][j] -= u * h[m][j];
            for (std::size_t r = 0; r < n; ++r) h[r][m] += u * h[r][k];
        }
    }
    std::vector<Polynomial> p;
    p.push_back(Polynomial::constant(Scalar(f, 1L)));
    for (std::size_t m = 1; m <= n; ++m) {
        Polynomial pm = Polynomial::linear_root(h[m - 1][m - 1]) * p[m - 1];
        Scalar t(f, 1L);
        for (std::size_t i = 1; i < m; ++i) {
            t *= h[m - i][m - i - 1];
            Scalar c = t * h[m - i - 1][m - 1];
            if (!c.is_zero()) pm -= Polynomial::constant(c) * p[m - i - 1];
        }
        p.push_back(std::move(pm));
    }
    return p[n];
}

}  // namespace qglue
