#pragma once

#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "kfd/util.hpp"

namespace kfd {

template <class R>
struct ring_traits;

template <>
struct ring_traits<mpz_class> {
    static mpz_class zero() { return mpz_class(0); }
    static mpz_class one() { return mpz_class(1); }
    static bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
    static mpz_class divexact(const mpz_class& a, const mpz_class& b) {
        if (sgn(b) == 0) throw inexact_division_error("division by zero");
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        if (sgn(r) != 0) throw inexact_division_error("inexact integer division");
        return q;
    }
    static mpz_class mul_si(const mpz_class& a, long k) { return a * k; }
    static std::string str(const mpz_class& a) { return a.get_str(); }
};

template <>
struct ring_traits<mpq_class> {
    static mpq_class zero() { return mpq_class(0); }
    static mpq_class one() { return mpq_class(1); }
    static bool is_zero(const mpq_class& a) { return sgn(a) == 0; }
    static mpq_class divexact(const mpq_class& a, const mpq_class& b) {
        if (sgn(b) == 0) throw inexact_division_error("division by zero");
        return a / b;
    }
    static mpq_class mul_si(const mpq_class& a, long k) { return a * k; }
    static std::string str(const mpq_class& a) { return a.get_str(); }
};

// Dense univariate polynomial over a commutative ring R, coefficients
// ascending. The zero polynomial has no coefficients and degree -1.
template <class R>
class Poly {
  public:
    using coeff_type = R;
    using traits = ring_traits<R>;

    Poly() = default;
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { normalize(); }
    static Poly constant(R v) {
        Poly p;
        if (!traits::is_zero(v)) p.c_.push_back(std::move(v));
        return p;
    }
    static Poly monomial(R v, int k) {
        Poly p;
        if (!traits::is_zero(v)) {
            p.c_.assign(k + 1, traits::zero());
            p.c_[k] = std::move(v);
        }
        return p;
    }
    static Poly identity_var() { return monomial(traits::one(), 1); }  // the variable itself

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const R& coeff(int k) const {
        static const R z = traits::zero();
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : z;
    }
    const R& lc() const {
        if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }
    const std::vector<R>& coeffs() const { return c_; }

    bool operator==(const Poly&) const = default;

    Poly operator-() const {
        Poly p = *this;
        for (R& v : p.c_) v = traits::zero() - v;
        return p;
    }
    Poly operator+(const Poly& o) const {
        std::vector<R> out(std::max(c_.size(), o.c_.size()), traits::zero());
        for (size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) out[i] = out[i] + o.c_[i];
        return Poly(std::move(out));
    }
    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<R> out(c_.size() + o.c_.size() - 1, traits::zero());
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) out[i + j] = out[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(out));
    }
    Poly scaled(const R& s) const {
        if (traits::is_zero(s)) return {};
        Poly p = *this;
        for (R& v : p.c_) v = v * s;
        return p;
    }
    Poly shifted(int k) const {  // multiply by x^k
        if (is_zero()) return {};
        std::vector<R> out(c_.size() + k, traits::zero());
        for (size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Poly(std::move(out));
    }
    Poly derivative() const {
        std::vector<R> out;
        for (int k = 1; k <= degree(); ++k) out.push_back(traits::mul_si(c_[k], k));
        return Poly(std::move(out));
    }
    Poly pow(unsigned e) const {
        Poly acc = constant(traits::one());
        Poly base = *this;
        while (e) {
            if (e & 1) acc = acc * base;
            base = base * base;
            e >>= 1;
        }
        return acc;
    }
    template <class S>
    S eval(const S& x) const {  // Horner; S must absorb R via S = S*x + coeff
        S acc = ring_traits<S>::zero();
        for (int k = degree(); k >= 0; --k) acc = acc * x + S(c_[k]);
        return acc;
    }

  private:
    void normalize() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

using IPoly = Poly<mpz_class>;
using QPoly = Poly<mpq_class>;
using BiPoly = Poly<IPoly>;  // main variable X, coefficients in Z[t]

template <class R>
struct ring_traits<Poly<R>> {
    static Poly<R> zero() { return {}; }
    static Poly<R> one() { return Poly<R>::constant(ring_traits<R>::one()); }
    static bool is_zero(const Poly<R>& p) { return p.is_zero(); }
    static Poly<R> divexact(const Poly<R>& a, const Poly<R>& b);
    static Poly<R> mul_si(const Poly<R>& a, long k) {
        return a.scaled(ring_traits<R>::mul_si(ring_traits<R>::one(), k));
    }
    static std::string str(const Poly<R>& a);
};

// Exact division in R[x]; throws inexact_division_error unless b | a.
template <class R>
Poly<R> divexact_poly(const Poly<R>& a, const Poly<R>& b) {
    using T = ring_traits<R>;
    if (b.is_zero()) throw inexact_division_error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw inexact_division_error("inexact polynomial division");
    std::vector<R> rem(a.coeffs());
    std::vector<R> quo(a.degree() - b.degree() + 1, T::zero());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        R& top = rem[k + b.degree()];
        if (T::is_zero(top)) continue;
        R q = T::divexact(top, b.lc());
        for (int j = 0; j <= b.degree(); ++j) rem[k + j] = rem[k + j] - q * b.coeff(j);
        quo[k] = std::move(q);
    }
    for (const R& v : rem)
        if (!T::is_zero(v)) throw inexact_division_error("nonzero remainder in exact division");
    return Poly<R>(std::move(quo));
}

template <class R>
Poly<R> ring_traits<Poly<R>>::divexact(const Poly<R>& a, const Poly<R>& b) {
    return divexact_poly(a, b);
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a = q*b + prem(a,b).
template <class R>
Poly<R> pseudo_rem(const Poly<R>& a, const Poly<R>& b) {
    using T = ring_traits<R>;
    if (b.is_zero()) throw std::invalid_argument("pseudo-division by zero");
    Poly<R> r = a;
    int e = a.degree() - b.degree() + 1;
    if (e <= 0) e = 1;
    const R& lb = b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Poly<R> s = Poly<R>::monomial(r.lc(), r.degree() - b.degree()) * b;
        r = r.scaled(lb) - s;
        --e;
    }
    R mult = T::one();
    for (int i = 0; i < e; ++i) mult = mult * lb;
    return r.scaled(mult);
}

// Resultant via the subresultant PRS; exact over any integral domain whose
// traits provide divexact. Cross-checked against a Sylvester determinant
// oracle in the tests.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    using T = ring_traits<R>;
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("resultant of the zero polynomial");
    bool negate = false;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
    }
    if (a.degree() == 0) return T::one();
    auto rpow = [](R base, int e) {
        R acc = T::one();
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    };
    if (b.degree() == 0) {
        R res = rpow(b.lc(), a.degree());
        return negate ? T::zero() - res : res;
    }
    R g = T::one(), h = T::one();
    for (;;) {
        int delta = a.degree() - b.degree();
        if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
        Poly<R> rem = pseudo_rem(a, b);
        a = b;
        b = divexact_poly(rem, Poly<R>::constant(g * rpow(h, delta)));
        g = a.lc();
        h = delta == 0 ? h : T::divexact(rpow(g, delta), rpow(h, delta - 1));
        if (b.is_zero()) return T::zero();
        if (b.degree() == 0) {
            R res = T::divexact(rpow(b.lc(), a.degree()), rpow(h, a.degree() - 1));
            return negate ? T::zero() - res : res;
        }
    }
}

// (-1)^(n(n-1)/2) Res(f, f') / lc(f); for deg f = 1 this is 1.
template <class R>
R discriminant(const Poly<R>& f) {
    using T = ring_traits<R>;
    if (f.degree() < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (f.degree() == 1) return T::one();
    R res = resultant(f, f.derivative());
    if ((static_cast<long long>(f.degree()) * (f.degree() - 1) / 2) % 2) res = T::zero() - res;
    return T::divexact(res, f.lc());
}

// ---- integer-coefficient specifics ----

mpz_class content(const IPoly& f);                 // nonnegative gcd of coefficients
IPoly primitive_part(const IPoly& f);              // f / content, sign preserved
IPoly normalized_primitive(const IPoly& f);        // primitive with lc > 0
IPoly gcd_poly(const IPoly& a, const IPoly& b);    // primitive, lc > 0 (or constant gcd)
bool divides(const IPoly& d, const IPoly& f);

// Yun's algorithm on the primitive part: pairwise-coprime squarefree parts
// with multiplicities; the product of part^mult equals f up to a rational
// constant. Constants yield an empty list.
std::vector<std::pair<IPoly, int>> squarefree_factorization(const IPoly& f);
IPoly radical(const IPoly& f);
bool is_separable(const IPoly& f);

IPoly compose(const IPoly& f, const IPoly& g);  // f(g(x))

// f(a/b) * b^deg(f): evaluation of the homogenization.
mpz_class eval_homogeneous(const IPoly& f, const mpz_class& a, const mpz_class& b);

std::string to_string(const IPoly& f, const std::string& var = "X");
IPoly parse_ipoly(const std::string& text, const std::string& var = "X");

// ---- bivariate helpers (Z[t][X]) ----

int degree_t(const BiPoly& f);
BiPoly bipoly_from_x_poly(const IPoly& f);       // constants in t
BiPoly substitute_t(const BiPoly& f, const IPoly& s);  // t -> s(t)
std::string to_string(const BiPoly& f, const std::string& xvar = "X",
                      const std::string& tvar = "t");

struct Specialized {
    IPoly poly;            // primitive part of b^D * F(a/b, X)
    mpz_class content;     // positive content that was removed
    int b_power;           // D, the t-degree used for clearing
};

// F(a/b, X) cleared to a primitive integer polynomial; throws for b = 0 or a
// degenerate (identically zero) fiber. (a, b) is reduced internally.
Specialized specialize(const BiPoly& F, const mpz_class& a, const mpz_class& b = 1);

// Res_T(f(T) - u, X^2 - h(T)) as a polynomial in X over Z[u]; with
// param_times_x set the first factor is f(T) - u*T instead. Built by exact
// interpolation in u and verified at a spare node.
BiPoly quadratic_resultant_cover(const IPoly& f, const IPoly& h, bool param_times_x);

// g(X) = lc^(n-1) f(X/lc): monic integer model of the same field.
IPoly monicize(const IPoly& f);

}  // namespace kfd
