// Integer-coefficient polynomials in one variable t and the rational functions
// num(t)/den(t) used for the Ext generating series. Denominators are kept with
// constant term 1 and fractions fully reduced, so equality is coefficientwise.
#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/rational.hpp"

namespace gentle {

// Coefficients in ascending degree; no trailing zeros.
struct Poly {
    std::vector<Int> c;

    Poly() = default;
    Poly(std::initializer_list<long> v) {
        for (long x : v) c.push_back(Int(x));
        trim();
    }
    static Poly constant(const Int& v) {
        Poly p;
        p.c.push_back(v);
        p.trim();
        return p;
    }
    // (-t)^k
    static Poly neg_t_pow(int k) {
        Poly p;
        p.c.assign(size_t(k) + 1, Int(0));
        p.c[size_t(k)] = (k % 2 == 0) ? Int(1) : Int(-1);
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }  // -1 for zero
    Int coeff(int k) const { return k >= 0 && k < int(c.size()) ? c[size_t(k)] : Int(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r;
        r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
        for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(int(k)) + b.coeff(int(k));
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r;
        r.c.assign(std::max(a.c.size(), b.c.size()), Int(0));
        for (size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.coeff(int(k)) - b.coeff(int(k));
        r.trim();
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        Poly r;
        r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Rat eval(const Rat& t) const {
        Rat v(0);
        for (size_t k = c.size(); k-- > 0;) v = v * t + Rat(c[k]);
        return v;
    }

    Int content() const {
        Int g(0);
        for (const Int& x : c) g = boost::multiprecision::gcd(g, x);
        return g;
    }

    // Polynomial division over Q, exact remainder arithmetic via scaling.
    // Returns {quotient * lc(b)^k, remainder * lc(b)^k} is avoided: we divide
    // over the rationals and the callers only need divisibility / gcd, so we
    // work with rational-coefficient temporaries internally.
    static bool divides(const Poly& d, const Poly& a);
    static Poly gcd(Poly a, Poly b);

    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < c.size(); ++k) {
            if (c[k] == 0) continue;
            Int v = c[k];
            if (first) {
                if (v < 0) { os << "-"; v = -v; }
            } else {
                os << (v < 0 ? " - " : " + ");
                if (v < 0) v = -v;
            }
            if (k == 0) os << v;
            else {
                if (v != 1) os << v << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }
};

namespace detail {
// pseudo-remainder sequence helpers over Z[t]
inline std::vector<Rat> to_rat(const Poly& p) {
    std::vector<Rat> r(p.c.size());
    for (size_t k = 0; k < p.c.size(); ++k) r[k] = Rat(p.c[k]);
    return r;
}
inline void rat_trim(std::vector<Rat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}
// a mod b over Q[t]
inline std::vector<Rat> rat_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
    rat_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        size_t off = a.size() - b.size();
        for (size_t k = 0; k < b.size(); ++k) a[off + k] -= f * b[k];
        rat_trim(a);
    }
    return a;
}
inline Poly from_rat(std::vector<Rat> v) {
    rat_trim(v);
    // clear denominators, divide by content
    Int lcm(1);
    for (const Rat& q : v) lcm = boost::multiprecision::lcm(lcm, den(q));
    Poly p;
    p.c.resize(v.size());
    for (size_t k = 0; k < v.size(); ++k) p.c[k] = num(v[k] * Rat(lcm));
    Int g = p.content();
    if (g > 1)
        for (Int& x : p.c) x /= g;
    return p;
}
}  // namespace detail

inline bool Poly::divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    auto r = detail::rat_mod(detail::to_rat(a), detail::to_rat(d));
    return r.empty();
}

inline Poly Poly::gcd(Poly a, Poly b) {
    auto ra = detail::to_rat(a), rb = detail::to_rat(b);
    detail::rat_trim(ra);
    detail::rat_trim(rb);
    while (!rb.empty()) {
        auto r = detail::rat_mod(ra, rb);
        ra = std::move(rb);
        rb = std::move(r);
    }
    return detail::from_rat(ra);
}

// A power series known to be rational: num/den with integer coefficients,
// den(0) = 1, gcd(num, den) = 1. Supports the modified Euler form:
// sum_p dim Ext^p(M,N) (-t)^p.
struct EulerSeries {
    Poly num;
    Poly den;  // constant term 1

    EulerSeries() : num(), den{1} {}
    EulerSeries(Poly n, Poly d) : num(std::move(n)), den(std::move(d)) { normalize(); }
    static EulerSeries polynomial(Poly p) { return EulerSeries(std::move(p), Poly{1}); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("EulerSeries: zero denominator");
        if (num.is_zero()) {
            den = Poly{1};
            return;
        }
        Poly g = Poly::gcd(num, den);
        if (g.degree() > 0) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
        // scale so den has constant coefficient 1 (integral coefficients are
        // preserved: all denominators occurring here divide 1 - (-t)^l)
        Int c0 = den.coeff(0);
        if (c0 == 0) throw std::domain_error("EulerSeries: denominator has zero constant term");
        if (c0 == -1) {
            for (Int& x : num.c) x = -x;
            for (Int& x : den.c) x = -x;
        } else if (c0 != 1) {
            throw std::domain_error("EulerSeries: denominator constant term not a unit: " + to_string(c0));
        }
    }

    static Poly divide_exact(const Poly& a, const Poly& d) {
        auto ra = detail::to_rat(a), rd = detail::to_rat(d);
        detail::rat_trim(rd);
        std::vector<Rat> q(ra.size() >= rd.size() ? ra.size() - rd.size() + 1 : 0, Rat(0));
        detail::rat_trim(ra);
        while (ra.size() >= rd.size() && !ra.empty()) {
            Rat f = ra.back() / rd.back();
            size_t off = ra.size() - rd.size();
            q[off] = f;
            for (size_t k = 0; k < rd.size(); ++k) ra[off + k] -= f * rd[k];
            detail::rat_trim(ra);
        }
        if (!ra.empty()) throw std::domain_error("divide_exact: not divisible");
        return detail::from_rat(std::move(q));
    }

    bool is_polynomial() const { return den.degree() == 0; }

    friend bool operator==(const EulerSeries& a, const EulerSeries& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const EulerSeries& a, const EulerSeries& b) { return !(a == b); }

    friend EulerSeries operator+(const EulerSeries& a, const EulerSeries& b) {
        return EulerSeries(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend EulerSeries operator-(const EulerSeries& a, const EulerSeries& b) {
        return EulerSeries(a.num * b.den - b.num * a.den, a.den * b.den);
    }

    bool has_pole_at(const Rat& t) const { return den.eval(t) == 0; }

    Rat eval(const Rat& t) const {
        Rat d = den.eval(t);
        if (d == 0) throw std::domain_error("EulerSeries: pole at t = " + to_string(t));
        return num.eval(t) / d;
    }

    std::string str() const {
        if (is_polynomial()) return num.str();
        std::string n = num.str();
        if (num.degree() > 0 || num.coeff(0) < 0) n = "(" + n + ")";
        return n + "/(" + den.str() + ")";
    }
};

}  // namespace gentle
