// Field abstraction: the rationals and the prime fields F_2, F_3, F_5, F_7.
// All exact; prime fields are compile-time tagged so mixed-modulus arithmetic
// cannot happen.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gentle/rational.hpp"

namespace gentle {

template <int P>
struct Fp {
    static_assert(P >= 2, "modulus must be a prime >= 2");
    static constexpr int modulus = P;
    int32_t v = 0;

    Fp() = default;
    Fp(long x) : v(static_cast<int32_t>(((x % P) + P) % P)) {}

    friend Fp operator+(Fp a, Fp b) { return Fp(long(a.v) + b.v); }
    friend Fp operator-(Fp a, Fp b) { return Fp(long(a.v) - b.v); }
    friend Fp operator*(Fp a, Fp b) { return Fp(long(a.v) * b.v); }
    Fp operator-() const { return Fp(-long(v)); }
    Fp& operator+=(Fp b) { return *this = *this + b; }
    Fp& operator-=(Fp b) { return *this = *this - b; }
    Fp& operator*=(Fp b) { return *this = *this * b; }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }

    Fp inverse() const {
        if (v == 0) throw std::domain_error("division by zero in F_p");
        // Fermat: v^(P-2) mod P
        long r = 1, b = v, e = P - 2;
        while (e > 0) {
            if (e & 1) r = (r * b) % P;
            b = (b * b) % P;
            e >>= 1;
        }
        return Fp(r);
    }
    friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
};

// Field traits used by Matrix<F> and the representation code.
template <typename F>
struct FieldTraits;

template <int P>
struct FieldTraits<Fp<P>> {
    static Fp<P> zero() { return Fp<P>(0); }
    static Fp<P> one() { return Fp<P>(1); }
    static Fp<P> from_int(long x) { return Fp<P>(x); }
    static bool is_zero(Fp<P> x) { return x.v == 0; }
    static std::string name() { return "F" + std::to_string(P); }
};

template <>
struct FieldTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long x) { return Rat(x); }
    static bool is_zero(const Rat& x) { return x == 0; }
    static std::string name() { return "Q"; }
};

// Runtime dispatch over the supported prime fields.
template <typename Fn>
auto with_prime_field(int p, Fn&& fn) {
    switch (p) {
        case 2: return fn(Fp<2>{});
        case 3: return fn(Fp<3>{});
        case 5: return fn(Fp<5>{});
        case 7: return fn(Fp<7>{});
        default: throw std::invalid_argument("unsupported prime field F_" + std::to_string(p));
    }
}

}  // namespace gentle
