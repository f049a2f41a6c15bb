// Root systems of type B_n, C_n and BC_n in epsilon-coordinates, their simple
// and positive roots, and the Euclidean form on roots.
#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/rational.hpp"

namespace gentle {

// Integer coefficient vector in the basis eps_1,...,eps_n.
struct Root {
    std::vector<long> coeffs;

    Root() = default;
    explicit Root(std::vector<long> c) : coeffs(std::move(c)) {}
    static Root zero(int n) { return Root(std::vector<long>(size_t(n), 0)); }
    static Root eps(int i, int n, long scale = 1) {
        Root r = zero(n);
        r.coeffs[size_t(i) - 1] = scale;
        return r;
    }

    int rank() const { return int(coeffs.size()); }
    auto operator<=>(const Root&) const = default;

    friend Root operator+(const Root& a, const Root& b) {
        Root r = a;
        for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
        return r;
    }
    friend Root operator-(const Root& a, const Root& b) {
        Root r = a;
        for (size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= b.coeffs[k];
        return r;
    }
    Root operator-() const {
        Root r = *this;
        for (long& c : r.coeffs) c = -c;
        return r;
    }
    bool is_zero() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (size_t k = 0; k < coeffs.size(); ++k) {
            long c = coeffs[k];
            if (c == 0) continue;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? "-" : "+");
            }
            if (std::abs(c) != 1) os << std::abs(c);
            os << "e" << (k + 1);
            first = false;
        }
        return os.str();
    }
};

inline Rat inner(const Root& a, const Root& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("inner: rank mismatch");
    Int s(0);
    for (size_t k = 0; k < a.coeffs.size(); ++k) s += Int(a.coeffs[k]) * Int(b.coeffs[k]);
    return Rat(s);
}

enum class RootSystemKind { B, C, BC, PlusB, PlusC, PlusBC };

struct RootSystemBC {
    int rank = 0;
    std::set<Root> phi_B, phi_C, phi_BC;
    std::vector<Root> delta;  // simple roots of BC: eps_i - eps_{i+1}, eps_n
    std::set<Root> phi_plus_B, phi_plus_C, phi_plus_BC;

    const std::set<Root>& system(RootSystemKind k) const {
        switch (k) {
            case RootSystemKind::B: return phi_B;
            case RootSystemKind::C: return phi_C;
            case RootSystemKind::BC: return phi_BC;
            case RootSystemKind::PlusB: return phi_plus_B;
            case RootSystemKind::PlusC: return phi_plus_C;
            case RootSystemKind::PlusBC: return phi_plus_BC;
        }
        throw std::logic_error("bad system selector");
    }
};

inline RootSystemBC build_root_system(int n) {
    if (n < 1) throw std::invalid_argument("build_root_system: rank must be >= 1");
    RootSystemBC rs;
    rs.rank = n;
    auto add_all = [&](std::set<Root>& plus, std::set<Root>& full, const Root& r) {
        plus.insert(r);
        full.insert(r);
        full.insert(-r);
    };
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Root sum = Root::eps(i, n) + Root::eps(j, n);
            Root diff = Root::eps(i, n) - Root::eps(j, n);
            for (const Root& r : {sum, diff}) {
                add_all(rs.phi_plus_B, rs.phi_B, r);
                add_all(rs.phi_plus_C, rs.phi_C, r);
                add_all(rs.phi_plus_BC, rs.phi_BC, r);
            }
        }
        Root e = Root::eps(i, n);
        Root e2 = Root::eps(i, n, 2);
        add_all(rs.phi_plus_B, rs.phi_B, e);
        add_all(rs.phi_plus_C, rs.phi_C, e2);
        add_all(rs.phi_plus_BC, rs.phi_BC, e);
        add_all(rs.phi_plus_BC, rs.phi_BC, e2);
    }
    for (int i = 1; i < n; ++i) rs.delta.push_back(Root::eps(i, n) - Root::eps(i + 1, n));
    rs.delta.push_back(Root::eps(n, n));
    return rs;
}

// Image of a coefficient vector in simple-root coordinates: sum d_k alpha_k
// with alpha_i = eps_i - eps_{i+1} (i < n) and alpha_n = eps_n.
inline Root root_from_simple_coords(const std::vector<long>& d) {
    int n = int(d.size());
    if (n < 1) throw std::invalid_argument("root_from_simple_coords: empty vector");
    Root r = Root::zero(n);
    for (int k = 1; k < n; ++k) {
        r.coeffs[size_t(k) - 1] += d[size_t(k) - 1];
        r.coeffs[size_t(k)] -= d[size_t(k) - 1];
    }
    r.coeffs[size_t(n) - 1] += d[size_t(n) - 1];
    return r;
}

inline bool membership(const RootSystemBC& rs, const Root& r, RootSystemKind which) {
    if (r.rank() != rs.rank) throw std::invalid_argument("membership: rank mismatch");
    return rs.system(which).count(r) > 0;
}

}  // namespace gentle
