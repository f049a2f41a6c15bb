// Symbolic labels for the indecomposable modules of Lambda(n-1,1,1):
// U(i,j) with 1 <= i,j <= n, V(i) with 1 <= i <= n, W(i,j) with
// 1 <= i <= j <= n-1. These labels index representations, positive roots and
// Lie algebra basis elements alike.
#pragma once

#include <compare>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gentle {

enum class Family : int { U = 0, V = 1, W = 2 };

struct IndecType {
    Family fam = Family::U;
    int i = 0;
    int j = 0;  // unused for V

    static IndecType U(int i, int j) { return {Family::U, i, j}; }
    static IndecType V(int i) { return {Family::V, i, 0}; }
    static IndecType W(int i, int j) { return {Family::W, i, j}; }

    // S_i = W(i,i) for i < n, S_n = V(n); S'_n = U(n,n); P_i = U(n,i).
    static IndecType simple(int i, int n) { return i == n ? V(n) : W(i, i); }
    static IndecType simple_prime(int n) { return U(n, n); }
    static IndecType projective(int i, int n) {
        if (i < 1 || i > n) throw std::out_of_range("projective: vertex out of range");
        return U(n, i);
    }

    bool valid(int n) const {
        switch (fam) {
            case Family::U: return 1 <= i && i <= n && 1 <= j && j <= n;
            case Family::V: return 1 <= i && i <= n;
            case Family::W: return 1 <= i && i <= j && j <= n - 1;
        }
        return false;
    }
    void require_valid(int n) const {
        if (!valid(n)) throw std::out_of_range("invalid indecomposable label " + str() + " at rank " + std::to_string(n));
    }

    bool is_projective(int n) const { return fam == Family::U && i == n; }

    auto operator<=>(const IndecType&) const = default;

    std::string str() const {
        std::ostringstream os;
        switch (fam) {
            case Family::U: os << "U(" << i << "," << j << ")"; break;
            case Family::V: os << "V(" << i << ")"; break;
            case Family::W: os << "W(" << i << "," << j << ")"; break;
        }
        return os.str();
    }
};

// Canonical enumeration: all U (lex), then V, then W (lex).
inline std::vector<IndecType> all_indecomposables(int n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    std::vector<IndecType> out;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.push_back(IndecType::U(i, j));
    for (int i = 1; i <= n; ++i) out.push_back(IndecType::V(i));
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j) out.push_back(IndecType::W(i, j));
    return out;
}

inline long indecomposable_count(int n) { return (3L * n * n + n) / 2; }

// Multisets of indecomposables (iso classes of arbitrary modules).
using IndecMultiset = std::map<IndecType, int>;

inline std::string multiset_str(const IndecMultiset& s) {
    if (s.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, m] : s) {
        for (int k = 0; k < m; ++k) {
            if (!first) os << " + ";
            os << t.str();
            first = false;
        }
    }
    return os.str();
}

}  // namespace gentle
