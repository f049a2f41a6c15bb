// Generic exact Lie-algebra kernel: finite labelled bases with rational
// structure-constant tables, bracket evaluation, Jacobi verification,
// subalgebra/ideal closure, quotients and simultaneous ad-eigenspace (weight)
// decomposition. All values immutable after construction.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gentle/matrix.hpp"
#include "gentle/rational.hpp"

namespace gentle {

// Sparse rational combination of basis indices; no explicit zeros stored.
struct LieElement {
    std::map<int, Rat> terms;

    static LieElement unit(int k) {
        LieElement e;
        e.terms[k] = 1;
        return e;
    }

    bool is_zero() const { return terms.empty(); }

    void add(int k, const Rat& c) {
        if (c == 0) return;
        Rat& v = terms[k];
        v += c;
        if (v == 0) terms.erase(k);
    }

    friend LieElement operator+(const LieElement& a, const LieElement& b) {
        LieElement r = a;
        for (const auto& [k, c] : b.terms) r.add(k, c);
        return r;
    }
    friend LieElement operator-(const LieElement& a, const LieElement& b) {
        LieElement r = a;
        for (const auto& [k, c] : b.terms) r.add(k, -c);
        return r;
    }
    LieElement operator*(const Rat& s) const {
        LieElement r;
        if (s == 0) return r;
        for (const auto& [k, c] : terms) r.terms[k] = c * s;
        return r;
    }
    friend bool operator==(const LieElement& a, const LieElement& b) { return a.terms == b.terms; }
    friend bool operator!=(const LieElement& a, const LieElement& b) { return !(a == b); }

    std::vector<Rat> dense(int dim) const {
        std::vector<Rat> v(size_t(dim), Rat(0));
        for (const auto& [k, c] : terms) v[size_t(k)] = c;
        return v;
    }
    static LieElement from_dense(const std::vector<Rat>& v) {
        LieElement e;
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) e.terms[int(k)] = v[k];
        return e;
    }
};

struct JacobiFailure {
    int i, j, k;
    LieElement residue;
};

class LieAlgebra {
public:
    LieAlgebra(std::vector<std::string> basis_labels,
               std::map<std::pair<int, int>, LieElement> table_upper)
        : labels_(std::move(basis_labels)), table_(std::move(table_upper)) {
        for (const auto& [ij, e] : table_) {
            if (!(ij.first < ij.second)) throw std::invalid_argument("structure table must be keyed by i < j");
            for (const auto& [k, c] : e.terms)
                if (k < 0 || k >= dim()) throw std::out_of_range("structure constant target out of basis");
        }
    }

    int dim() const { return int(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int k) const { return labels_[size_t(k)]; }
    const std::map<std::pair<int, int>, LieElement>& table() const { return table_; }

    LieElement bracket_basis(int i, int j) const {
        if (i < 0 || j < 0 || i >= dim() || j >= dim()) throw std::out_of_range("basis index out of range");
        if (i == j) return {};
        bool flip = i > j;
        auto it = table_.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
        if (it == table_.end()) return {};
        return flip ? it->second * Rat(-1) : it->second;
    }

    LieElement bracket(const LieElement& a, const LieElement& b) const {
        LieElement r;
        for (const auto& [i, ci] : a.terms)
            for (const auto& [j, cj] : b.terms) {
                LieElement t = bracket_basis(i, j);
                for (const auto& [k, ck] : t.terms) r.add(k, ci * cj * ck);
            }
        return r;
    }

    std::string element_str(const LieElement& e) const {
        if (e.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : e.terms) {
            Rat a = c;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (a != 1) os << a << "*";
            os << label(k);
            first = false;
        }
        return os.str();
    }

    // Exhaustive check over basis triples i < j < k (enough by multilinearity
    // and antisymmetry). Returns the lexicographically smallest failure.
    std::optional<JacobiFailure> jacobi_check() const {
        for (int i = 0; i < dim(); ++i)
            for (int j = i + 1; j < dim(); ++j)
                for (int k = j + 1; k < dim(); ++k) {
                    LieElement s = bracket(LieElement::unit(i), bracket_basis(j, k)) +
                                   bracket(LieElement::unit(j), bracket_basis(k, i)) +
                                   bracket(LieElement::unit(k), bracket_basis(i, j));
                    if (!s.is_zero()) return JacobiFailure{i, j, k, s};
                }
        return std::nullopt;
    }

    // Span-and-bracket until stable; returns an exact row-reduced basis.
    RowSpan<Rat> subalgebra_closure(const std::vector<LieElement>& gens) const {
        return closure(gens, /*against_whole_algebra=*/false);
    }
    RowSpan<Rat> ideal_closure(const std::vector<LieElement>& gens) const {
        return closure(gens, /*against_whole_algebra=*/true);
    }

    bool is_ideal(const RowSpan<Rat>& span) const {
        for (int b = 0; b < dim(); ++b)
            for (const auto& row : span.rows()) {
                LieElement w = bracket(LieElement::unit(b), LieElement::from_dense(row));
                if (!span.contains(w.dense(dim()))) return false;
            }
        return true;
    }

    // Structure constants induced on the complement of an ideal (complement =
    // basis labels away from the ideal's pivot coordinates).
    LieAlgebra quotient(const RowSpan<Rat>& ideal) const {
        if (!is_ideal(ideal)) throw std::invalid_argument("quotient: span is not an ideal (bracket escapes)");
        std::vector<bool> is_piv(size_t(dim()), false);
        for (int p : ideal.pivots()) is_piv[size_t(p)] = true;
        std::vector<int> comp;
        for (int k = 0; k < dim(); ++k)
            if (!is_piv[size_t(k)]) comp.push_back(k);
        std::map<int, int> comp_index;
        for (size_t k = 0; k < comp.size(); ++k) comp_index[comp[k]] = int(k);
        std::vector<std::string> labels;
        for (int k : comp) labels.push_back(labels_[size_t(k)]);
        std::map<std::pair<int, int>, LieElement> table;
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = a + 1; b < comp.size(); ++b) {
                LieElement br = bracket_basis(comp[a], comp[b]);
                std::vector<Rat> red = ideal.reduce(br.dense(dim()));
                LieElement q;
                for (size_t k = 0; k < red.size(); ++k) {
                    if (red[k] == 0) continue;
                    auto it = comp_index.find(int(k));
                    if (it == comp_index.end())
                        throw std::logic_error("quotient: reduction left an ideal pivot coordinate");
                    q.add(it->second, red[k]);
                }
                if (!q.is_zero()) table[{int(a), int(b)}] = std::move(q);
            }
        return LieAlgebra(std::move(labels), std::move(table));
    }

    // Class of an element in the quotient coordinates produced by quotient().
    LieElement project_to_quotient(const RowSpan<Rat>& ideal, const LieElement& e) const {
        std::vector<bool> is_piv(size_t(dim()), false);
        for (int p : ideal.pivots()) is_piv[size_t(p)] = true;
        std::vector<Rat> red = ideal.reduce(e.dense(dim()));
        LieElement q;
        int ci = 0;
        for (int k = 0; k < dim(); ++k) {
            if (is_piv[size_t(k)]) continue;
            if (red[size_t(k)] != 0) q.add(ci, red[size_t(k)]);
            ++ci;
        }
        return q;
    }

    struct WeightDecomposition {
        // weight tuple (values on the given h-basis, in order) -> basis indices
        std::map<std::vector<Rat>, std::vector<int>> spaces;
        bool diagonal = true;
        int offending_basis_index = -1;
    };

    // Requires every basis element to be a simultaneous ad(h)-eigenvector for
    // the given h's; reports failure otherwise.
    WeightDecomposition weight_decomposition(const std::vector<LieElement>& h_basis) const {
        WeightDecomposition out;
        for (int b = 0; b < dim(); ++b) {
            std::vector<Rat> weight;
            for (const auto& h : h_basis) {
                LieElement w = bracket(h, LieElement::unit(b));
                Rat lambda(0);
                bool ok = true;
                if (!w.is_zero()) {
                    if (w.terms.size() != 1 || w.terms.begin()->first != b) ok = false;
                    else lambda = w.terms.begin()->second;
                }
                if (!ok) {
                    out.diagonal = false;
                    out.offending_basis_index = b;
                    return out;
                }
                weight.push_back(lambda);
            }
            out.spaces[weight].push_back(b);
        }
        return out;
    }

private:
    RowSpan<Rat> closure(const std::vector<LieElement>& gens, bool against_whole_algebra) const {
        RowSpan<Rat> span(dim());
        std::vector<LieElement> frontier;
        for (const auto& g : gens)
            if (span.insert(g.dense(dim()))) frontier.push_back(g);
        while (!frontier.empty()) {
            std::vector<LieElement> next;
            std::vector<std::vector<Rat>> current_rows = span.rows();
            for (const auto& f : frontier) {
                if (against_whole_algebra) {
                    for (int b = 0; b < dim(); ++b) {
                        LieElement w = bracket(LieElement::unit(b), f);
                        if (span.insert(w.dense(dim()))) next.push_back(std::move(w));
                    }
                } else {
                    for (const auto& row : current_rows) {
                        LieElement w = bracket(LieElement::from_dense(row), f);
                        if (span.insert(w.dense(dim()))) next.push_back(std::move(w));
                    }
                }
            }
            frontier = std::move(next);
        }
        return span;
    }

    std::vector<std::string> labels_;
    std::map<std::pair<int, int>, LieElement> table_;
};

}  // namespace gentle
