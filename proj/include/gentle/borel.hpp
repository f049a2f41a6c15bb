// Concrete matrix models of the Borel subalgebras b_B in so(2n+1) and b_C in
// sp(2n): Chevalley generators for an antidiagonal form (so the Borel is upper
// triangular), Serre-relation verification, root-space bases x_{i,j} / x'_{i,j}
// built by the recursive bracket recipe, and the word-evaluation isomorphism
// check against quotient algebras.
#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "gentle/liecore.hpp"
#include "gentle/matrix.hpp"
#include "gentle/report.hpp"
#include "gentle/rootsys.hpp"

namespace gentle {

enum class BorelType { B, C };

inline std::string borel_type_str(BorelType t) { return t == BorelType::B ? "B" : "C"; }

inline Matrix<Rat> comm(const Matrix<Rat>& a, const Matrix<Rat>& b) { return a * b - b * a; }

inline std::vector<Rat> flatten(const Matrix<Rat>& m) {
    std::vector<Rat> v;
    v.reserve(size_t(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

struct MatrixLieModel {
    BorelType type = BorelType::B;
    int n = 0;
    int ambient = 0;                  // 2n+1 (type B) or 2n (type C)
    Matrix<Rat> form;                 // J with X^t J + J X = 0 for all members
    std::vector<Matrix<Rat>> x;       // x_1..x_n (resp. x'_i)
    std::vector<Matrix<Rat>> h;       // h_1..h_n (resp. h'_i)
    Matrix<Rat> eps_of_h;             // (eps_i(h_j))_{i,j}
    RowSpan<Rat> closure{0};          // Lie closure, flattened coordinates

    int dim() const { return closure.rank(); }

    bool in_ambient_algebra(const Matrix<Rat>& m) const {
        return (m.transpose() * form + form * m).is_zero();
    }
};

// (B2)/(C2) eigenvalue of [h_i, x_j] = c x_j; also the coefficient table used
// when verifying the presentation on any generator images.
inline long serre_h_coeff(BorelType t, int n, int i, int j) {
    if (i == j) return 2;
    if (t == BorelType::B) {
        if (std::abs(i - j) == 1 && i != n) return -1;
        if (j == n - 1 && i == n) return -2;
    } else {
        if (std::abs(i - j) == 1 && j != n) return -1;
        if (j == n && i == n - 1) return -2;
    }
    return 0;
}

// Number of brackets in the (B3)/(C3) Serre relation ad(x_i)^k x_j = 0:
// returns k (2, 3, or 1 for the commuting case). Only defined for i != j.
inline int serre_ad_power(BorelType t, int n, int i, int j) {
    if (t == BorelType::B) {
        if (std::abs(i - j) == 1 && i != n) return 2;
        if (j == n - 1 && i == n) return 3;
    } else {
        if (std::abs(i - j) == 1 && j != n) return 2;
        if (j == n && i == n - 1) return 3;
    }
    return 1;
}

inline MatrixLieModel build_borel(BorelType type, int n) {
    if (n < 1) throw std::invalid_argument("build_borel: rank must be >= 1");
    MatrixLieModel m;
    m.type = type;
    m.n = n;
    m.ambient = type == BorelType::B ? 2 * n + 1 : 2 * n;
    int N = m.ambient;
    auto mirror = [N](int i) { return N + 1 - i; };  // 1-based
    m.form = Matrix<Rat>(N, N);
    for (int i = 1; i <= N; ++i) {
        Rat s(1);
        if (type == BorelType::C && i > n) s = -1;
        m.form(i - 1, mirror(i) - 1) = s;
    }
    auto E = [N](int i, int j) {  // elementary matrix, 1-based
        Matrix<Rat> e(N, N);
        e(i - 1, j - 1) = 1;
        return e;
    };
    auto H = [&](int i) { return E(i, i) - E(mirror(i), mirror(i)); };

    for (int i = 1; i <= n; ++i) {
        if (i < n)
            m.x.push_back(E(i, i + 1) - E(mirror(i + 1), mirror(i)));
        else if (type == BorelType::B)
            m.x.push_back(E(n, n + 1) - E(n + 1, n + 2));
        else
            m.x.push_back(E(n, n + 1));
        if (i < n)
            m.h.push_back(H(i) - H(i + 1));
        else
            m.h.push_back(type == BorelType::B ? H(n) * Rat(2) : H(n));
    }

    // the matrix (eps_i(h_j)): eps_i reads the i-th diagonal entry
    m.eps_of_h = Matrix<Rat>(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.eps_of_h(i - 1, j - 1) = m.h[size_t(j) - 1](i - 1, i - 1);

    // verify the defining relations exactly; a failure means a wrong
    // generator convention and aborts
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (!comm(m.h[size_t(i) - 1], m.h[size_t(j) - 1]).is_zero())
                throw std::logic_error("build_borel: (B1)/(C1) fails");
            Matrix<Rat> lhs = comm(m.h[size_t(i) - 1], m.x[size_t(j) - 1]);
            Matrix<Rat> rhs = m.x[size_t(j) - 1] * Rat(serre_h_coeff(type, n, i, j));
            if (lhs != rhs) throw std::logic_error("build_borel: (B2)/(C2) fails");
            if (i != j) {
                Matrix<Rat> ad = m.x[size_t(j) - 1];
                for (int k = 0; k < serre_ad_power(type, n, i, j); ++k) ad = comm(m.x[size_t(i) - 1], ad);
                if (!ad.is_zero()) throw std::logic_error("build_borel: (B3)/(C3) fails");
            }
        }

    // Lie closure of {x_i, h_i}
    m.closure = RowSpan<Rat>(N * N);
    std::vector<Matrix<Rat>> frontier;
    std::vector<Matrix<Rat>> members;
    for (const auto& g : m.x)
        if (m.closure.insert(flatten(g))) { frontier.push_back(g); members.push_back(g); }
    for (const auto& g : m.h)
        if (m.closure.insert(flatten(g))) { frontier.push_back(g); members.push_back(g); }
    while (!frontier.empty()) {
        std::vector<Matrix<Rat>> next;
        std::vector<Matrix<Rat>> snapshot = members;
        for (const auto& f : frontier)
            for (const auto& b : snapshot) {
                Matrix<Rat> w = comm(b, f);
                if (m.closure.insert(flatten(w))) { next.push_back(w); members.push_back(w); }
            }
        frontier = std::move(next);
    }
    for (const auto& mem : members)
        if (!m.in_ambient_algebra(mem)) throw std::logic_error("build_borel: closure escapes the ambient algebra");
    return m;
}

// ---------------------------------------------------------------------------
// Root-space bases per the recursive recipe x_{i,i} = x_i,
// x_{i,j} = [x_{i,j-1}, x_j].

struct RootSpaceBasis {
    std::map<Root, Matrix<Rat>> vectors;  // positive root -> basis matrix
    CheckReport report;
};

inline RootSpaceBasis root_space_basis(const MatrixLieModel& m) {
    RootSpaceBasis out;
    int n = m.n;
    const std::string tag = "borel.root_space." + borel_type_str(m.type);

    // x_{i,j} for i <= j <= n
    std::vector<std::vector<Matrix<Rat>>> xij(size_t(n) + 1, std::vector<Matrix<Rat>>(size_t(n) + 1));
    for (int i = 1; i <= n; ++i) {
        xij[size_t(i)][size_t(i)] = m.x[size_t(i) - 1];
        for (int j = i + 1; j <= n; ++j) xij[size_t(i)][size_t(j)] = comm(xij[size_t(i)][size_t(j) - 1], m.x[size_t(j) - 1]);
    }

    std::map<Root, std::pair<std::string, Matrix<Rat>>> claimed;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            claimed[Root::eps(i, n) - Root::eps(j, n)] = {"x(" + std::to_string(i) + "," + std::to_string(j - 1) + ")",
                                                          xij[size_t(i)][size_t(j) - 1]};
    if (m.type == BorelType::B) {
        for (int i = 1; i <= n; ++i) claimed[Root::eps(i, n)] = {"x(i,n)", xij[size_t(i)][size_t(n)]};
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                claimed[Root::eps(i, n) + Root::eps(j, n)] = {"[x(i,n),x(j,n)]",
                                                              comm(xij[size_t(i)][size_t(n)], xij[size_t(j)][size_t(n)])};
    } else {
        for (int i = 1; i < n; ++i)
            claimed[Root::eps(i, n, 2)] = {"[x'(i,n-1),x'(i,n)]", comm(xij[size_t(i)][size_t(n) - 1], xij[size_t(i)][size_t(n)])};
        claimed[Root::eps(n, n, 2)] = {"x'(n,n)", xij[size_t(n)][size_t(n)]};
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                claimed[Root::eps(i, n) + Root::eps(j, n)] = {"[x'(j,n-1),x'(i,n)]",
                                                              comm(xij[size_t(j)][size_t(n) - 1], xij[size_t(i)][size_t(n)])};
        for (int i = 1; i < n; ++i) claimed[Root::eps(i, n) + Root::eps(n, n)] = {"x'(i,n)", xij[size_t(i)][size_t(n)]};
    }

    for (const auto& [root, named] : claimed) {
        const auto& [name, vec] = named;
        if (vec.is_zero()) {
            out.report.add(tag, name + " at " + root.str(), "nonzero", "0", CheckStatus::Fail);
            continue;
        }
        // weight values mu(h_j) = sum_i c_i eps_i(h_j)
        bool eigen = true;
        for (int j = 1; j <= n; ++j) {
            Rat lambda(0);
            for (int i = 1; i <= n; ++i) lambda += Rat(root.coeffs[size_t(i) - 1]) * m.eps_of_h(i - 1, j - 1);
            if (comm(m.h[size_t(j) - 1], vec) != vec * lambda) { eigen = false; break; }
        }
        out.report.expect(tag + ".weight", name + " at " + root.str(), eigen);
        // 1-dimensionality inside the closure: solve [h_j, v] = mu(h_j) v
        std::vector<std::vector<Rat>> rows = m.closure.rows();
        int D = m.closure.rank(), A = m.ambient;
        Matrix<Rat> sys(n * A * A, D);
        for (int c = 0; c < D; ++c) {
            Matrix<Rat> bc(A, A);
            int idx = 0;
            for (int r = 0; r < A; ++r)
                for (int s = 0; s < A; ++s) bc(r, s) = rows[size_t(c)][size_t(idx++)];
            int e = 0;
            for (int j = 1; j <= n; ++j) {
                Rat lambda(0);
                for (int i = 1; i <= n; ++i) lambda += Rat(root.coeffs[size_t(i) - 1]) * m.eps_of_h(i - 1, j - 1);
                Matrix<Rat> lhs = comm(m.h[size_t(j) - 1], bc) - bc * lambda;
                for (int r = 0; r < A; ++r)
                    for (int s = 0; s < A; ++s) sys(e++, c) = lhs(r, s);
            }
        }
        int space_dim = D - sys.rank();
        out.report.expect_eq(tag + ".dimension", root.str(), "1", std::to_string(space_dim));
        out.vectors[root] = vec;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Bracket words over the generators, shared between the matrix model and
// structure-constant algebras.

struct Word {
    enum Kind { GenX, GenH, Bracket } kind = GenX;
    int idx = 0;        // generator index, 1-based
    int left = -1;      // pool indices for Bracket
    int right = -1;
};

struct WordList {
    std::vector<Word> pool;
    std::vector<int> roots;
    std::vector<std::string> names;

    int gen_x(int i) {
        pool.push_back({Word::GenX, i, -1, -1});
        return int(pool.size()) - 1;
    }
    int gen_h(int i) {
        pool.push_back({Word::GenH, i, -1, -1});
        return int(pool.size()) - 1;
    }
    int br(int l, int r) {
        pool.push_back({Word::Bracket, 0, l, r});
        return int(pool.size()) - 1;
    }
    void add(int w, std::string name) {
        roots.push_back(w);
        names.push_back(std::move(name));
    }
};

// The (g1)/(g2) basis words restricted to one type; evaluating them in any
// algebra with designated generators spans the Borel of that type.
inline WordList borel_basis_words(BorelType type, int n) {
    WordList wl;
    std::vector<std::vector<int>> xij(size_t(n) + 1, std::vector<int>(size_t(n) + 1, -1));
    for (int i = 1; i <= n; ++i) {
        xij[size_t(i)][size_t(i)] = wl.gen_x(i);
        for (int j = i + 1; j <= n; ++j) xij[size_t(i)][size_t(j)] = wl.br(xij[size_t(i)][size_t(j) - 1], wl.gen_x(j));
    }
    auto xs = [&](int i, int j) { return xij[size_t(i)][size_t(j)]; };
    std::string p = type == BorelType::B ? "x" : "x'";
    if (type == BorelType::B) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) wl.add(xs(i, j), p + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                wl.add(wl.br(xs(i, n), xs(j, n)), "[x(" + std::to_string(i) + ",n),x(" + std::to_string(j) + ",n)]");
    } else {
        for (int i = 1; i <= n - 1; ++i)
            for (int j = i; j <= n - 1; ++j) wl.add(xs(i, j), p + "(" + std::to_string(i) + "," + std::to_string(j) + ")");
        for (int i = 1; i < n; ++i)
            wl.add(wl.br(xs(i, n - 1), xs(i, n)), "[x'(" + std::to_string(i) + ",n-1),x'(" + std::to_string(i) + ",n)]");
        wl.add(xs(n, n), "x'(n,n)");
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                wl.add(wl.br(xs(j, n - 1), xs(i, n)), "[x'(" + std::to_string(j) + ",n-1),x'(" + std::to_string(i) + ",n)]");
        for (int i = 1; i < n; ++i) wl.add(xs(i, n), "x'(" + std::to_string(i) + ",n)");
    }
    for (int i = 1; i <= n; ++i) wl.add(wl.gen_h(i), "h(" + std::to_string(i) + ")");
    return wl;
}

inline Matrix<Rat> eval_word_matrix(const WordList& wl, int w, const MatrixLieModel& m) {
    const Word& node = wl.pool[size_t(w)];
    switch (node.kind) {
        case Word::GenX: return m.x[size_t(node.idx) - 1];
        case Word::GenH: return m.h[size_t(node.idx) - 1];
        case Word::Bracket: return comm(eval_word_matrix(wl, node.left, m), eval_word_matrix(wl, node.right, m));
    }
    throw std::logic_error("bad word");
}

inline LieElement eval_word_lie(const WordList& wl, int w, const LieAlgebra& L,
                                const std::vector<LieElement>& x_gens, const std::vector<LieElement>& h_gens) {
    const Word& node = wl.pool[size_t(w)];
    switch (node.kind) {
        case Word::GenX: return x_gens[size_t(node.idx) - 1];
        case Word::GenH: return h_gens[size_t(node.idx) - 1];
        case Word::Bracket:
            return L.bracket(eval_word_lie(wl, node.left, L, x_gens, h_gens),
                             eval_word_lie(wl, node.right, L, x_gens, h_gens));
    }
    throw std::logic_error("bad word");
}

// Checks that sending each basis word evaluated in `q` to the same word
// evaluated in `model` is a well-defined bijective Lie homomorphism: both word
// families must be bases, and all pairwise bracket coordinates must agree.
inline CheckReport quotient_iso_check(const LieAlgebra& q, const std::vector<LieElement>& x_gens,
                                      const std::vector<LieElement>& h_gens, const MatrixLieModel& model) {
    CheckReport rep;
    const std::string tag = "borel.iso." + borel_type_str(model.type);
    WordList wl = borel_basis_words(model.type, model.n);
    int D = int(wl.roots.size());
    rep.expect_eq(tag + ".dim", "dim q == dim model", std::to_string(model.dim()), std::to_string(q.dim()));
    if (q.dim() != model.dim() || q.dim() != D) {
        rep.expect_eq(tag + ".dim", "word count == dim", std::to_string(q.dim()), std::to_string(D));
        return rep;
    }

    std::vector<LieElement> qv;
    std::vector<Matrix<Rat>> mv;
    for (int r : wl.roots) {
        qv.push_back(eval_word_lie(wl, r, q, x_gens, h_gens));
        mv.push_back(eval_word_matrix(wl, r, model));
    }
    std::vector<std::vector<Rat>> qcols, mcols;
    for (const auto& e : qv) qcols.push_back(e.dense(q.dim()));
    for (const auto& m : mv) mcols.push_back(flatten(m));

    Matrix<Rat> Q(q.dim(), D), M(model.ambient * model.ambient, D);
    for (int c = 0; c < D; ++c) {
        Q.set_col(c, qcols[size_t(c)]);
        M.set_col(c, mcols[size_t(c)]);
    }
    int qrank = Q.rank(), mrank = M.rank();
    rep.expect_eq(tag + ".span", "rank of quotient word family", std::to_string(D), std::to_string(qrank));
    rep.expect_eq(tag + ".span", "rank of model word family", std::to_string(D), std::to_string(mrank));
    if (qrank != D || mrank != D) return rep;

    int mismatches = 0;
    std::string witness;
    for (int a = 0; a < D && mismatches == 0; ++a)
        for (int b = a + 1; b < D && mismatches == 0; ++b) {
            LieElement qb = q.bracket(qv[size_t(a)], qv[size_t(b)]);
            Matrix<Rat> mb = comm(mv[size_t(a)], mv[size_t(b)]);
            auto qc = Q.solve(qb.dense(q.dim()));
            auto mc = M.solve(flatten(mb));
            if (!qc || !mc || *qc != *mc) {
                ++mismatches;
                witness = "[" + wl.names[size_t(a)] + ", " + wl.names[size_t(b)] + "]";
            }
        }
    rep.expect(tag + ".brackets", mismatches == 0 ? "all pairs" : witness, mismatches == 0,
               mismatches == 0 ? "" : "bracket coordinates differ at " + witness);
    return rep;
}

}  // namespace gentle
