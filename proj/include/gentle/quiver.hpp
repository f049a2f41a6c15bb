// The bound quiver of Lambda(n-1,1,1) (linear A_n quiver plus a loop alpha at
// the last vertex, bound by alpha^2 = 0), its representations over an exact
// field, the indecomposables U/V/W as explicit matrix representations, Hom
// spaces by exact intertwiner solving, iso-type recognition via
// Hom-fingerprints (Auslander criterion), the Cartan matrix and the symmetric
// bilinear form (-,-)_A.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gentle/indec.hpp"
#include "gentle/matrix.hpp"
#include "gentle/rootsys.hpp"

namespace gentle {

struct Arrow {
    int src;  // 0-based vertex
    int dst;
};

// n vertices 1..n (stored 0-based): arrows v -> v+1 for v < n, loop at n.
struct BoundQuiver {
    int n;
    explicit BoundQuiver(int rank) : n(rank) {
        if (n < 1) throw std::invalid_argument("BoundQuiver: rank must be >= 1");
    }
    int arrow_count() const { return n; }
    Arrow arrow(int a) const {
        if (a < n - 1) return {a, a + 1};
        return {n - 1, n - 1};  // the loop alpha
    }
    int loop_index() const { return n - 1; }
};

using DimVector = std::vector<int>;

// A representation: one space per vertex, one matrix per arrow. maps[a] has
// shape dims[dst] x dims[src].
template <typename F>
struct Rep {
    int n = 0;
    DimVector dims;
    std::vector<Matrix<F>> maps;

    static Rep zero(int n) {
        Rep r;
        r.n = n;
        r.dims.assign(size_t(n), 0);
        for (int a = 0; a < n; ++a) r.maps.emplace_back(0, 0);
        return r;
    }

    const Matrix<F>& loop() const { return maps[size_t(n) - 1]; }

    bool satisfies_relation() const {  // alpha^2 = 0
        return (loop() * loop()).is_zero();
    }

    int total_dim() const {
        int s = 0;
        for (int d : dims) s += d;
        return s;
    }

    bool is_zero() const { return total_dim() == 0; }
};

// A morphism of representations: one matrix per vertex, at[v] maps M_v -> N_v.
template <typename F>
struct Morphism {
    std::vector<Matrix<F>> at;

    static Morphism zero(const Rep<F>& M, const Rep<F>& N) {
        Morphism f;
        for (int v = 0; v < M.n; ++v) f.at.emplace_back(N.dims[size_t(v)], M.dims[size_t(v)]);
        return f;
    }

    bool is_zero() const {
        for (const auto& m : at)
            if (!m.is_zero()) return false;
        return true;
    }

    friend Morphism operator*(const Morphism& g, const Morphism& f) {  // g after f
        Morphism h;
        for (size_t v = 0; v < f.at.size(); ++v) h.at.push_back(g.at[v] * f.at[v]);
        return h;
    }
    friend Morphism operator+(const Morphism& a, const Morphism& b) {
        Morphism h;
        for (size_t v = 0; v < a.at.size(); ++v) h.at.push_back(a.at[v] + b.at[v]);
        return h;
    }
    Morphism operator*(const F& s) const {
        Morphism h;
        for (const auto& m : at) h.push_back_scaled(m, s);
        return h;
    }

    bool intertwines(const Rep<F>& M, const Rep<F>& N) const {
        BoundQuiver q(M.n);
        for (int a = 0; a < q.arrow_count(); ++a) {
            Arrow ar = q.arrow(a);
            if (at[size_t(ar.dst)] * M.maps[size_t(a)] != N.maps[size_t(a)] * at[size_t(ar.src)])
                return false;
        }
        return true;
    }

private:
    void push_back_scaled(const Matrix<F>& m, const F& s) { at.push_back(m * s); }
};

// ---------------------------------------------------------------------------
// Indecomposables

// Closed-form dimension vector of an indecomposable label.
inline DimVector dim_vector(const IndecType& t, int n) {
    t.require_valid(n);
    DimVector d(size_t(n), 0);
    switch (t.fam) {
        case Family::W:
            for (int v = t.i; v <= t.j; ++v) d[size_t(v) - 1] = 1;
            break;
        case Family::V:
            for (int v = t.i; v <= n; ++v) d[size_t(v) - 1] = 1;
            break;
        case Family::U: {
            int a = std::min(t.i, t.j), b = std::max(t.i, t.j);
            for (int v = a; v < b; ++v) d[size_t(v) - 1] = 1;
            for (int v = b; v <= n; ++v) d[size_t(v) - 1] = 2;
            break;
        }
    }
    return d;
}

inline DimVector dim_vector(const IndecMultiset& s, int n) {
    DimVector d(size_t(n), 0);
    for (const auto& [t, m] : s) {
        DimVector dt = dim_vector(t, n);
        for (size_t k = 0; k < d.size(); ++k) d[k] += m * dt[k];
    }
    return d;
}

template <typename F>
DimVector dim_vector(const Rep<F>& r) {
    return r.dims;
}

// The representation drawn in the classification: W and V are interval modules
// with identity transition maps (V with zero loop); U has a one-dimensional
// tail included via e_1 (j <= i) or e_2 (i < j) into a K^2 band carrying the
// nilpotent loop [[0,0],[1,0]].
template <typename F>
Rep<F> build_indec(const IndecType& t, int n) {
    t.require_valid(n);
    Rep<F> r;
    r.n = n;
    r.dims = dim_vector(t, n);
    BoundQuiver q(n);
    const F one = FieldTraits<F>::one();
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        int rs = r.dims[size_t(ar.src)], rd = r.dims[size_t(ar.dst)];
        Matrix<F> m(rd, rs);
        if (a == q.loop_index()) {
            if (t.fam == Family::U) {
                // alpha = [[0,0],[1,0]]
                m(1, 0) = one;
            }
            // V and W carry the zero loop (W has no space at vertex n at all)
        } else {
            if (rs == 1 && rd == 1) m(0, 0) = one;
            else if (rs == 2 && rd == 2) { m(0, 0) = one; m(1, 1) = one; }
            else if (rs == 1 && rd == 2) {
                if (t.j <= t.i) m(0, 0) = one;  // e_1
                else m(1, 0) = one;             // e_2
            }
            // rs == 0: nothing to do
        }
        r.maps.push_back(std::move(m));
    }
    return r;
}

template <typename F>
Rep<F> direct_sum(const std::vector<Rep<F>>& parts, int n) {
    Rep<F> r;
    r.n = n;
    r.dims.assign(size_t(n), 0);
    for (const auto& p : parts)
        for (int v = 0; v < n; ++v) r.dims[size_t(v)] += p.dims[size_t(v)];
    BoundQuiver q(n);
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        Matrix<F> m(r.dims[size_t(ar.dst)], r.dims[size_t(ar.src)]);
        int ro = 0, co = 0;
        for (const auto& p : parts) {
            const Matrix<F>& b = p.maps[size_t(a)];
            for (int i = 0; i < b.rows(); ++i)
                for (int j = 0; j < b.cols(); ++j) m(ro + i, co + j) = b(i, j);
            ro += p.dims[size_t(ar.dst)];
            co += p.dims[size_t(ar.src)];
        }
        r.maps.push_back(std::move(m));
    }
    return r;
}

template <typename F>
Rep<F> build_module(const IndecMultiset& s, int n) {
    std::vector<Rep<F>> parts;
    for (const auto& [t, m] : s)
        for (int k = 0; k < m; ++k) parts.push_back(build_indec<F>(t, n));
    return direct_sum(parts, n);
}

// ---------------------------------------------------------------------------
// Gabriel bijection

inline Root gabriel_root(const IndecType& t, int n) {
    t.require_valid(n);
    switch (t.fam) {
        case Family::W: return Root::eps(t.i, n) - Root::eps(t.j + 1, n);
        case Family::V: return Root::eps(t.i, n);
        case Family::U:
            if (t.i == t.j) return Root::eps(t.i, n, 2);
            return Root::eps(std::min(t.i, t.j), n) + Root::eps(std::max(t.i, t.j), n);
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Hom spaces

// Linear system expressing the intertwiner equations f_dst M_a = N_a f_src.
// Unknowns: entries of all f_v, row-major per vertex.
template <typename F>
Matrix<F> hom_system(const Rep<F>& M, const Rep<F>& N) {
    int n = M.n;
    if (n != N.n) throw std::invalid_argument("hom: rank mismatch");
    BoundQuiver q(n);
    std::vector<int> offset(size_t(n) + 1, 0);
    for (int v = 0; v < n; ++v) offset[size_t(v) + 1] = offset[size_t(v)] + N.dims[size_t(v)] * M.dims[size_t(v)];
    int vars = offset[size_t(n)];
    int eqs = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        eqs += N.dims[size_t(ar.dst)] * M.dims[size_t(ar.src)];
    }
    Matrix<F> sys(eqs, vars);
    auto var = [&](int v, int p, int c) { return offset[size_t(v)] + p * M.dims[size_t(v)] + c; };
    int e = 0;
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        const Matrix<F>& Ma = M.maps[size_t(a)];
        const Matrix<F>& Na = N.maps[size_t(a)];
        // (f_dst Ma)(p,c) - (Na f_src)(p,c) = 0
        for (int p = 0; p < N.dims[size_t(ar.dst)]; ++p)
            for (int c = 0; c < M.dims[size_t(ar.src)]; ++c) {
                for (int r = 0; r < M.dims[size_t(ar.dst)]; ++r)
                    sys(e, var(ar.dst, p, r)) += Ma(r, c);
                for (int r = 0; r < N.dims[size_t(ar.src)]; ++r)
                    sys(e, var(ar.src, r, c)) -= Na(p, r);
                ++e;
            }
    }
    return sys;
}

template <typename F>
int hom_dim(const Rep<F>& M, const Rep<F>& N) {
    int vars = 0;
    for (int v = 0; v < M.n; ++v) vars += N.dims[size_t(v)] * M.dims[size_t(v)];
    if (vars == 0) return 0;
    return vars - hom_system(M, N).rank();
}

template <typename F>
std::vector<Morphism<F>> hom_basis(const Rep<F>& M, const Rep<F>& N) {
    int n = M.n;
    std::vector<int> offset(size_t(n) + 1, 0);
    for (int v = 0; v < n; ++v) offset[size_t(v) + 1] = offset[size_t(v)] + N.dims[size_t(v)] * M.dims[size_t(v)];
    Matrix<F> ker = hom_system(M, N).kernel_basis();
    std::vector<Morphism<F>> basis;
    for (int b = 0; b < ker.rows(); ++b) {
        Morphism<F> f = Morphism<F>::zero(M, N);
        for (int v = 0; v < n; ++v)
            for (int p = 0; p < N.dims[size_t(v)]; ++p)
                for (int c = 0; c < M.dims[size_t(v)]; ++c)
                    f.at[size_t(v)](p, c) = ker(b, offset[size_t(v)] + p * M.dims[size_t(v)] + c);
        basis.push_back(std::move(f));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Sub- and quotient representations from arrow-invariant subspace tuples.
// bases[v] holds, as rows in reduced echelon form, a basis of the chosen
// subspace of F^{dims[v]}.

template <typename F>
bool is_invariant(const Rep<F>& Z, const std::vector<RowSpan<F>>& bases) {
    BoundQuiver q(Z.n);
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        for (const auto& row : bases[size_t(ar.src)].rows()) {
            std::vector<F> img = Z.maps[size_t(a)].apply(row);
            if (!bases[size_t(ar.dst)].contains(img)) return false;
        }
    }
    return true;
}

template <typename F>
struct SubRep {
    Rep<F> rep;
    Morphism<F> incl;  // rep -> ambient
};

template <typename F>
SubRep<F> subrep(const Rep<F>& Z, const std::vector<RowSpan<F>>& bases) {
    int n = Z.n;
    SubRep<F> out;
    out.rep.n = n;
    out.rep.dims.resize(size_t(n));
    for (int v = 0; v < n; ++v) {
        out.rep.dims[size_t(v)] = bases[size_t(v)].rank();
        Matrix<F> inc(Z.dims[size_t(v)], bases[size_t(v)].rank());
        for (int k = 0; k < bases[size_t(v)].rank(); ++k) inc.set_col(k, bases[size_t(v)].rows()[size_t(k)]);
        out.incl.at.push_back(std::move(inc));
    }
    BoundQuiver q(n);
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        const RowSpan<F>& Bs = bases[size_t(ar.src)];
        const RowSpan<F>& Bt = bases[size_t(ar.dst)];
        Matrix<F> m(Bt.rank(), Bs.rank());
        for (int c = 0; c < Bs.rank(); ++c) {
            std::vector<F> img = Z.maps[size_t(a)].apply(Bs.rows()[size_t(c)]);
            // express img in the echelon rows of Bt
            std::vector<F> coords(size_t(Bt.rank()), FieldTraits<F>::zero());
            std::vector<F> res = img;
            for (int r = 0; r < Bt.rank(); ++r) {
                F f = res[size_t(Bt.pivots()[size_t(r)])];
                coords[size_t(r)] = f;
                if (FieldTraits<F>::is_zero(f)) continue;
                for (size_t k = 0; k < res.size(); ++k) res[k] -= f * Bt.rows()[size_t(r)][k];
            }
            for (const F& x : res)
                if (!FieldTraits<F>::is_zero(x))
                    throw std::invalid_argument("subrep: subspaces are not arrow-invariant");
            m.set_col(c, coords);
        }
        out.rep.maps.push_back(std::move(m));
    }
    return out;
}

template <typename F>
struct QuotRep {
    Rep<F> rep;
    Morphism<F> proj;  // ambient -> rep
};

template <typename F>
QuotRep<F> quotient_rep(const Rep<F>& Z, const std::vector<RowSpan<F>>& bases) {
    int n = Z.n;
    QuotRep<F> out;
    out.rep.n = n;
    out.rep.dims.resize(size_t(n));
    std::vector<std::vector<int>> nonpiv(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<bool> is_piv(size_t(Z.dims[size_t(v)]), false);
        for (int p : bases[size_t(v)].pivots()) is_piv[size_t(p)] = true;
        for (int c = 0; c < Z.dims[size_t(v)]; ++c)
            if (!is_piv[size_t(c)]) nonpiv[size_t(v)].push_back(c);
        out.rep.dims[size_t(v)] = int(nonpiv[size_t(v)].size());
        // projection: eliminate pivot coordinates with the echelon rows, then
        // read off the non-pivot coordinates
        Matrix<F> pr(out.rep.dims[size_t(v)], Z.dims[size_t(v)]);
        for (int c = 0; c < Z.dims[size_t(v)]; ++c) {
            std::vector<F> y(size_t(Z.dims[size_t(v)]), FieldTraits<F>::zero());
            y[size_t(c)] = FieldTraits<F>::one();
            y = bases[size_t(v)].reduce(y);
            for (size_t k = 0; k < nonpiv[size_t(v)].size(); ++k) pr(int(k), c) = y[size_t(nonpiv[size_t(v)][k])];
        }
        out.proj.at.push_back(std::move(pr));
    }
    BoundQuiver q(n);
    for (int a = 0; a < q.arrow_count(); ++a) {
        Arrow ar = q.arrow(a);
        // quotient map = proj_dst . Z_a . section_src, the section including
        // the non-pivot unit vectors
        Matrix<F> m(out.rep.dims[size_t(ar.dst)], out.rep.dims[size_t(ar.src)]);
        for (size_t k = 0; k < nonpiv[size_t(ar.src)].size(); ++k) {
            std::vector<F> lift(size_t(Z.dims[size_t(ar.src)]), FieldTraits<F>::zero());
            lift[size_t(nonpiv[size_t(ar.src)][k])] = FieldTraits<F>::one();
            std::vector<F> img = out.proj.at[size_t(ar.dst)].apply(Z.maps[size_t(a)].apply(lift));
            m.set_col(int(k), img);
        }
        out.rep.maps.push_back(std::move(m));
    }
    return out;
}

// Kernel of a morphism as a subrepresentation of its source.
template <typename F>
std::vector<RowSpan<F>> kernel_subspaces(const Rep<F>& M, const Morphism<F>& f) {
    std::vector<RowSpan<F>> bases;
    for (int v = 0; v < M.n; ++v) {
        RowSpan<F> sp(M.dims[size_t(v)]);
        Matrix<F> k = f.at[size_t(v)].kernel_basis();
        for (int r = 0; r < k.rows(); ++r) sp.insert(k.row(r));
        bases.push_back(std::move(sp));
    }
    return bases;
}

// ---------------------------------------------------------------------------
// Cartan matrix and the bilinear form (-,-)_A

inline Matrix<Rat> cartan_matrix(int n) {
    if (n < 1) throw std::invalid_argument("cartan_matrix: rank must be >= 1");
    Matrix<Rat> c(n, n);
    for (int j = 1; j <= n; ++j) {
        DimVector d = dim_vector(IndecType::projective(j, n), n);
        for (int i = 1; i <= n; ++i) c(i - 1, j - 1) = Rat(d[size_t(i) - 1]);
    }
    return c;
}

// C_A^{-1} + C_A^{-t}
inline Matrix<Rat> symmetrized_cartan_inverse(int n) {
    Matrix<Rat> c = cartan_matrix(n);
    auto inv = c.inverse();
    if (!inv) throw std::logic_error("Cartan matrix not invertible");
    return *inv + inv->transpose();
}

inline Rat bilinear_form_A(const DimVector& dm, const DimVector& dn, const Matrix<Rat>& sym) {
    if (int(dm.size()) != sym.rows() || int(dn.size()) != sym.rows())
        throw std::invalid_argument("bilinear_form_A: length mismatch");
    Rat s(0);
    for (int i = 0; i < sym.rows(); ++i) {
        if (dm[size_t(i)] == 0) continue;
        for (int j = 0; j < sym.cols(); ++j) s += Rat(dm[size_t(i)]) * sym(i, j) * Rat(dn[size_t(j)]);
    }
    return s;
}

inline Rat bilinear_form_A(const DimVector& dm, const DimVector& dn) {
    return bilinear_form_A(dm, dn, symmetrized_cartan_inverse(int(dm.size())));
}

// ---------------------------------------------------------------------------
// Iso-type recognition (Auslander criterion): a module over an Artin algebra
// is determined up to isomorphism by the dimensions of Hom from all
// indecomposables.

template <typename F>
class IndecContext {
public:
    explicit IndecContext(int rank) : n_(rank), types_(all_indecomposables(rank)) {
        for (size_t k = 0; k < types_.size(); ++k) {
            index_[types_[k]] = int(k);
            reps_.push_back(build_indec<F>(types_[k], n_));
        }
        fp_.assign(types_.size(), std::vector<int>(types_.size(), 0));
        for (size_t l = 0; l < types_.size(); ++l)
            for (size_t t = 0; t < types_.size(); ++t) fp_[l][t] = hom_dim(reps_[l], reps_[t]);
    }

    int rank() const { return n_; }
    const std::vector<IndecType>& types() const { return types_; }
    const Rep<F>& rep(const IndecType& t) const { return reps_[size_t(type_index(t))]; }
    int type_index(const IndecType& t) const {
        auto it = index_.find(t);
        if (it == index_.end()) throw std::out_of_range("unknown indecomposable " + t.str());
        return it->second;
    }
    // dim Hom(types()[l], types()[t])
    int hom_table(int l, int t) const { return fp_[size_t(l)][size_t(t)]; }

    std::vector<int> fingerprint(const Rep<F>& M) const {
        std::vector<int> g(types_.size());
        for (size_t l = 0; l < types_.size(); ++l) g[l] = hom_dim(reps_[l], M);
        return g;
    }

    std::vector<int> fingerprint(const IndecMultiset& s) const {
        std::vector<int> g(types_.size(), 0);
        for (const auto& [t, m] : s) {
            int tc = type_index(t);
            for (size_t l = 0; l < types_.size(); ++l) g[l] += m * fp_[l][size_t(tc)];
        }
        return g;
    }

    // Fingerprint comparison with early abort; enough to decide M ~ target by
    // the Auslander criterion once dimension vectors agree.
    bool matches(const Rep<F>& M, const std::vector<int>& target_fp) const {
        for (size_t l = 0; l < types_.size(); ++l)
            if (hom_dim(reps_[l], M) != target_fp[l]) return false;
        return true;
    }

    // The unique multiset of indecomposables isomorphic to M, found by integer
    // search over multisets with the dimension vector of M.
    std::optional<IndecMultiset> iso_type(const Rep<F>& M) const {
        if (!M.satisfies_relation()) throw std::invalid_argument("iso_type: loop relation fails");
        std::vector<int> g = fingerprint(M);
        auto key = std::make_pair(M.dims, g);
        auto hit = memo_.find(key);
        if (hit != memo_.end()) return hit->second;
        IndecMultiset cur;
        std::optional<IndecMultiset> found;
        search(0, M.dims, g, cur, found);
        memo_.emplace(key, found);
        return found;
    }

private:
    void search(size_t from, DimVector rem_dim, std::vector<int> rem_fp, IndecMultiset& cur,
                std::optional<IndecMultiset>& found) const {
        if (found) return;  // first match wins; uniqueness is Auslander's theorem
        bool dims_done = true;
        for (int d : rem_dim)
            if (d != 0) { dims_done = false; break; }
        if (dims_done) {
            for (int x : rem_fp)
                if (x != 0) return;
            found = cur;
            return;
        }
        // multisets are enumerated with nondecreasing type index; remaining
        // dimension vector and fingerprint must stay componentwise nonnegative
        for (size_t t = from; t < types_.size(); ++t) {
            DimVector dt = dim_vector(types_[t], n_);
            bool ok = true;
            for (size_t v = 0; v < dt.size(); ++v)
                if (dt[v] > rem_dim[v]) { ok = false; break; }
            if (!ok) continue;
            for (size_t l = 0; ok && l < types_.size(); ++l)
                if (fp_[l][t] > rem_fp[l]) ok = false;
            if (!ok) continue;
            DimVector nd = rem_dim;
            for (size_t v = 0; v < dt.size(); ++v) nd[v] -= dt[v];
            std::vector<int> nf = rem_fp;
            for (size_t l = 0; l < types_.size(); ++l) nf[l] -= fp_[l][t];
            cur[types_[t]] += 1;
            search(t, std::move(nd), std::move(nf), cur, found);
            if (--cur[types_[t]] == 0) cur.erase(types_[t]);
            if (found) return;
        }
    }

    int n_;
    std::vector<IndecType> types_;
    std::map<IndecType, int> index_;
    std::vector<Rep<F>> reps_;
    std::vector<std::vector<int>> fp_;
    mutable std::map<std::pair<DimVector, std::vector<int>>, std::optional<IndecMultiset>> memo_;
};

}  // namespace gentle
