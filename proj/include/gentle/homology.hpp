// Projective covers, syzygies, minimal projective resolutions with
// periodicity detection, Ext dimensions in every degree, the Euler series
// <M,N>_t as an exact rational function, its value at t = 1, and the
// regeneration of the two closed-form tables.
//
// Orientation: <M,N>_t = sum_p dim Ext^p(M,N) (-t)^p with Ext computed from a
// projective resolution of M. In the two closed-form tables the ROW module
// (indices l,k) is the first argument and the COLUMN module (indices i,j) the
// second; this is forced by Hom(V_l, V_i) != 0 iff i <= l and by the matrix
// of <-,->_1 on simples being C_A^{-t}.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/indec.hpp"
#include "gentle/matrix.hpp"
#include "gentle/poly.hpp"
#include "gentle/quiver.hpp"
#include "gentle/report.hpp"

namespace gentle {

struct UndeterminedResolution : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Cover {
    Rep<Rat> proj;               // direct sum of P_i
    Morphism<Rat> epi;           // proj ->> M
    std::vector<int> mults;      // multiplicity of P_i (index i-1)
};

struct ProjResolution {
    enum class Status { Finite, Periodic, Undetermined };

    IndecType source;
    std::vector<std::vector<int>> term_mults;   // per degree
    std::vector<Rep<Rat>> terms;                // P^(p)
    std::vector<Morphism<Rat>> diffs;           // diffs[p] : P^(p+1) -> P^(p)
    Morphism<Rat> aug;                          // P^(0) -> M
    std::vector<IndecMultiset> syzygy_types;    // [p] = iso type of Omega^p M
    Status status = Status::Undetermined;
    int length = -1;                            // Finite: projective dimension
    int p0 = -1, ell = -1;                      // Periodic: onset and period
};

class Homology {
public:
    explicit Homology(int n, int max_depth = -1)
        : n_(n), max_depth_(max_depth > 0 ? max_depth : 2 * n + 4), ctx_(n) {}

    int rank() const { return n_; }
    int max_depth() const { return max_depth_; }
    const IndecContext<Rat>& ctx() const { return ctx_; }

    // P = sum_v P_v^{m_v} with m_v = dim top(M)_v; the kernel of the epi
    // contains no projective summand onto the top.
    Cover projective_cover(const Rep<Rat>& M) const {
        Cover c;
        c.mults.assign(size_t(n_), 0);
        std::vector<Rep<Rat>> parts;
        std::vector<std::pair<int, std::vector<Rat>>> lifts;  // (vertex, lifted top vector)
        for (int v = 0; v < n_; ++v) {
            RowSpan<Rat> rad(M.dims[size_t(v)]);
            auto feed = [&](const Matrix<Rat>& m) {
                for (int j = 0; j < m.cols(); ++j) rad.insert(m.col(j));
            };
            if (v > 0) feed(M.maps[size_t(v) - 1]);
            if (v == n_ - 1) feed(M.loop());
            for (int k = 0; k < M.dims[size_t(v)]; ++k) {
                std::vector<Rat> e(size_t(M.dims[size_t(v)]), Rat(0));
                e[size_t(k)] = 1;
                if (rad.insert(e)) {
                    ++c.mults[size_t(v)];
                    lifts.push_back({v, std::move(e)});
                }
            }
        }
        for (const auto& [v, x] : lifts) parts.push_back(ctx_.rep(IndecType::projective(v + 1, n_)));
        c.proj = direct_sum(parts, n_);
        c.epi = Morphism<Rat>::zero(c.proj, M);
        std::vector<int> off(size_t(n_), 0);
        for (const auto& [v, x] : lifts) {
            const Rep<Rat>& P = ctx_.rep(IndecType::projective(v + 1, n_));
            Morphism<Rat> f = generator_morphism(P, v, M, x);
            for (int w = 0; w < n_; ++w)
                for (int r = 0; r < M.dims[size_t(w)]; ++r)
                    for (int cc = 0; cc < P.dims[size_t(w)]; ++cc)
                        c.epi.at[size_t(w)](r, off[size_t(w)] + cc) = f.at[size_t(w)](r, cc);
            for (int w = 0; w < n_; ++w) off[size_t(w)] += P.dims[size_t(w)];
        }
        // surjectivity per vertex
        for (int w = 0; w < n_; ++w)
            if (c.epi.at[size_t(w)].rank() != M.dims[size_t(w)])
                throw std::logic_error("projective_cover: epi not surjective");
        return c;
    }

    const ProjResolution& resolution(const IndecType& M) {
        auto it = res_cache_.find(M);
        if (it != res_cache_.end()) return it->second;
        ProjResolution r = build_resolution(M);
        return res_cache_.emplace(M, std::move(r)).first->second;
    }

    // dim Ext^p(M, N), exact.
    int ext_dim(const IndecType& M, const IndecType& N, int p) {
        if (p < 0) throw std::invalid_argument("ext_dim: negative degree");
        const ProjResolution& res = resolution(M);
        const std::vector<int>& e = ext_dims(M, N);
        if (p < int(e.size())) return e[size_t(p)];
        if (res.status == ProjResolution::Status::Finite) return 0;
        if (res.status == ProjResolution::Status::Periodic) {
            int fold = res.p0 + 1 + (p - res.p0 - 1) % res.ell;
            return e[size_t(fold)];
        }
        throw UndeterminedResolution("resolution of " + M.str() + " undetermined at depth " +
                                     std::to_string(p));
    }

    EulerSeries euler_series(const IndecType& M, const IndecType& N) {
        auto key = std::make_pair(M, N);
        auto it = series_cache_.find(key);
        if (it != series_cache_.end()) return it->second;
        const ProjResolution& res = resolution(M);
        const std::vector<int>& e = ext_dims(M, N);
        EulerSeries s;
        if (res.status == ProjResolution::Status::Finite) {
            Poly p;
            for (size_t k = 0; k < e.size(); ++k)
                p = p + Poly::neg_t_pow(int(k)) * Poly::constant(e[k]);
            s = EulerSeries::polynomial(p);
        } else if (res.status == ProjResolution::Status::Periodic) {
            int p0 = res.p0, ell = res.ell;
            if (size_t(p0 + ell) >= e.size())
                throw UndeterminedResolution("max_depth too small for the detected period of " + M.str());
            // the tail (Ext^p for p >= p0+1) is periodic with period ell;
            // cross-check on everything computed
            for (size_t p = size_t(p0) + 1; p + size_t(ell) < e.size(); ++p)
                if (e[p + size_t(ell)] != e[p])
                    throw std::logic_error("periodic tail mismatch for Ext(" + M.str() + "," + N.str() + ")");
            Poly head;
            for (int p = 0; p <= p0; ++p) head = head + Poly::neg_t_pow(p) * Poly::constant(e[size_t(p)]);
            Poly tail_num;
            for (int r = 1; r <= ell; ++r)
                tail_num = tail_num + Poly::neg_t_pow(p0 + r) * Poly::constant(e[size_t(p0 + r)]);
            Poly den = Poly{1} - Poly::neg_t_pow(ell);  // 1 - (-t)^ell
            s = EulerSeries::polynomial(head) + EulerSeries(tail_num, den);
        } else {
            throw UndeterminedResolution("resolution of " + M.str() + " undetermined");
        }
        series_cache_.emplace(key, s);
        return s;
    }

    Rat euler_at_one(const IndecType& M, const IndecType& N) {
        EulerSeries s = euler_series(M, N);
        if (s.has_pole_at(Rat(1)))
            throw std::domain_error("euler_at_one: pole at t = 1 for <" + M.str() + "," + N.str() + ">");
        return s.eval(Rat(1));
    }

    struct Additivity {
        Rat lhs, rhs;
        bool ok;
    };

    // <M,N>_1 against the bilinear extension through dimension vectors.
    Additivity additivity_check(const IndecType& M, const IndecType& N) {
        Rat lhs = euler_at_one(M, N);
        DimVector dm = dim_vector(M, n_), dn = dim_vector(N, n_);
        Rat rhs(0);
        for (int i = 1; i <= n_; ++i) {
            if (dm[size_t(i) - 1] == 0) continue;
            for (int j = 1; j <= n_; ++j) {
                if (dn[size_t(j) - 1] == 0) continue;
                rhs += Rat(dm[size_t(i) - 1]) * Rat(dn[size_t(j) - 1]) *
                       euler_at_one(IndecType::simple(i, n_), IndecType::simple(j, n_));
            }
        }
        return {lhs, rhs, lhs == rhs};
    }

    // image of every differential lies in the radical of its target
    bool differentials_in_radical(const IndecType& M) {
        const ProjResolution& res = resolution(M);
        for (size_t p = 0; p < res.diffs.size(); ++p) {
            const Rep<Rat>& P = res.terms[p];
            for (int v = 0; v < n_; ++v) {
                RowSpan<Rat> rad(P.dims[size_t(v)]);
                if (v > 0)
                    for (int j = 0; j < P.maps[size_t(v) - 1].cols(); ++j)
                        rad.insert(P.maps[size_t(v) - 1].col(j));
                if (v == n_ - 1)
                    for (int j = 0; j < P.loop().cols(); ++j) rad.insert(P.loop().col(j));
                const Matrix<Rat>& d = res.diffs[p].at[size_t(v)];
                for (int j = 0; j < d.cols(); ++j)
                    if (!rad.contains(d.col(j))) return false;
            }
        }
        return true;
    }

private:
    // The unique morphism P_i -> M sending the projective generator to x.
    Morphism<Rat> generator_morphism(const Rep<Rat>& P, int vertex0, const Rep<Rat>& M,
                                     const std::vector<Rat>& x) const {
        std::vector<Morphism<Rat>> basis = hom_basis(P, M);
        if (int(basis.size()) != M.dims[size_t(vertex0)])
            throw std::logic_error("Hom(P_i, M) dimension differs from dim M_i");
        if (basis.empty()) return Morphism<Rat>::zero(P, M);
        Matrix<Rat> evals(M.dims[size_t(vertex0)], int(basis.size()));
        for (size_t b = 0; b < basis.size(); ++b)
            evals.set_col(int(b), basis[b].at[size_t(vertex0)].col(0));  // generator = first coordinate
        auto coeff = evals.solve(x);
        if (!coeff) throw std::logic_error("projective generator lift failed");
        Morphism<Rat> f = Morphism<Rat>::zero(P, M);
        for (size_t b = 0; b < basis.size(); ++b) {
            if ((*coeff)[b] == 0) continue;
            for (int v = 0; v < n_; ++v) f.at[size_t(v)] = f.at[size_t(v)] + basis[b].at[size_t(v)] * (*coeff)[b];
        }
        return f;
    }

    ProjResolution build_resolution(const IndecType& M) {
        ProjResolution res;
        res.source = M;
        Rep<Rat> cur = ctx_.rep(M);
        res.syzygy_types.push_back(IndecMultiset{{M, 1}});
        Morphism<Rat> prev_incl;
        for (int p = 0; p <= max_depth_; ++p) {
            Cover c = projective_cover(cur);
            res.terms.push_back(c.proj);
            res.term_mults.push_back(c.mults);
            if (p == 0) res.aug = c.epi;
            else res.diffs.push_back(prev_incl * c.epi);
            auto kbases = kernel_subspaces(c.proj, c.epi);
            SubRep<Rat> ker = subrep(c.proj, kbases);
            if (ker.rep.is_zero()) {
                res.status = ProjResolution::Status::Finite;
                res.length = p;
                return res;
            }
            auto ktype = ctx_.iso_type(ker.rep);
            if (!ktype) throw std::logic_error("syzygy not recognized as a module");
            res.syzygy_types.push_back(*ktype);
            cur = ker.rep;
            prev_incl = ker.incl;
        }
        // periodicity: smallest onset then smallest period, confirmed twice
        int avail = int(res.syzygy_types.size()) - 1;  // highest computed syzygy degree
        for (int p0 = 0; p0 <= avail && res.status != ProjResolution::Status::Periodic; ++p0)
            for (int ell = 1; p0 + ell + 1 <= avail; ++ell)
                if (res.syzygy_types[size_t(p0)] == res.syzygy_types[size_t(p0 + ell)] &&
                    res.syzygy_types[size_t(p0) + 1] == res.syzygy_types[size_t(p0 + ell) + 1]) {
                    res.status = ProjResolution::Status::Periodic;
                    res.p0 = p0;
                    res.ell = ell;
                    break;
                }
        return res;
    }

    // Basis of Hom(P^(p), N) assembled from the cached Hom(P_i, N) bases.
    struct HomBasisEntry {
        std::vector<std::vector<Morphism<Rat>>> per_proj;  // index i-1
    };
    const HomBasisEntry& hom_bases_for(const IndecType& N) {
        auto it = homN_cache_.find(N);
        if (it != homN_cache_.end()) return it->second;
        HomBasisEntry e;
        for (int i = 1; i <= n_; ++i)
            e.per_proj.push_back(hom_basis(ctx_.rep(IndecType::projective(i, n_)), ctx_.rep(N)));
        return homN_cache_.emplace(N, std::move(e)).first->second;
    }

    const std::vector<int>& ext_dims(const IndecType& M, const IndecType& N) {
        auto key = std::make_pair(M, N);
        auto it = ext_cache_.find(key);
        if (it != ext_cache_.end()) return it->second;

        const ProjResolution& res = resolution(M);
        const Rep<Rat>& Nrep = ctx_.rep(N);
        const HomBasisEntry& hb = hom_bases_for(N);

        // basis of Hom(P^(p), N) by embedding per-summand morphisms
        auto hom_basis_at = [&](size_t p) {
            std::vector<Morphism<Rat>> out;
            const Rep<Rat>& P = res.terms[p];
            std::vector<int> off(size_t(n_), 0);
            for (int v = 0; v < n_; ++v)
                for (int copy = 0; copy < res.term_mults[p][size_t(v)]; ++copy) {
                    const Rep<Rat>& Pi = ctx_.rep(IndecType::projective(v + 1, n_));
                    for (const Morphism<Rat>& f : hb.per_proj[size_t(v)]) {
                        Morphism<Rat> g = Morphism<Rat>::zero(P, Nrep);
                        for (int w = 0; w < n_; ++w)
                            for (int r = 0; r < Nrep.dims[size_t(w)]; ++r)
                                for (int c = 0; c < Pi.dims[size_t(w)]; ++c)
                                    g.at[size_t(w)](r, off[size_t(w)] + c) = f.at[size_t(w)](r, c);
                        out.push_back(std::move(g));
                    }
                    for (int w = 0; w < n_; ++w) off[size_t(w)] += Pi.dims[size_t(w)];
                }
            return out;
        };
        auto flatten_mor = [&](const Morphism<Rat>& f) {
            std::vector<Rat> v;
            for (const auto& m : f.at)
                for (int r = 0; r < m.rows(); ++r)
                    for (int c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
            return v;
        };

        size_t degs = res.terms.size();
        std::vector<int> cdim(degs, 0), rk(degs, 0);
        std::vector<std::vector<Morphism<Rat>>> bases(degs);
        for (size_t p = 0; p < degs; ++p) {
            bases[p] = hom_basis_at(p);
            cdim[p] = int(bases[p].size());
        }
        for (size_t p = 0; p + 1 < degs; ++p) {
            // T_p : Hom(P^(p), N) -> Hom(P^(p+1), N), f -> f . d_{p+1}
            if (cdim[p] == 0) { rk[p] = 0; continue; }
            RowSpan<Rat> image(int(flatten_mor(Morphism<Rat>::zero(res.terms[p + 1], Nrep)).size()));
            for (const auto& f : bases[p]) image.insert(flatten_mor(f * res.diffs[p]));
            rk[p] = image.rank();
        }
        std::vector<int> e;
        size_t emax = (res.status == ProjResolution::Status::Finite) ? degs : degs - 1;
        for (size_t p = 0; p < emax; ++p) {
            int rp = (p + 1 < degs) ? rk[p] : 0;
            int rprev = (p > 0) ? rk[p - 1] : 0;
            e.push_back(cdim[p] - rp - rprev);
        }
        return ext_cache_.emplace(key, std::move(e)).first->second;
    }

    int n_;
    int max_depth_;
    IndecContext<Rat> ctx_;
    std::map<IndecType, ProjResolution> res_cache_;
    std::map<IndecType, HomBasisEntry> homN_cache_;
    std::map<std::pair<IndecType, IndecType>, std::vector<int>> ext_cache_;
    std::map<std::pair<IndecType, IndecType>, EulerSeries> series_cache_;
};

// ---------------------------------------------------------------------------
// The closed-form case law of the two tables. Rows carry indices (l,k) resp.
// l and are the FIRST argument of <-,->; columns carry (i,j) resp. i. The
// case conditions are shared between the two tables; the values are entered
// independently (table 1 as series in t, table 2 as rationals at t = 1).

namespace tablecase {

// case index within a block, or -1 when no listed condition matches
inline int uu_k_le_l(int l, int k, int i, int j) {
    int mn = std::min(i, j), mx = std::max(i, j);
    if (l < mn) return 0;
    if (k < j && j <= l && l < i) return 1;
    if (k < i && i <= l && l < j) return 2;
    if (k < i && i <= j && j <= l) return 3;
    if (k < j && j < i && i <= l) return 4;
    if (j <= k && k <= l && l < i) return 5;
    if (j <= k && k < i && i <= l) return 6;
    if (i <= k && k <= l && l < j) return 7;
    if (i <= k && k < j && j <= l) return 8;
    if (mx <= k) return 9;
    return -1;
}
inline int uv_k_le_l(int l, int k, int i) {
    if (l < i) return 0;
    if (k < i && i <= l) return 1;
    if (i <= k) return 2;
    return -1;
}
inline int uw_k_le_l(int l, int k, int i, int j) {
    if (k < i && i <= l && l <= j) return 0;
    if (i <= k && k <= l && l <= j) return 1;
    if (i <= k && k <= j && j < l) return 2;
    return 3;
}
inline int uu_l_lt_k(int l, int k, int i, int j) {
    int mn = std::min(i, j), mx = std::max(i, j);
    if (k < mn) return 0;
    if (l < j && j <= k && k < i) return 1;
    if (l < i && i <= k && k < j) return 2;
    if (l < i && i <= j && j <= k) return 3;
    if (l < j && j < i && i <= k) return 4;
    if (j <= l && l < k && k < i) return 5;
    if (j <= l && l < i && i <= k) return 6;
    if (i <= l && l < k && k < j) return 7;
    if (i <= l && l < j && j <= k) return 8;
    if (mx <= l) return 9;
    return -1;
}
inline int uv_l_lt_k(int l, int k, int i) {
    if (k < i) return 0;
    if (l < i && i <= k) return 1;
    if (i <= l) return 2;
    return -1;
}
inline int uw_l_lt_k(int l, int k, int i, int j) {
    if (l < i && i <= k && k <= j) return 0;
    if (i <= l && l < k && k <= j) return 1;
    if (i <= l && l <= j && j < k) return 2;
    return 3;
}
inline int uu_l_eq_n(int k, int i, int j) {
    int mn = std::min(i, j), mx = std::max(i, j);
    if (k < mn) return 0;
    if (j <= k && k < i) return 1;
    if (i <= k && k < j) return 2;
    if (mx <= k) return 3;
    return -1;
}
inline int uv_l_eq_n(int k, int i) { return k < i ? 0 : 1; }
inline int uw_l_eq_n(int k, int i, int j) { return (i <= k && k <= j) ? 0 : 1; }
inline int vu(int l, int i, int j) {
    int mn = std::min(i, j), mx = std::max(i, j);
    if (l < mn) return 0;
    if (j <= l && l < i) return 1;
    if (i <= l && l < j) return 2;
    if (mx <= l) return 3;
    return -1;
}
inline int vv(int l, int i) { return i <= l ? 0 : 1; }
inline int vw(int l, int i, int j) { return (i <= l && l <= j) ? 0 : 1; }
inline int wu(int l, int k, int i, int j) {
    int mn = std::min(i, j), mx = std::max(i, j);
    if (l < k + 1 && k + 1 < mn) return 0;
    if (l < j && j <= k + 1 && k + 1 < i) return 1;
    if (l < i && i <= k + 1 && k + 1 < j) return 2;
    if (l < i && i <= j && j <= k + 1) return 3;
    if (l < j && j < i && i <= k + 1) return 4;
    if (j <= l && l < k + 1 && k + 1 < i) return 5;
    if (j <= l && l < i && i <= k + 1) return 6;
    if (i <= l && l < k + 1 && k + 1 < j) return 7;
    if (i <= l && l < j && j <= k + 1) return 8;
    if (mx <= l) return 9;
    return -1;
}
inline int wv(int l, int k, int i) {
    if (l < k + 1 && k + 1 < i) return 0;
    if (l < i && i <= k + 1) return 1;
    if (i <= l && l < k + 1) return 2;
    return -1;
}
inline int ww(int l, int k, int i, int j) {
    if (i <= l && l <= j && j < k + 1) return 0;
    if (l < i && i <= k + 1 && k + 1 <= j) return 1;
    if (i <= l && l < k + 1 && k + 1 <= j) return 2;
    return 3;
}

}  // namespace tablecase

// Closed-form table-1 entry for <row, col>_t; nullopt when no case applies.
inline std::optional<EulerSeries> table1_case(const IndecType& row, const IndecType& col, int n) {
    using namespace tablecase;
    auto P = [](long c0, long c1 = 0) {  // c0 + c1 t
        Poly p;
        p.c = {Int(c0), Int(c1)};
        p.trim();
        return EulerSeries::polynomial(p);
    };
    auto geom = [](int from) {  // sum_{p>=from} (-t)^p
        return EulerSeries(Poly::neg_t_pow(from), Poly{1, 1});
    };
    auto pick = [](int c, std::vector<std::optional<EulerSeries>> vals) -> std::optional<EulerSeries> {
        if (c < 0 || c >= int(vals.size())) return std::nullopt;
        return vals[size_t(c)];
    };

    if (row.fam == Family::U) {
        int l = row.i, k = row.j;
        if (k <= l && l < n) {
            if (col.fam == Family::U)
                return pick(uu_k_le_l(l, k, col.i, col.j),
                            {P(0, -2), P(0, -1), P(0, -1), P(0), P(0), P(0), P(1), P(1, -1), P(1), P(2)});
            if (col.fam == Family::V) return pick(uv_k_le_l(l, k, col.i), {P(0, -1), P(0), P(1)});
            return pick(uw_k_le_l(l, k, col.i, col.j), {P(1), P(2), P(1), P(0)});
        }
        if (l < k) {
            if (col.fam == Family::U)
                return pick(uu_l_lt_k(l, k, col.i, col.j), {P(0, -2), P(0, -1), P(1, -2), P(1, -1), P(1, -1),
                                                            P(0), P(1), P(1, -1), P(2, -1), P(2)});
            if (col.fam == Family::V) return pick(uv_l_lt_k(l, k, col.i), {P(0, -1), P(1, -1), P(1)});
            return pick(uw_l_lt_k(l, k, col.i, col.j), {P(1), P(2), P(1), P(0)});
        }
        // l == n, k <= n
        if (col.fam == Family::U) return pick(uu_l_eq_n(k, col.i, col.j), {P(0), P(1), P(1), P(2)});
        if (col.fam == Family::V) return pick(uv_l_eq_n(k, col.i), {P(0), P(1)});
        return pick(uw_l_eq_n(k, col.i, col.j), {P(1), P(0)});
    }
    if (row.fam == Family::V) {
        int l = row.i;
        if (col.fam == Family::U) return pick(vu(l, col.i, col.j), {P(0, -1), P(0), P(1, -1), P(1)});
        if (col.fam == Family::V) return pick(vv(l, col.i), {geom(0), geom(1)});
        return pick(vw(l, col.i, col.j), {P(1), P(0)});
    }
    int l = row.i, k = row.j;
    if (col.fam == Family::U)
        return pick(wu(l, k, col.i, col.j), {P(0), P(0, -1), P(0, -1), P(0, -2), P(0, -2), P(0), P(0, -1),
                                             P(0), P(0, -1), P(0)});
    if (col.fam == Family::V) return pick(wv(l, k, col.i), {P(0), P(0, -1), P(0)});
    return pick(ww(l, k, col.i, col.j), {P(1), P(0, -1), P(0), P(0)});
}

// Closed-form table-2 entry for <row, col>_1.
inline std::optional<Rat> table2_case(const IndecType& row, const IndecType& col, int n) {
    using namespace tablecase;
    auto pick = [](int c, std::vector<Rat> vals) -> std::optional<Rat> {
        if (c < 0 || c >= int(vals.size())) return std::nullopt;
        return vals[size_t(c)];
    };
    if (row.fam == Family::U) {
        int l = row.i, k = row.j;
        if (k <= l && l < n) {
            if (col.fam == Family::U)
                return pick(uu_k_le_l(l, k, col.i, col.j), {-2, -1, -1, 0, 0, 0, 1, 0, 1, 2});
            if (col.fam == Family::V) return pick(uv_k_le_l(l, k, col.i), {-1, 0, 1});
            return pick(uw_k_le_l(l, k, col.i, col.j), {1, 2, 1, 0});
        }
        if (l < k) {
            if (col.fam == Family::U)
                return pick(uu_l_lt_k(l, k, col.i, col.j), {-2, -1, -1, 0, 0, 0, 1, 0, 1, 2});
            if (col.fam == Family::V) return pick(uv_l_lt_k(l, k, col.i), {-1, 0, 1});
            return pick(uw_l_lt_k(l, k, col.i, col.j), {1, 2, 1, 0});
        }
        if (col.fam == Family::U) return pick(uu_l_eq_n(k, col.i, col.j), {0, 1, 1, 2});
        if (col.fam == Family::V) return pick(uv_l_eq_n(k, col.i), {0, 1});
        return pick(uw_l_eq_n(k, col.i, col.j), {1, 0});
    }
    if (row.fam == Family::V) {
        int l = row.i;
        if (col.fam == Family::U) return pick(vu(l, col.i, col.j), {-1, 0, 0, 1});
        if (col.fam == Family::V) return pick(vv(l, col.i), {Rat(1, 2), Rat(-1, 2)});
        return pick(vw(l, col.i, col.j), {1, 0});
    }
    int l = row.i, k = row.j;
    if (col.fam == Family::U)
        return pick(wu(l, k, col.i, col.j), {0, -1, -1, -2, -2, 0, -1, 0, -1, 0});
    if (col.fam == Family::V) return pick(wv(l, k, col.i), {0, -1, 0});
    return pick(ww(l, k, col.i, col.j), {1, -1, 0, 0});
}

// ---------------------------------------------------------------------------
// Full table generation with case-law classification; mismatches are findings,
// never auto-resolved.

struct TableEntry {
    IndecType row, col;
    EulerSeries series;              // computed <row,col>_t
    Rat at_one;                      // computed <row,col>_1
    std::optional<EulerSeries> case_series;
    std::optional<Rat> case_at_one;
    bool match_series = false;
    bool match_at_one = false;
};

struct TableResult {
    int n = 0;
    std::vector<TableEntry> entries;
    CheckReport findings;  // one entry per mismatch or unmatched case
};

inline TableResult generate_tables(Homology& hom) {
    TableResult out;
    int n = hom.rank();
    out.n = n;
    std::vector<IndecType> types = all_indecomposables(n);
    for (const IndecType& row : types)
        for (const IndecType& col : types) {
            TableEntry e;
            e.row = row;
            e.col = col;
            try {
                e.series = hom.euler_series(row, col);
            } catch (const UndeterminedResolution& ex) {
                out.findings.add("table.undetermined", "<" + row.str() + "," + col.str() + ">_t", "-",
                                 ex.what(), CheckStatus::Undetermined);
                continue;
            }
            e.at_one = hom.euler_at_one(row, col);
            e.case_series = table1_case(row, col, n);
            e.case_at_one = table2_case(row, col, n);
            e.match_series = e.case_series && *e.case_series == e.series;
            e.match_at_one = e.case_at_one && *e.case_at_one == e.at_one;
            if (!e.match_series) {
                std::ostringstream ext;
                for (int p = 0; p <= 6; ++p) ext << (p ? "," : "") << hom.ext_dim(row, col, p);
                out.findings.add("table1", "<" + row.str() + "," + col.str() + ">_t",
                                 e.case_series ? e.case_series->str() : "(no case matches)",
                                 e.series.str() + " [ext dims p=0..6: " + ext.str() + "]", CheckStatus::Fail);
            }
            if (!e.match_at_one)
                out.findings.add("table2", "<" + row.str() + "," + col.str() + ">_1",
                                 e.case_at_one ? to_string(*e.case_at_one) : "(no case matches)",
                                 to_string(e.at_one), CheckStatus::Fail);
            out.entries.push_back(std::move(e));
        }
    return out;
}

}  // namespace gentle
