// The brute-force Hall oracle: V(X,Y;Z) = {submodules Z_1 of Z with Z_1 ~ Y
// and Z/Z_1 ~ X} is enumerated pointwise over small prime fields, the Euler
// characteristic is recovered from the counting polynomial at q = 1, and the
// commutator [X,Y] = sum_Z (chi(X,Y;Z) - chi(Y,X;Z)) Z is assembled over
// indecomposable Z with matching dimension vector.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gentle/fields.hpp"
#include "gentle/indec.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

struct BudgetExceeded : std::runtime_error {
    long required;
    long budget;
    BudgetExceeded(long req, long bud, const std::string& what)
        : std::runtime_error("enumeration budget exceeded (" + std::to_string(req) + " > " +
                             std::to_string(bud) + ") for " + what),
          required(req),
          budget(bud) {}
};

struct NonPolynomialCount : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of e-dimensional subspaces of F_q^d (Gaussian binomial).
inline long grassmannian_size(int d, int e, int q) {
    if (e < 0 || e > d) return 0;
    // [d e]_q = prod_{k=0}^{e-1} (q^{d-k} - 1) / (q^{k+1} - 1)
    long numer = 1, denom = 1;
    auto qpow = [&](int k) {
        long r = 1;
        for (int t = 0; t < k; ++t) r *= q;
        return r;
    };
    for (int k = 0; k < e; ++k) {
        numer *= qpow(d - k) - 1;
        denom *= qpow(k + 1) - 1;
    }
    return numer / denom;
}

// All e-dimensional subspaces of F^d as reduced-echelon row spans.
template <typename F>
std::vector<RowSpan<F>> all_subspaces(int d, int e) {
    std::vector<RowSpan<F>> out;
    if (e == 0) {
        out.emplace_back(d);
        return out;
    }
    if (e > d) return out;
    // choose pivot columns, then odometer over the free entries
    std::vector<int> piv(static_cast<size_t>(e));
    for (int k = 0; k < e; ++k) piv[size_t(k)] = k;
    auto emit = [&]() {
        std::vector<std::pair<int, int>> free_pos;  // (row, col)
        std::vector<bool> is_piv(size_t(d), false);
        for (int p : piv) is_piv[size_t(p)] = true;
        for (int r = 0; r < e; ++r)
            for (int c = piv[size_t(r)] + 1; c < d; ++c)
                if (!is_piv[size_t(c)]) free_pos.push_back({r, c});
        std::vector<int> val(free_pos.size(), 0);
        const int P = F::modulus;
        while (true) {
            Matrix<F> rows(e, d);
            for (int r = 0; r < e; ++r) rows(r, piv[size_t(r)]) = FieldTraits<F>::one();
            for (size_t k = 0; k < free_pos.size(); ++k)
                rows(free_pos[k].first, free_pos[k].second) = FieldTraits<F>::from_int(val[k]);
            RowSpan<F> sp(d);
            for (int r = 0; r < e; ++r) sp.insert(rows.row(r));
            out.push_back(std::move(sp));
            size_t k = 0;
            while (k < val.size() && ++val[k] == P) val[k++] = 0;
            if (k == val.size()) break;
        }
    };
    while (true) {
        emit();
        // next pivot combination
        int k = e - 1;
        while (k >= 0 && piv[size_t(k)] == d - e + k) --k;
        if (k < 0) break;
        ++piv[size_t(k)];
        for (int t = k + 1; t < e; ++t) piv[size_t(t)] = piv[size_t(t) - 1] + 1;
    }
    return out;
}

class HallOracle {
public:
    explicit HallOracle(int n, std::vector<int> primes = {2, 3, 5}, long budget = 200000)
        : n_(n), primes_(std::move(primes)), budget_(budget) {
        if (primes_.size() < 2) throw std::invalid_argument("HallOracle needs at least two primes");
        for (size_t a = 0; a < primes_.size(); ++a)
            for (size_t b = a + 1; b < primes_.size(); ++b)
                if (primes_[a] == primes_[b]) throw std::invalid_argument("oracle primes must be distinct");
    }

    int rank() const { return n_; }
    const std::vector<int>& primes() const { return primes_; }
    long budget() const { return budget_; }

    // Exact number of F_p-subrepresentations Z_1 of Z with Z_1 ~ Y and
    // Z/Z_1 ~ X. Zero immediately on dimension-vector mismatch.
    long submodule_variety_count(const IndecMultiset& X, const IndecMultiset& Y, const IndecMultiset& Z,
                                 int p) {
        switch (p) {
            case 2: return count_impl(ctx2(), X, Y, Z, 2);
            case 3: return count_impl(ctx3(), X, Y, Z, 3);
            case 5: return count_impl(ctx5(), X, Y, Z, 5);
            case 7: return count_impl(ctx7(), X, Y, Z, 7);
            default: throw std::invalid_argument("unsupported oracle prime " + std::to_string(p));
        }
    }

    // Point counts over the first two primes; if they disagree, fit the linear
    // counting polynomial and confirm at the third prime. The value at q = 1
    // is the Euler characteristic. A failed confirmation (degree >= 2 would be
    // required) is surfaced, never guessed.
    long euler_characteristic(const IndecMultiset& X, const IndecMultiset& Y, const IndecMultiset& Z) {
        long c0 = submodule_variety_count(X, Y, Z, primes_[0]);
        long c1 = submodule_variety_count(X, Y, Z, primes_[1]);
        if (c0 == c1) return c0;
        if (primes_.size() < 3)
            throw NonPolynomialCount("counts disagree and no tiebreaker prime is configured");
        long p0 = primes_[0], p1 = primes_[1], p2 = primes_[2];
        // a q + b through (p0,c0), (p1,c1)
        if ((c1 - c0) % (p1 - p0) != 0)
            throw NonPolynomialCount("linear fit is not integral for " + triple_str(X, Y, Z));
        long a = (c1 - c0) / (p1 - p0);
        long b = c0 - a * p0;
        long c2 = submodule_variety_count(X, Y, Z, int(p2));
        if (a * p2 + b != c2)
            throw NonPolynomialCount("point counts require a degree >= 2 polynomial for " +
                                     triple_str(X, Y, Z));
        return a + b;
    }

    // [X,Y] in the Hall commutator sense, supported on indecomposable Z.
    std::map<IndecType, long> hall_bracket(const IndecType& X, const IndecType& Y) {
        std::map<IndecType, long> out;
        DimVector target = dim_vector(X, n_);
        DimVector dy = dim_vector(Y, n_);
        for (size_t k = 0; k < target.size(); ++k) target[k] += dy[k];
        IndecMultiset mx{{X, 1}}, my{{Y, 1}};
        for (const IndecType& Z : all_indecomposables(n_)) {
            if (dim_vector(Z, n_) != target) continue;
            IndecMultiset mz{{Z, 1}};
            long c = euler_characteristic(mx, my, mz) - euler_characteristic(my, mx, mz);
            if (c != 0) out[Z] = c;
        }
        return out;
    }

    // Per-prime counts for one triple, for logging.
    std::vector<std::pair<int, long>> point_counts(const IndecMultiset& X, const IndecMultiset& Y,
                                                   const IndecMultiset& Z) {
        std::vector<std::pair<int, long>> out;
        for (int p : primes_) out.push_back({p, submodule_variety_count(X, Y, Z, p)});
        return out;
    }

private:
    static std::string triple_str(const IndecMultiset& X, const IndecMultiset& Y, const IndecMultiset& Z) {
        return "V(" + multiset_str(X) + ", " + multiset_str(Y) + "; " + multiset_str(Z) + ")";
    }

    template <typename F>
    long count_impl(const IndecContext<F>& ctx, const IndecMultiset& X, const IndecMultiset& Y,
                    const IndecMultiset& Z, int p) {
        DimVector dz = dim_vector(Z, n_), dx = dim_vector(X, n_), dy = dim_vector(Y, n_);
        for (size_t k = 0; k < dz.size(); ++k)
            if (dx[k] + dy[k] != dz[k]) return 0;

        long tuples = 1;
        for (size_t v = 0; v < dz.size(); ++v) {
            tuples *= grassmannian_size(dz[v], dy[v], p);
            if (tuples > budget_) throw BudgetExceeded(tuples, budget_, triple_str(X, Y, Z) + " over F_" + std::to_string(p));
        }

        Rep<F> zrep = build_module<F>(Z, n_);
        std::vector<std::vector<RowSpan<F>>> candidates;
        for (size_t v = 0; v < dz.size(); ++v) candidates.push_back(all_subspaces<F>(dz[v], dy[v]));

        std::vector<int> fpY = ctx.fingerprint(Y), fpX = ctx.fingerprint(X);
        long count = 0;
        std::vector<const RowSpan<F>*> chosen(dz.size(), nullptr);
        enumerate(zrep, candidates, chosen, 0, [&](const std::vector<const RowSpan<F>*>& tuple) {
            std::vector<RowSpan<F>> bases;
            for (const auto* sp : tuple) bases.push_back(*sp);
            SubRep<F> sub = subrep(zrep, bases);
            if (!ctx.matches(sub.rep, fpY)) return;
            QuotRep<F> quot = quotient_rep(zrep, bases);
            if (!ctx.matches(quot.rep, fpX)) return;
            ++count;
        });
        return count;
    }

    // Recursive tuple enumeration with incremental arrow-invariance pruning:
    // when vertex v is chosen, the arrow from v-1 and (at the last vertex) the
    // loop can already be checked.
    template <typename F, typename Fn>
    void enumerate(const Rep<F>& zrep, const std::vector<std::vector<RowSpan<F>>>& candidates,
                   std::vector<const RowSpan<F>*>& chosen, size_t v, const Fn& fn) {
        if (v == candidates.size()) {
            fn(chosen);
            return;
        }
        for (const RowSpan<F>& sp : candidates[v]) {
            chosen[v] = &sp;
            bool ok = true;
            if (v > 0) {
                const Matrix<F>& m = zrep.maps[v - 1];  // arrow (v-1) -> v
                for (const auto& row : chosen[v - 1]->rows())
                    if (!sp.contains(m.apply(row))) { ok = false; break; }
            }
            if (ok && v + 1 == candidates.size()) {
                const Matrix<F>& loop = zrep.maps[v];
                for (const auto& row : sp.rows())
                    if (!sp.contains(loop.apply(row))) { ok = false; break; }
            }
            if (ok) enumerate(zrep, candidates, chosen, v + 1, fn);
        }
        chosen[v] = nullptr;
    }

    IndecContext<Fp<2>>& ctx2() { if (!c2_) c2_.emplace(n_); return *c2_; }
    IndecContext<Fp<3>>& ctx3() { if (!c3_) c3_.emplace(n_); return *c3_; }
    IndecContext<Fp<5>>& ctx5() { if (!c5_) c5_.emplace(n_); return *c5_; }
    IndecContext<Fp<7>>& ctx7() { if (!c7_) c7_.emplace(n_); return *c7_; }

    int n_;
    std::vector<int> primes_;
    long budget_;
    std::optional<IndecContext<Fp<2>>> c2_;
    std::optional<IndecContext<Fp<3>>> c3_;
    std::optional<IndecContext<Fp<5>>> c5_;
    std::optional<IndecContext<Fp<7>>> c7_;
};

}  // namespace gentle
