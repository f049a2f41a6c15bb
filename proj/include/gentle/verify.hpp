// The named verification suites behind `verify`: each one checks a family of
// statements at the chosen rank and returns a report with one entry per
// instance.
#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "gentle/borel.hpp"
#include "gentle/hall.hpp"
#include "gentle/homology.hpp"
#include "gentle/indec.hpp"
#include "gentle/quiver.hpp"
#include "gentle/report.hpp"
#include "gentle/riedtmann.hpp"
#include "gentle/rootsys.hpp"

namespace gentle {

struct VerifyOptions {
    int n = 3;
    int max_depth = -1;       // homology default: 2n+4
    long budget = 200000;     // subspace-tuple cap per enumeration
    std::vector<int> primes = {2, 3, 5};
    bool force_oracle = false;
};

inline CheckReport suite_jacobi(const VerifyOptions& opt) {
    CheckReport rep;
    LTilde lt = build_LTilde(opt.n);
    auto fail = lt.algebra.jacobi_check();
    rep.expect("jacobi.exhaustive",
               "all basis triples of LTilde(A) x Q, n=" + std::to_string(opt.n), !fail,
               fail ? "violated at (" + lt.algebra.label(fail->i) + ", " + lt.algebra.label(fail->j) + ", " +
                          lt.algebra.label(fail->k) + ")"
                    : "");
    return rep;
}

inline CheckReport suite_gabriel(const VerifyOptions& opt) {
    CheckReport rep;
    int n = opt.n;
    RootSystemBC rs = build_root_system(n);
    std::vector<IndecType> types = all_indecomposables(n);

    rep.expect_eq("gabriel.count", "number of indecomposables, n=" + std::to_string(n),
                  std::to_string(indecomposable_count(n)), std::to_string(types.size()));
    rep.expect_eq("gabriel.positive_roots", "|Phi^+_BC|", std::to_string(long(n) * n + n),
                  std::to_string(rs.phi_plus_BC.size()));
    rep.expect_eq("gabriel.positive_roots", "|Phi^+_B|", std::to_string(long(n) * n),
                  std::to_string(rs.phi_plus_B.size()));
    rep.expect_eq("gabriel.positive_roots", "|Phi^+_C|", std::to_string(long(n) * n),
                  std::to_string(rs.phi_plus_C.size()));

    // fibers of the dimension-vector map
    std::map<Root, std::vector<IndecType>> fibers;
    for (const IndecType& t : types) {
        Root r = gabriel_root(t, n);
        // gabriel_root must agree with the simple-coordinate image of dim
        std::vector<long> d;
        for (int x : dim_vector(t, n)) d.push_back(x);
        rep.expect_eq("gabriel.root_vs_dim", t.str(), root_from_simple_coords(d).str(), r.str());
        fibers[r].push_back(t);
    }
    bool surjective = true;
    for (const Root& r : rs.phi_plus_BC)
        if (!fibers.count(r)) surjective = false;
    rep.expect("gabriel.surjective", "dim vectors cover Phi^+", surjective);
    bool no_extra = true;
    for (const auto& [r, f] : fibers)
        if (!rs.phi_plus_BC.count(r)) no_extra = false;
    rep.expect("gabriel.image", "dim vectors stay inside Phi^+", no_extra);
    for (const auto& [r, f] : fibers) {
        int plus = 0, twos = 0;
        for (long c : r.coeffs) {
            if (c == 1) ++plus;
            if (c == 2) ++twos;
        }
        int expect = (plus == 2 && twos == 0) ? 2 : 1;  // eps_i + eps_j has the U(i,j), U(j,i) fiber
        rep.expect_eq("gabriel.fiber", r.str(), std::to_string(expect), std::to_string(f.size()));
    }

    // bilinear form compatibility (M,N)_A = (dim M, dim N)
    Matrix<Rat> sym = symmetrized_cartan_inverse(n);
    bool compat = true;
    std::string witness;
    for (const IndecType& a : types)
        for (const IndecType& b : types) {
            Rat lhs = bilinear_form_A(dim_vector(a, n), dim_vector(b, n), sym);
            Rat rhs = inner(gabriel_root(a, n), gabriel_root(b, n));
            if (lhs != rhs && witness.empty()) {
                compat = false;
                witness = "(" + a.str() + "," + b.str() + ")_A = " + to_string(lhs) + " vs " + to_string(rhs);
            }
        }
    rep.expect("gabriel.bilinear_form", "(M,N)_A = (dim M, dim N) on all pairs", compat, witness);

    Rat det = cartan_matrix(n).determinant();
    rep.expect_eq("gabriel.cartan_det", "det C_A", "2", to_string(det));

    // pairwise non-isomorphic: distinct Hom-fingerprints (kept to n <= 5)
    if (n <= 5) {
        IndecContext<Rat> ctx(n);
        std::set<std::vector<int>> prints;
        for (const IndecType& t : types) prints.insert(ctx.fingerprint(ctx.rep(t)));
        rep.expect_eq("gabriel.fingerprints", "pairwise distinct Hom-fingerprints",
                      std::to_string(types.size()), std::to_string(prints.size()));
    }
    return rep;
}

inline CheckReport suite_presentation(const VerifyOptions& opt) {
    CheckReport rep;
    int n = opt.n;
    LTilde lt = build_LTilde(n);
    rep.merge(verify_presentation(lt));

    // generation: closure of all generator images is everything; closure of
    // the module generators alone is L(A)
    PhiGenerators g = phi_generators(lt);
    std::vector<LieElement> full, mods;
    for (const auto& e : g.x) { full.push_back(e); mods.push_back(e); }
    full.push_back(g.xp.back());
    mods.push_back(g.xp.back());
    for (const auto& e : g.h) full.push_back(e);
    rep.expect_eq("generation.full", "dim closure of {x_i, x'_n, h_i} images",
                  std::to_string((3L * n * n + 3 * n) / 2), std::to_string(lt.algebra.subalgebra_closure(full).rank()));
    rep.expect_eq("generation.modules", "dim closure of {S_1..S_n, S'_n}",
                  std::to_string((3L * n * n + n) / 2), std::to_string(lt.algebra.subalgebra_closure(mods).rank()));

    // integrality: L(A) structure constants in {-1,0,1}
    LieAlgebra L = build_L(n);
    bool pm1 = true;
    for (const auto& [ij, e] : L.table())
        for (const auto& [k, c] : e.terms)
            if (c != 1 && c != -1) pm1 = false;
    rep.expect("integrality.structure_constants", "all L(A) constants in {-1,0,1}", pm1);

    // phi change of basis: determinant a signed power of two, inverse over Z[1/2]
    PhiMap phi = phi_images(lt);
    Rat det = phi.change_of_basis.determinant();
    rep.expect("integrality.phi_det", "det(phi) = +/- 2^k (got " + to_string(det) + ")",
               is_integer(det) && is_pm_power_of_two(num(det)));
    auto inv = phi.change_of_basis.inverse();
    bool half_integral = inv.has_value();
    if (inv)
        for (int i = 0; i < inv->rows() && half_integral; ++i)
            for (int j = 0; j < inv->cols(); ++j)
                if (!denominator_is_power_of_two((*inv)(i, j))) { half_integral = false; break; }
    rep.expect("integrality.phi_inverse", "phi^{-1} has only power-of-two denominators", half_integral);
    return rep;
}

inline CheckReport suite_oracle(const VerifyOptions& opt) {
    CheckReport rep;
    if (opt.n > 3 && !opt.force_oracle) {
        rep.add("oracle.skipped", "n=" + std::to_string(opt.n),
                "oracle suite runs at n <= 3 by default", "skipped (pass --force-oracle to run)",
                CheckStatus::Pass);
        return rep;
    }
    HallOracle oracle(opt.n, opt.primes, opt.budget);
    rep.merge(verify_bracket_oracle(opt.n, oracle, /*log_counts=*/true));
    return rep;
}

inline CheckReport suite_cartan(const VerifyOptions& opt) {
    LTilde lt = build_LTilde(opt.n);
    RootSystemBC rs = build_root_system(opt.n);
    return cartan_decomposition_check(lt, rs);
}

inline CheckReport suite_euler(const VerifyOptions& opt) {
    CheckReport rep;
    int n = opt.n;
    Homology hom(n, opt.max_depth);
    std::vector<IndecType> types = all_indecomposables(n);

    TableResult tables = generate_tables(hom);
    rep.expect_eq("euler.tables", "entries matching the closed-form case law",
                  std::to_string(tables.entries.size()),
                  std::to_string(tables.entries.size() - tables.findings.entries.size()));
    rep.merge(tables.findings);

    // rationality: no pole at t = 1; exactly the V/V entries are
    // non-polynomial
    bool no_pole = true;
    long non_poly = 0;
    for (const auto& e : tables.entries) {
        if (e.series.has_pole_at(Rat(1))) no_pole = false;
        if (!e.series.is_polynomial()) ++non_poly;
    }
    rep.expect("euler.rational", "no series has a pole at t=1", no_pole);
    rep.expect_eq("euler.non_polynomial", "non-polynomial series (V against V)",
                  std::to_string(long(n) * n), std::to_string(non_poly));

    // additivity of <-,->_1 on all pairs
    bool additive = true;
    std::string witness;
    for (const IndecType& a : types)
        for (const IndecType& b : types) {
            auto ad = hom.additivity_check(a, b);
            if (!ad.ok && witness.empty()) {
                additive = false;
                witness = "<" + a.str() + "," + b.str() + ">_1 = " + to_string(ad.lhs) +
                          " vs bilinear " + to_string(ad.rhs);
            }
        }
    rep.expect("euler.additivity", "<M,N>_1 additive through dimension vectors", additive, witness);

    // matrix on simples is C_A^{-t}, checked by exact product
    Matrix<Rat> E(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            E(i - 1, j - 1) = hom.euler_at_one(IndecType::simple(i, n), IndecType::simple(j, n));
    Matrix<Rat> prod = E * cartan_matrix(n).transpose();
    rep.expect("euler.simples", "(<S_i,S_j>_1) C_A^t = Id", prod == Matrix<Rat>::identity(n));

    // Cor: <M,N>_1 + <N,M>_1 = (M,N)_A on all pairs
    Matrix<Rat> sym = symmetrized_cartan_inverse(n);
    bool symm = true;
    std::string sw;
    for (const IndecType& a : types)
        for (const IndecType& b : types) {
            Rat lhs = hom.euler_at_one(a, b) + hom.euler_at_one(b, a);
            Rat rhs = bilinear_form_A(dim_vector(a, n), dim_vector(b, n), sym);
            if (lhs != rhs && sw.empty()) {
                symm = false;
                sw = "(" + a.str() + "," + b.str() + "): " + to_string(lhs) + " vs " + to_string(rhs);
            }
        }
    rep.expect("euler.symmetrization", "<M,N>_1 + <N,M>_1 = (M,N)_A", symm, sw);
    return rep;
}

inline CheckReport suite_quotients(const VerifyOptions& opt) {
    LTilde lt = build_LTilde(opt.n);
    return ideal_quotient_check(lt);
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"jacobi", "gabriel", "presentation", "oracle",
                                                   "cartan", "euler", "quotients"};
    return names;
}

inline CheckReport run_suite(const std::string& name, const VerifyOptions& opt) {
    if (name == "jacobi") return suite_jacobi(opt);
    if (name == "gabriel") return suite_gabriel(opt);
    if (name == "presentation") return suite_presentation(opt);
    if (name == "oracle") return suite_oracle(opt);
    if (name == "cartan") return suite_cartan(opt);
    if (name == "euler") return suite_euler(opt);
    if (name == "quotients") return suite_quotients(opt);
    if (name == "all") {
        CheckReport rep;
        for (const std::string& s : suite_names()) rep.merge(run_suite(s, opt));
        return rep;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace gentle
