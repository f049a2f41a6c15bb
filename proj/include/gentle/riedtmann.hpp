// The Riedtmann Lie algebra L(A) of Lambda(n-1,1,1) on the indecomposable
// basis, its extension LTilde(A) by the Grothendieck group, the basis
// correspondence phi into it, and the checks for the presentation, the Cartan
// decomposition, and the two Borel quotients.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gentle/borel.hpp"
#include "gentle/hall.hpp"
#include "gentle/indec.hpp"
#include "gentle/liecore.hpp"
#include "gentle/matrix.hpp"
#include "gentle/quiver.hpp"
#include "gentle/report.hpp"
#include "gentle/rootsys.hpp"

namespace gentle {

// Structure constants of L(A): [W,W], [W,V], [W,U], [V,V] as stated, all other
// pairs bracket to zero. W-indices are consumed with j <= n-1 only (the label
// set of the classification).
inline std::map<IndecType, long> bracket_rule(const IndecType& X, const IndecType& Y, int n) {
    std::map<IndecType, long> out;
    auto add = [&](const IndecType& t, long c) {
        if (c == 0) return;
        t.require_valid(n);
        out[t] += c;
        if (out[t] == 0) out.erase(t);
    };
    if (X.fam == Family::W && Y.fam == Family::W) {
        // [W_{i,j}, W_{l,m}] = d_{j+1,l} W_{i,m} - d_{m+1,i} W_{l,j}
        if (X.j + 1 == Y.i) add(IndecType::W(X.i, Y.j), 1);
        if (Y.j + 1 == X.i) add(IndecType::W(Y.i, X.j), -1);
    } else if (X.fam == Family::W && Y.fam == Family::V) {
        if (X.j + 1 == Y.i) add(IndecType::V(X.i), 1);
    } else if (X.fam == Family::V && Y.fam == Family::W) {
        if (Y.j + 1 == X.i) add(IndecType::V(Y.i), -1);
    } else if (X.fam == Family::W && Y.fam == Family::U) {
        // [W_{i,j}, U_{l,m}] = d_{j+1,m} U_{l,i} + d_{j+1,l} U_{i,m}
        if (X.j + 1 == Y.j) add(IndecType::U(Y.i, X.i), 1);
        if (X.j + 1 == Y.i) add(IndecType::U(X.i, Y.j), 1);
    } else if (X.fam == Family::U && Y.fam == Family::W) {
        if (Y.j + 1 == X.j) add(IndecType::U(X.i, Y.i), -1);
        if (Y.j + 1 == X.i) add(IndecType::U(Y.i, X.j), -1);
    } else if (X.fam == Family::V && Y.fam == Family::V) {
        // [V_i, V_j] = U_{j,i} - U_{i,j}
        if (X.i != Y.i) {
            add(IndecType::U(Y.i, X.i), 1);
            add(IndecType::U(X.i, Y.i), -1);
        }
    }
    return out;
}

// L(A) on the indecomposable basis, canonical order.
inline LieAlgebra build_L(int n) {
    std::vector<IndecType> types = all_indecomposables(n);
    std::map<IndecType, int> idx;
    std::vector<std::string> labels;
    for (size_t k = 0; k < types.size(); ++k) {
        idx[types[k]] = int(k);
        labels.push_back(types[k].str());
    }
    std::map<std::pair<int, int>, LieElement> table;
    for (size_t a = 0; a < types.size(); ++a)
        for (size_t b = a + 1; b < types.size(); ++b) {
            auto rule = bracket_rule(types[a], types[b], n);
            LieElement e;
            for (const auto& [t, c] : rule) e.add(idx.at(t), Rat(c));
            if (!e.is_zero()) table[{int(a), int(b)}] = std::move(e);
        }
    return LieAlgebra(std::move(labels), std::move(table));
}

// LTilde(A) = K_0(mod A) + L(A), basis = indecomposables then h_{S_1}..h_{S_n},
// with [h_M, N] = (M,N)_A N and [h_M, h_N] = 0.
struct LTilde {
    int n = 0;
    std::vector<IndecType> module_types;
    Matrix<Rat> sym;  // C_A^{-1} + C_A^{-t}
    LieAlgebra algebra{{}, {}};

    int module_index(const IndecType& t) const {
        auto it = module_idx_.find(t);
        if (it == module_idx_.end()) throw std::out_of_range("not a module label: " + t.str());
        return it->second;
    }
    int h_index(int i) const {  // h_{S_i}, 1-based
        if (i < 1 || i > n) throw std::out_of_range("h index out of range");
        return int(module_types.size()) + i - 1;
    }
    LieElement module_elem(const IndecType& t) const { return LieElement::unit(module_index(t)); }
    LieElement h_elem(int i) const { return LieElement::unit(h_index(i)); }

    Rat pairing_with_simple(int i, const IndecType& t) const {  // (S_i, t)_A
        DimVector d = dim_vector(t, n);
        Rat s(0);
        for (int j = 0; j < n; ++j) s += sym(i - 1, j) * Rat(d[size_t(j)]);
        return s;
    }

    std::map<IndecType, int> module_idx_;
};

inline LTilde build_LTilde(int n) {
    LTilde lt;
    lt.n = n;
    lt.module_types = all_indecomposables(n);
    lt.sym = symmetrized_cartan_inverse(n);
    std::vector<std::string> labels;
    for (size_t k = 0; k < lt.module_types.size(); ++k) {
        lt.module_idx_[lt.module_types[k]] = int(k);
        labels.push_back(lt.module_types[k].str());
    }
    for (int i = 1; i <= n; ++i) labels.push_back("h(S_" + std::to_string(i) + ")");

    std::map<std::pair<int, int>, LieElement> table;
    size_t M = lt.module_types.size();
    for (size_t a = 0; a < M; ++a)
        for (size_t b = a + 1; b < M; ++b) {
            auto rule = bracket_rule(lt.module_types[a], lt.module_types[b], n);
            LieElement e;
            for (const auto& [t, c] : rule) e.add(lt.module_idx_.at(t), Rat(c));
            if (!e.is_zero()) table[{int(a), int(b)}] = std::move(e);
        }
    // [X, h_i] = -(S_i, X)_A X stored on the (module, h) side of the table
    for (size_t a = 0; a < M; ++a)
        for (int i = 1; i <= n; ++i) {
            Rat c = Rat(0);
            {
                DimVector d = dim_vector(lt.module_types[a], n);
                for (int j = 0; j < n; ++j) c += lt.sym(i - 1, j) * Rat(d[size_t(j)]);
            }
            if (c == 0) continue;
            LieElement e;
            e.add(int(a), -c);
            table[{int(a), int(M) + i - 1}] = std::move(e);
        }
    lt.algebra = LieAlgebra(std::move(labels), std::move(table));
    return lt;
}

// ---------------------------------------------------------------------------
// phi : n -> LTilde(A), the basis correspondence of the main theorem.

struct GLabel {
    enum Kind { X, XX, XP, WX, H } kind = X;
    int i = 0, j = 0;
    std::string str() const {
        std::ostringstream os;
        switch (kind) {
            case X: os << "x(" << i << "," << j << ")"; break;
            case XX: os << "[x(" << i << ",n),x(" << j << ",n)]"; break;
            case XP: os << "x'(" << i << ",n)"; break;
            case WX: os << "[x(" << j << ",n-1),x'(" << i << ",n)]"; break;
            case H: os << "h(" << i << ")"; break;
        }
        return os.str();
    }
};

struct PhiMap {
    int n = 0;
    std::vector<GLabel> domain;       // (g1) basis then h_1..h_n
    std::vector<LieElement> images;   // in LTilde coordinates
    Matrix<Rat> change_of_basis;      // columns = images in the module+h basis
};

inline PhiMap phi_images(const LTilde& lt) {
    int n = lt.n;
    PhiMap phi;
    phi.n = n;
    auto push = [&](GLabel g, LieElement e) {
        phi.domain.push_back(g);
        phi.images.push_back(std::move(e));
    };
    // x_{i,j} (1 <= i <= j <= n): W(i,j) for j < n, V(i) for j = n
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            if (j < n) push({GLabel::X, i, j}, lt.module_elem(IndecType::W(i, j)));
            else push({GLabel::X, i, n}, lt.module_elem(IndecType::V(i)));
        }
    // [x_{i,n}, x_{j,n}] (i < j): U(j,i) - U(i,j)
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            push({GLabel::XX, i, j},
                 lt.module_elem(IndecType::U(j, i)) - lt.module_elem(IndecType::U(i, j)));
    // x'_{i,n} (1 <= i <= n): U(i,n) + U(n,i) for i < n, and x'_n = U(n,n)
    for (int i = 1; i <= n; ++i) {
        if (i < n)
            push({GLabel::XP, i, n},
                 lt.module_elem(IndecType::U(i, n)) + lt.module_elem(IndecType::U(n, i)));
        else
            push({GLabel::XP, n, n}, lt.module_elem(IndecType::U(n, n)));
    }
    // [x_{j,n-1}, x'_{i,n}] (1 <= i <= j <= n-1): U(i,j) + U(j,i)
    for (int i = 1; i <= n - 1; ++i)
        for (int j = i; j <= n - 1; ++j)
            push({GLabel::WX, i, j},
                 lt.module_elem(IndecType::U(i, j)) + lt.module_elem(IndecType::U(j, i)));
    // h_i -> h_{S_i} (i < n), h_n -> 2 h_{S_n}
    for (int i = 1; i <= n; ++i) {
        LieElement e = lt.h_elem(i);
        if (i == n) e = e * Rat(2);
        push({GLabel::H, i, 0}, std::move(e));
    }

    int D = lt.algebra.dim();
    if (int(phi.images.size()) != D) throw std::logic_error("phi: domain size mismatch");
    phi.change_of_basis = Matrix<Rat>(D, D);
    for (int c = 0; c < D; ++c) phi.change_of_basis.set_col(c, phi.images[size_t(c)].dense(D));
    return phi;
}

// Generator images: phi(x_j) = S_j, phi(x'_n) = S'_n, phi(h_i), phi(h'_i).
struct PhiGenerators {
    std::vector<LieElement> x;   // x_1..x_n
    std::vector<LieElement> xp;  // x'_1..x'_n (x'_i = x_i for i < n)
    std::vector<LieElement> h;   // h_1..h_n images
    std::vector<LieElement> hp;  // h'_1..h'_n images (h'_n = h_n / 2)
};

inline PhiGenerators phi_generators(const LTilde& lt) {
    int n = lt.n;
    PhiGenerators g;
    for (int i = 1; i <= n; ++i) {
        g.x.push_back(lt.module_elem(IndecType::simple(i, n)));
        g.xp.push_back(i < n ? lt.module_elem(IndecType::simple(i, n))
                             : lt.module_elem(IndecType::simple_prime(n)));
        g.h.push_back(i < n ? lt.h_elem(i) : lt.h_elem(n) * Rat(2));
        g.hp.push_back(lt.h_elem(i));
    }
    return g;
}

// Every instance of (B1)-(B3), (C1)-(C3) and (BC3) evaluated on the phi-images
// inside LTilde(A) (x) Q.
inline CheckReport verify_presentation(const LTilde& lt) {
    CheckReport rep;
    int n = lt.n;
    const LieAlgebra& L = lt.algebra;
    PhiGenerators g = phi_generators(lt);

    auto run_family = [&](BorelType type, const std::vector<LieElement>& xs,
                          const std::vector<LieElement>& hs, const std::string& fam) {
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                LieElement hh = L.bracket(hs[size_t(i) - 1], hs[size_t(j) - 1]);
                rep.expect(fam + "1", "[h_" + std::to_string(i) + ", h_" + std::to_string(j) + "]",
                           hh.is_zero(), L.element_str(hh));
                LieElement hx = L.bracket(hs[size_t(i) - 1], xs[size_t(j) - 1]);
                LieElement want = xs[size_t(j) - 1] * Rat(serre_h_coeff(type, n, i, j));
                rep.expect_eq(fam + "2",
                              "[h_" + std::to_string(i) + ", x_" + std::to_string(j) + "]",
                              L.element_str(want), L.element_str(hx));
                if (i != j) {
                    LieElement ad = xs[size_t(j) - 1];
                    int power = serre_ad_power(type, n, i, j);
                    for (int k = 0; k < power; ++k) ad = L.bracket(xs[size_t(i) - 1], ad);
                    rep.expect(fam + "3",
                               "ad(x_" + std::to_string(i) + ")^" + std::to_string(power) + " x_" +
                                   std::to_string(j),
                               ad.is_zero(), L.element_str(ad));
                }
            }
    };
    run_family(BorelType::B, g.x, g.h, "B");
    run_family(BorelType::C, g.xp, g.hp, "C");

    LieElement bc1 = L.bracket(g.x[size_t(n) - 1], g.xp[size_t(n) - 1]);
    rep.expect("BC3", "[x_n, x'_n]", bc1.is_zero(), L.element_str(bc1));
    if (n >= 2) {
        LieElement bc2 = L.bracket(L.bracket(g.x[size_t(n) - 2], g.x[size_t(n) - 1]), g.xp[size_t(n) - 1]);
        rep.expect("BC3", "[[x_{n-1}, x_n], x'_n]", bc2.is_zero(), L.element_str(bc2));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Cartan decomposition of LTilde(A) (x) Q against (h_{S_1},...,h_{S_n}).

inline CheckReport cartan_decomposition_check(const LTilde& lt, const RootSystemBC& rs) {
    CheckReport rep;
    int n = lt.n;
    std::vector<LieElement> hs;
    for (int i = 1; i <= n; ++i) hs.push_back(lt.h_elem(i));
    auto wd = lt.algebra.weight_decomposition(hs);
    rep.expect("cartan.diagonal", "ad(h) acts diagonally on the basis", wd.diagonal,
               wd.diagonal ? "" : "non-diagonal at basis index " + std::to_string(wd.offending_basis_index));
    if (!wd.diagonal) return rep;

    // eps-coordinates: mu(h_j) for the presented generators h_j (h_n = 2 h_{S_n})
    // solved against the type-B matrix (eps_i(h_j)).
    Matrix<Rat> E(n, n);
    for (int i = 1; i <= n; ++i) {
        E(i - 1, i - 1) = (i == n) ? 2 : 1;
        if (i >= 2) E(i - 1, i - 2) = -1;
    }
    Matrix<Rat> Et = E.transpose();

    std::map<Root, int> mult;  // nonzero weights in eps-coordinates
    int zero_dim = -1;
    bool zero_is_h_span = false;
    for (const auto& [weight, members] : wd.spaces) {
        bool zero = true;
        for (const Rat& w : weight)
            if (w != 0) zero = false;
        if (zero) {
            zero_dim = int(members.size());
            zero_is_h_span = true;
            for (int b : members)
                if (b < int(lt.module_types.size())) zero_is_h_span = false;
            continue;
        }
        std::vector<Rat> v = weight;
        v[size_t(n) - 1] *= 2;  // pass from h_{S_n} to h_n
        auto c = Et.solve(v);
        if (!c) {
            rep.expect("cartan.weight", "weight solvable in eps-coordinates", false);
            continue;
        }
        Root root = Root::zero(n);
        bool integral = true;
        for (int k = 0; k < n; ++k) {
            if (!is_integer((*c)[size_t(k)])) integral = false;
            else root.coeffs[size_t(k)] = long((*c)[size_t(k)].convert_to<long long>());
        }
        rep.expect("cartan.weight.integral", "weight of " + lt.algebra.label(wd.spaces.at(weight).front()),
                   integral);
        if (!integral) continue;
        mult[root] += int(members.size());
        // each indecomposable sits in the weight of its Gabriel root
        for (int b : members) {
            if (b >= int(lt.module_types.size())) continue;
            const IndecType& t = lt.module_types[size_t(b)];
            rep.expect_eq("cartan.module_weight", t.str(), gabriel_root(t, n).str(), root.str());
        }
    }
    rep.expect_eq("cartan.zero_space", "dim g(0)", std::to_string(n), std::to_string(zero_dim));
    rep.expect("cartan.zero_space", "g(0) spanned by the h classes", zero_is_h_span);

    // weight set is exactly Phi^+, with multiplicity 2 exactly on eps_i+eps_j (i<j)
    bool set_eq = true;
    for (const auto& [root, m] : mult)
        if (!rs.phi_plus_BC.count(root)) set_eq = false;
    for (const Root& r : rs.phi_plus_BC)
        if (!mult.count(r)) set_eq = false;
    rep.expect("cartan.weight_set", "nonzero weights = Phi^+", set_eq);
    for (const auto& [root, m] : mult) {
        int plus = 0, twos = 0;
        for (long c : root.coeffs) {
            if (c == 1) ++plus;
            if (c == 2) ++twos;
        }
        bool is_sum = (plus == 2 && twos == 0);  // eps_i + eps_j, i < j
        rep.expect_eq("cartan.multiplicity", root.str(), std::to_string(is_sum ? 2 : 1), std::to_string(m));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// The two ideals of LTilde(A) and their Borel quotients.

struct QuotientData {
    BorelType type = BorelType::B;
    int ideal_dim = 0;
    RowSpan<Rat> ideal{0};
    LieAlgebra algebra{{}, {}};
    std::vector<LieElement> x_gens, h_gens;  // generator classes in the quotient
};

inline QuotientData borel_quotient(const LTilde& lt, BorelType type) {
    int n = lt.n;
    const LieAlgebra& L = lt.algebra;
    QuotientData out;
    out.type = type;
    RowSpan<Rat> ideal(L.dim());
    if (type == BorelType::B) {
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) {
                LieElement e = lt.module_elem(IndecType::U(i, j)) + lt.module_elem(IndecType::U(j, i));
                ideal.insert(e.dense(L.dim()));
            }
    } else {
        for (int i = 1; i <= n; ++i) ideal.insert(lt.module_elem(IndecType::V(i)).dense(L.dim()));
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                LieElement e = lt.module_elem(IndecType::U(j, i)) - lt.module_elem(IndecType::U(i, j));
                ideal.insert(e.dense(L.dim()));
            }
    }
    out.ideal_dim = ideal.rank();
    out.algebra = L.quotient(ideal);
    PhiGenerators g = phi_generators(lt);
    const auto& xs = (type == BorelType::B) ? g.x : g.xp;
    const auto& hs = (type == BorelType::B) ? g.h : g.hp;
    for (int i = 0; i < n; ++i) {
        out.x_gens.push_back(L.project_to_quotient(ideal, xs[size_t(i)]));
        out.h_gens.push_back(L.project_to_quotient(ideal, hs[size_t(i)]));
    }
    out.ideal = std::move(ideal);
    return out;
}

inline CheckReport ideal_quotient_check(const LTilde& lt) {
    CheckReport rep;
    int n = lt.n;
    for (BorelType type : {BorelType::B, BorelType::C}) {
        std::string tag = "quotient." + borel_type_str(type);
        QuotientData qd = borel_quotient(lt, type);
        rep.expect(tag + ".ideal", "span closed under bracket with the whole algebra",
                   lt.algebra.is_ideal(qd.ideal));
        int expected_ideal = (type == BorelType::B) ? n * (n + 1) / 2 : n + n * (n - 1) / 2;
        rep.expect_eq(tag + ".ideal_dim", "dim", std::to_string(expected_ideal), std::to_string(qd.ideal_dim));
        rep.expect_eq(tag + ".quotient_dim", "dim", std::to_string(n * n + n), std::to_string(qd.algebra.dim()));
        MatrixLieModel model = build_borel(type, n);
        rep.merge(quotient_iso_check(qd.algebra, qd.x_gens, qd.h_gens, model));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Hall oracle versus the stated structure constants: every ordered pair of
// indecomposables, with per-prime point counts logged on mismatch.

inline CheckReport verify_bracket_oracle(int n, HallOracle& oracle, bool log_counts = false) {
    CheckReport rep;
    std::vector<IndecType> types = all_indecomposables(n);
    for (const IndecType& X : types)
        for (const IndecType& Y : types) {
            std::string inst = "[" + X.str() + ", " + Y.str() + "]";
            std::map<IndecType, long> expected;
            for (const auto& [t, c] : bracket_rule(X, Y, n))
                if (c != 0) expected[t] = c;
            try {
                std::map<IndecType, long> got = oracle.hall_bracket(X, Y);
                bool ok = got == expected;
                auto fmt = [](const std::map<IndecType, long>& m) {
                    if (m.empty()) return std::string("0");
                    std::ostringstream os;
                    bool first = true;
                    for (const auto& [t, c] : m) {
                        if (!first) os << " + ";
                        if (c != 1) os << c << "*";
                        os << t.str();
                        first = false;
                    }
                    return os.str();
                };
                std::ostringstream got_os;
                got_os << fmt(got);
                if (log_counts) {
                    DimVector target = dim_vector(X, n), dy = dim_vector(Y, n);
                    for (size_t k = 0; k < target.size(); ++k) target[k] += dy[k];
                    std::ostringstream counts;
                    for (const IndecType& Z : types) {
                        if (dim_vector(Z, n) != target) continue;
                        for (auto [p, c] : oracle.point_counts({{X, 1}}, {{Y, 1}}, {{Z, 1}}))
                            counts << " c(XY;" << Z.str() << ";F" << p << ")=" << c;
                        for (auto [p, c] : oracle.point_counts({{Y, 1}}, {{X, 1}}, {{Z, 1}}))
                            counts << " c(YX;" << Z.str() << ";F" << p << ")=" << c;
                    }
                    if (counts.tellp() > 0) got_os << " [counts:" << counts.str() << "]";
                }
                rep.add("oracle.bracket", inst, fmt(expected), got_os.str(),
                        ok ? CheckStatus::Pass : CheckStatus::Fail);
            } catch (const BudgetExceeded& e) {
                rep.add("oracle.bracket", inst, "-", e.what(), CheckStatus::BudgetExceeded);
            } catch (const NonPolynomialCount& e) {
                rep.add("oracle.bracket", inst, "-", e.what(), CheckStatus::Fail);
            }
        }
    return rep;
}

// ---------------------------------------------------------------------------
// LaTeX emission of the bracket table on module labels.

inline std::string bracket_table_latex(const LieAlgebra& L, int n) {
    std::vector<IndecType> types = all_indecomposables(n);
    std::ostringstream os;
    os << "\\begin{tabular}{c|";
    for (size_t c = 0; c < types.size(); ++c) os << "c";
    os << "}\n[-,-]";
    for (const auto& t : types) os << " & $" << t.str() << "$";
    os << " \\\\\\hline\n";
    for (size_t a = 0; a < types.size(); ++a) {
        os << "$" << types[a].str() << "$";
        for (size_t b = 0; b < types.size(); ++b)
            os << " & $" << L.element_str(L.bracket_basis(int(a), int(b))) << "$";
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace gentle
