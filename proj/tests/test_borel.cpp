#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/borel.hpp"
#include "gentle/riedtmann.hpp"

using namespace gentle;

namespace {
bool upper_triangular(const Matrix<Rat>& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (m(i, j) != 0) return false;
    return true;
}
}

TEST_CASE("borel models build and have the right dimension") {
    for (int n = 1; n <= 5; ++n)
        for (BorelType type : {BorelType::B, BorelType::C}) {
            MatrixLieModel m = build_borel(type, n);
            CHECK(m.dim() == n * n + n);
            for (int i = 0; i < n; ++i) {
                CHECK(m.in_ambient_algebra(m.x[size_t(i)]));
                CHECK(m.in_ambient_algebra(m.h[size_t(i)]));
                for (int j = 0; j < n; ++j)
                    CHECK(comm(m.h[size_t(i)], m.h[size_t(j)]).is_zero());
            }
            // the whole closure is upper triangular and inside the ambient algebra
            for (const auto& row : m.closure.rows()) {
                Matrix<Rat> mat(m.ambient, m.ambient);
                int idx = 0;
                for (int r = 0; r < m.ambient; ++r)
                    for (int c = 0; c < m.ambient; ++c) mat(r, c) = row[size_t(idx++)];
                CHECK(upper_triangular(mat));
                CHECK(m.in_ambient_algebra(mat));
            }
        }
}

TEST_CASE("weight matrices (eps_i(h_j))") {
    int n = 4;
    MatrixLieModel b = build_borel(BorelType::B, n);
    MatrixLieModel c = build_borel(BorelType::C, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Rat wb = 0, wc = 0;
            if (i == j) { wb = (i == n) ? 2 : 1; wc = 1; }
            if (i == j + 1) { wb = -1; wc = -1; }
            CHECK(b.eps_of_h(i - 1, j - 1) == wb);
            CHECK(c.eps_of_h(i - 1, j - 1) == wc);
        }
}

TEST_CASE("root space bases") {
    for (int n = 2; n <= 4; ++n)
        for (BorelType type : {BorelType::B, BorelType::C}) {
            MatrixLieModel m = build_borel(type, n);
            RootSpaceBasis rsb = root_space_basis(m);
            CHECK(rsb.report.all_pass());
            if (!rsb.report.all_pass())
                for (const auto& e : rsb.report.entries)
                    if (e.status != CheckStatus::Pass)
                        MESSAGE(e.check_id, " ", e.instance, " expected ", e.expected, " got ", e.computed);
            // the covered roots are exactly the positive roots of the type
            RootSystemBC rs = build_root_system(n);
            const auto& plus = type == BorelType::B ? rs.phi_plus_B : rs.phi_plus_C;
            CHECK(rsb.vectors.size() == plus.size());
            for (const auto& [root, vec] : rsb.vectors) CHECK(plus.count(root) == 1);
        }
}

TEST_CASE("quotient iso checks at n = 2") {
    int n = 2;
    LTilde lt = build_LTilde(n);
    QuotientData qb = borel_quotient(lt, BorelType::B);
    QuotientData qc = borel_quotient(lt, BorelType::C);
    MatrixLieModel mb = build_borel(BorelType::B, n);
    MatrixLieModel mc = build_borel(BorelType::C, n);

    CHECK(quotient_iso_check(qb.algebra, qb.x_gens, qb.h_gens, mb).all_pass());
    CHECK(quotient_iso_check(qc.algebra, qc.x_gens, qc.h_gens, mc).all_pass());

    // negative control: the type-B quotient against the type-C model has the
    // same dimension but differing bracket words
    CheckReport cross = quotient_iso_check(qb.algebra, qb.x_gens, qb.h_gens, mc);
    CHECK_FALSE(cross.all_pass());
}

TEST_CASE("serre coefficient tables degenerate correctly at the short/long ends") {
    int n = 3;
    // B: [h_n, x_{n-1}] = -2 x_{n-1}; C: [h'_{n-1}, x'_n] = -2 x'_n
    CHECK(serre_h_coeff(BorelType::B, n, n, n - 1) == -2);
    CHECK(serre_h_coeff(BorelType::B, n, n - 1, n) == -1);
    CHECK(serre_h_coeff(BorelType::C, n, n - 1, n) == -2);
    CHECK(serre_h_coeff(BorelType::C, n, n, n - 1) == -1);
    CHECK(serre_ad_power(BorelType::B, n, n, n - 1) == 3);
    CHECK(serre_ad_power(BorelType::C, n, n - 1, n) == 3);
    CHECK(serre_ad_power(BorelType::B, n, 1, 3) == 1);
}
