#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/liecore.hpp"
#include "gentle/riedtmann.hpp"
#include "gentle/serialize.hpp"

using namespace gentle;

TEST_CASE("bracket evaluation") {
    LTilde lt = build_LTilde(3);
    const LieAlgebra& L = lt.algebra;
    LieElement x = lt.module_elem(IndecType::W(1, 2));
    CHECK(L.bracket(x, x).is_zero());
    // [h_{S_1}, S_2] = -S_2
    CHECK(L.bracket(lt.h_elem(1), lt.module_elem(IndecType::W(2, 2))) ==
          lt.module_elem(IndecType::W(2, 2)) * Rat(-1));
    // [W(1,2), V(3)] = V(1)
    CHECK(L.bracket(lt.module_elem(IndecType::W(1, 2)), lt.module_elem(IndecType::V(3))) ==
          lt.module_elem(IndecType::V(1)));
    CHECK_THROWS_AS(L.bracket_basis(0, 99), std::out_of_range);
}

TEST_CASE("jacobi check") {
    CHECK_FALSE(build_LTilde(2).algebra.jacobi_check().has_value());

    // deliberately corrupted table: flip one sign
    LieAlgebra L = build_L(2);
    auto table = L.table();
    bool flipped = false;
    for (auto& [ij, e] : table) {
        if (e.terms.empty()) continue;
        e = e * Rat(-1);
        flipped = true;
        break;
    }
    REQUIRE(flipped);
    LieAlgebra bad(std::vector<std::string>(L.labels()), std::move(table));
    auto fail = bad.jacobi_check();
    REQUIRE(fail.has_value());
    CHECK(fail->i < fail->j);
    CHECK(fail->j < fail->k);
    CHECK_FALSE(fail->residue.is_zero());

    // abelian algebra
    LieAlgebra abelian({"a", "b", "c"}, {});
    CHECK_FALSE(abelian.jacobi_check().has_value());
}

TEST_CASE("subalgebra closures") {
    for (int n = 2; n <= 4; ++n) {
        LTilde lt = build_LTilde(n);
        std::vector<LieElement> gens;
        for (int i = 1; i <= n; ++i) gens.push_back(lt.module_elem(IndecType::simple(i, n)));
        gens.push_back(lt.module_elem(IndecType::simple_prime(n)));
        auto cl = lt.algebra.subalgebra_closure(gens);
        CHECK(cl.rank() == (3 * n * n + n) / 2);

        // with the h's the closure is everything
        for (int i = 1; i <= n; ++i) gens.push_back(lt.h_elem(i));
        auto full = lt.algebra.subalgebra_closure(gens);
        CHECK(full.rank() == (3 * n * n + 3 * n) / 2);

        // closing a closure is idempotent
        std::vector<LieElement> rows;
        for (const auto& r : cl.rows()) rows.push_back(LieElement::from_dense(r));
        auto again = lt.algebra.subalgebra_closure(rows);
        CHECK(again.rank() == cl.rank());
        for (const auto& r : again.rows()) CHECK(cl.contains(r));
    }
    // singleton h is abelian
    LTilde lt = build_LTilde(3);
    CHECK(lt.algebra.subalgebra_closure({lt.h_elem(1)}).rank() == 1);
}

TEST_CASE("ideal closures") {
    for (int n = 2; n <= 4; ++n) {
        LTilde lt = build_LTilde(n);
        // ideal generated by the image of x'_n = U(n,n)
        auto i1 = lt.algebra.ideal_closure({lt.module_elem(IndecType::simple_prime(n))});
        CHECK(i1.rank() == n * (n + 1) / 2);
        CHECK(lt.algebra.is_ideal(i1));
        // ideal generated by the image of x_n = V(n); the computed closure is
        // the arbiter, with basis V_i and U(j,i)-U(i,j)
        auto i2 = lt.algebra.ideal_closure({lt.module_elem(IndecType::V(n))});
        CHECK(i2.rank() == n * (n + 1) / 2);
        CHECK(lt.algebra.is_ideal(i2));
        for (int i = 1; i <= n; ++i)
            CHECK(i2.contains(lt.module_elem(IndecType::V(i)).dense(lt.algebra.dim())));
    }
    LTilde lt = build_LTilde(3);
    CHECK(lt.algebra.ideal_closure({LieElement{}}).rank() == 0);
}

TEST_CASE("quotients") {
    int n = 3;
    LTilde lt = build_LTilde(n);
    auto ideal = lt.algebra.ideal_closure({lt.module_elem(IndecType::simple_prime(n))});
    LieAlgebra q = lt.algebra.quotient(ideal);
    CHECK(q.dim() == n * n + n);
    CHECK_FALSE(q.jacobi_check().has_value());

    // lifted brackets agree modulo the ideal
    unsigned long state = 7;
    auto rnd = [&](int m) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return int((state >> 33) % static_cast<unsigned long>(m));
    };
    for (int trial = 0; trial < 20; ++trial) {
        LieElement a = LieElement::unit(rnd(lt.algebra.dim()));
        LieElement b = LieElement::unit(rnd(lt.algebra.dim()));
        LieElement lifted = lt.algebra.bracket(a, b);
        LieElement qa = lt.algebra.project_to_quotient(ideal, a);
        LieElement qb = lt.algebra.project_to_quotient(ideal, b);
        CHECK(q.bracket(qa, qb) == lt.algebra.project_to_quotient(ideal, lifted));
    }

    // quotient by everything is zero; quotient by zero is the same table
    RowSpan<Rat> whole(lt.algebra.dim());
    for (int k = 0; k < lt.algebra.dim(); ++k) whole.insert(LieElement::unit(k).dense(lt.algebra.dim()));
    CHECK(lt.algebra.quotient(whole).dim() == 0);
    RowSpan<Rat> zero(lt.algebra.dim());
    LieAlgebra same = lt.algebra.quotient(zero);
    CHECK(same.dim() == lt.algebra.dim());
    CHECK(same.table() == lt.algebra.table());

    // a non-ideal is rejected
    RowSpan<Rat> bad(lt.algebra.dim());
    bad.insert(lt.module_elem(IndecType::V(1)).dense(lt.algebra.dim()));
    CHECK_THROWS_AS(lt.algebra.quotient(bad), std::invalid_argument);
}

TEST_CASE("weight decomposition") {
    int n = 3;
    LTilde lt = build_LTilde(n);
    std::vector<LieElement> hs;
    for (int i = 1; i <= n; ++i) hs.push_back(lt.h_elem(i));
    auto wd = lt.algebra.weight_decomposition(hs);
    REQUIRE(wd.diagonal);
    // the partition covers the basis
    size_t total = 0;
    for (const auto& [w, members] : wd.spaces) total += members.size();
    CHECK(total == size_t(lt.algebra.dim()));
    // weight of V(1) is ((S_i, V_1)_A)_i = (1, 0, 0)
    std::vector<Rat> wV1 = {1, 0, 0};
    REQUIRE(wd.spaces.count(wV1) == 1);
    bool found = false;
    for (int b : wd.spaces[wV1])
        if (lt.algebra.label(b) == "V(1)") found = true;
    CHECK(found);
    // weight zero space is exactly the h span
    std::vector<Rat> zero = {0, 0, 0};
    REQUIRE(wd.spaces.count(zero) == 1);
    CHECK(wd.spaces[zero].size() == size_t(n));
    for (int b : wd.spaces[zero]) CHECK(b >= int(lt.module_types.size()));
    // non-diagonal action is reported: use a basis element that is not ad-semisimple
    auto wd2 = lt.algebra.weight_decomposition({lt.module_elem(IndecType::W(1, 1))});
    CHECK_FALSE(wd2.diagonal);
}

TEST_CASE("structure constant JSON shape") {
    LieAlgebra L = build_L(2);
    json j = to_json(L);
    REQUIRE(j.contains("basis"));
    REQUIRE(j.contains("brackets"));
    CHECK(j["basis"].size() == 7);
    for (const auto& b : j["brackets"]) {
        CHECK(b["i"].get<int>() < b["j"].get<int>());
        for (const auto& t : b["terms"]) {
            CHECK(t.contains("k"));
            CHECK(t.contains("num"));
            CHECK(t.contains("den"));
        }
    }
}
