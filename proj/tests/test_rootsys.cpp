#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gentle/rootsys.hpp"

using namespace gentle;

namespace {
Root eps(int i, int n, long s = 1) { return Root::eps(i, n, s); }

// express a root in simple-root coordinates of BC_n (triangular solve)
std::vector<long> simple_coords(const Root& r) {
    int n = r.rank();
    std::vector<long> d(size_t(n), 0);
    long acc = 0;
    for (int i = 1; i <= n; ++i) {
        acc += r.coeffs[size_t(i) - 1];
        d[size_t(i) - 1] = acc;
    }
    return d;
}
}  // namespace

TEST_CASE("positive roots at small ranks") {
    auto rs1 = build_root_system(1);
    CHECK(rs1.phi_plus_BC == std::set<Root>{eps(1, 1), eps(1, 1, 2)});
    CHECK(rs1.phi_plus_B.size() == 1);
    CHECK(rs1.phi_plus_C.size() == 1);

    auto rs2 = build_root_system(2);
    CHECK(rs2.phi_plus_BC.size() == 6);
    for (const Root& r : {eps(1, 2) + eps(2, 2), eps(1, 2) - eps(2, 2), eps(1, 2), eps(2, 2),
                          eps(1, 2, 2), eps(2, 2, 2)})
        CHECK(rs2.phi_plus_BC.count(r) == 1);

    auto rs3 = build_root_system(3);
    CHECK(rs3.phi_plus_BC.count(eps(1, 3) + eps(2, 3)) == 1);
    CHECK(rs3.phi_plus_BC.count(eps(2, 3) - eps(1, 3)) == 0);

    CHECK_THROWS_AS(build_root_system(0), std::invalid_argument);
}

TEST_CASE("counts |Phi^+| for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto rs = build_root_system(n);
        CHECK(long(rs.phi_plus_BC.size()) == long(n) * n + n);
        CHECK(long(rs.phi_plus_B.size()) == long(n) * n);
        CHECK(long(rs.phi_plus_C.size()) == long(n) * n);
    }
}

TEST_CASE("inner products") {
    CHECK(inner(eps(1, 3), eps(1, 3)) == 1);
    CHECK(inner(eps(1, 3) - eps(2, 3), eps(2, 3) - eps(3, 3)) == -1);
    CHECK_THROWS_AS(inner(eps(1, 2), eps(1, 3)), std::invalid_argument);

    // Gram matrix of the simple roots: tridiagonal (2,...,2,1) with -1 off
    for (int n = 2; n <= 5; ++n) {
        auto rs = build_root_system(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rat g = inner(rs.delta[size_t(i)], rs.delta[size_t(j)]);
                Rat want = 0;
                if (i == j) want = (i == n - 1) ? 1 : 2;
                else if (std::abs(i - j) == 1) want = -1;
                CHECK(g == want);
            }
    }
}

TEST_CASE("root_from_simple_coords") {
    int n = 4;
    std::vector<long> en(size_t(n), 0);
    en.back() = 1;
    CHECK(root_from_simple_coords(en) == eps(n, n));
    CHECK(root_from_simple_coords(std::vector<long>(size_t(n), 1)) == eps(1, n));
    CHECK(root_from_simple_coords(std::vector<long>(size_t(n), 0)).is_zero());
}

TEST_CASE("root_from_simple_coords is additive") {
    int n = 5;
    unsigned long state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return long((state >> 33) % 7);
    };
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<long> a(size_t(n), 0), b(size_t(n), 0), s(size_t(n), 0);
        for (int k = 0; k < n; ++k) {
            a[size_t(k)] = rnd();
            b[size_t(k)] = rnd();
            s[size_t(k)] = a[size_t(k)] + b[size_t(k)];
        }
        CHECK(root_from_simple_coords(s) == root_from_simple_coords(a) + root_from_simple_coords(b));
    }
}

TEST_CASE("membership") {
    auto rs = build_root_system(3);
    CHECK_FALSE(membership(rs, eps(1, 3, 2), RootSystemKind::B));
    CHECK(membership(rs, eps(1, 3, 2), RootSystemKind::C));
    CHECK(membership(rs, eps(1, 3) + eps(1, 3), RootSystemKind::BC));
    CHECK_THROWS_AS(membership(rs, eps(1, 2), RootSystemKind::BC), std::invalid_argument);
}

TEST_CASE("Phi_BC = Phi_B union Phi_C for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto rs = build_root_system(n);
        std::set<Root> u = rs.phi_B;
        u.insert(rs.phi_C.begin(), rs.phi_C.end());
        CHECK(u == rs.phi_BC);
    }
}

TEST_CASE("positive roots are nonnegative integer combinations of the simple roots") {
    for (int n = 1; n <= 6; ++n) {
        auto rs = build_root_system(n);
        for (const Root& r : rs.phi_plus_BC) {
            std::vector<long> d = simple_coords(r);
            for (long x : d) CHECK(x >= 0);
            CHECK(root_from_simple_coords(d) == r);
        }
    }
}

TEST_CASE("inner is symmetric on Phi_BC") {
    auto rs = build_root_system(4);
    for (const Root& a : rs.phi_BC)
        for (const Root& b : rs.phi_BC) CHECK(inner(a, b) == inner(b, a));
}
