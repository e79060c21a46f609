#include "doctest.h"
#include "redn/linalg.hpp"

#include <random>

using namespace redn;

namespace {
Mat M(std::vector<std::vector<int>> r) {
    Mat m(int(r.size()), int(r[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = r[i][j];
    return m;
}
PolyQ P(std::vector<int> c) {
    std::vector<Rational> q(c.begin(), c.end());
    return PolyQ(q);
}
}  // namespace

TEST_CASE("scalar wire format") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(to_string(parse_rational("-10/4")) == "-5/2");
    CHECK(to_string(parse_rational("7")) == "7");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational(""));
}

TEST_CASE("rref and kernel, small cases") {
    auto id = rref(Mat::identity(4));
    CHECK(id.rank == 4);
    CHECK(id.pivots == std::vector<int>{0, 1, 2, 3});
    CHECK(rank(Mat(3, 5)) == 0);
    CHECK(rank(M({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}})) == 2);

    CHECK(kernel_basis(Mat::identity(3)).rows() == 0);
    CHECK(kernel_basis(Mat(2, 3)).rows() == 3);
    auto k = kernel_basis(M({{1, 1, 0}, {0, 1, 1}}));
    REQUIRE(k.rows() == 1);
    // proportional to (1,-1,1)
    CHECK(k(0, 0) == -k(0, 1));
    CHECK(k(0, 0) == k(0, 2));
    CHECK(!is_zero(k(0, 0)));
}

TEST_CASE("rank-nullity and rref idempotence on random rational matrices") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> small(-3, 3), dim(1, 7);
    for (int trial = 0; trial < 500; ++trial) {
        int r = dim(rng), c = dim(rng);
        Mat m(r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (rng() % 3) m(i, j) = frac(small(rng), 1 + rng() % 4);
        // occasionally force dependent rows
        if (r > 2 && trial % 4 == 0)
            for (int j = 0; j < c; ++j) m(r - 1, j) = m(0, j) * 2 - m(1, j);
        auto rr = rref(m);
        auto k = kernel_basis(m);
        CHECK(rr.rank + k.rows() == c);
        CHECK((m * k.transpose()).is_zero_matrix());
        CHECK(rref(rr.reduced).reduced == rr.reduced);
    }
}

TEST_CASE("determinant and inverse") {
    Mat a = M({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    CHECK(det(a) == 18);   // 2(12-1) - 1(4-0)
    CHECK(inverse(a) * a == Mat::identity(3));
    CHECK(det(M({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("charpoly and minpoly") {
    Mat d(4, 4);
    d(0, 0) = 1; d(1, 1) = 2; d(2, 2) = 3; d(3, 3) = -6;
    PolyQ expect = P({-1, 1}) * P({-2, 1}) * P({-3, 1}) * P({6, 1});
    CHECK(charpoly(d) == expect);
    CHECK(minpoly(d) == expect);

    Mat j(4, 4);
    j(0, 1) = 1; j(1, 2) = 1; j(2, 3) = 1;
    CHECK(charpoly(j) == PolyQ::monomial(1, 4));
    CHECK(minpoly(j) == PolyQ::monomial(1, 4));

    Mat two(4, 4);
    two(0, 1) = 1; two(2, 3) = 1;
    CHECK(charpoly(two) == PolyQ::monomial(1, 4));
    CHECK(minpoly(two) == PolyQ::monomial(1, 2));
}

TEST_CASE("charpoly and minpoly are conjugation invariant, minpoly divides charpoly") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int trial = 0; trial < 30; ++trial) {
        Mat x(4, 4), g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) { x(i, k) = small(rng); g(i, k) = small(rng); }
        if (trial % 3 == 0) { x = Mat(4, 4); x(0, 1) = 1; x(1, 1) = 2; x(2, 2) = 2; x(3, 3) = small(rng); }
        if (is_zero(det(g))) continue;
        Mat y = inverse(g) * x * g;
        CHECK(charpoly(x) == charpoly(y));
        CHECK(minpoly(x) == minpoly(y));
        CHECK(PolyQ::divmod(charpoly(x), minpoly(x)).second.zero());
        CHECK(eval_poly_at(minpoly(x), x).is_zero_matrix());
    }
}

TEST_CASE("multiplicity partition via gcd tower") {
    CHECK(multiplicity_partition(P({-1, 1}) * P({-1, 1}) * P({-2, 1})) == std::vector<int>{2, 1});
    CHECK(multiplicity_partition(PolyQ::monomial(1, 4)) == std::vector<int>{4});
    CHECK(multiplicity_partition(P({1, 1, 0, 0, 1})) == std::vector<int>{1, 1, 1, 1});
    CHECK(multiplicity_partition(PolyQ(Rational(3))).empty());
    PolyQ f = P({1, 0, 1}) * P({1, 0, 1}) * P({0, 1}) * P({0, 1}) * P({0, 1});
    auto parts = multiplicity_partition(f);
    CHECK(parts == std::vector<int>{3, 2, 2});
    int s = 0;
    for (int p : parts) s += p;
    CHECK(s == f.degree());
    auto layers = squarefree_layers(f);
    REQUIRE(layers.size() == 3);
    CHECK(layers[0].degree() == 0);
    CHECK(layers[1] == P({1, 0, 1}));
    CHECK(layers[2] == P({0, 1}));
}

TEST_CASE("rational functions") {
    RatFunc t = RatFunc::t();
    RatFunc a = (t * t + t) / (t * t * t);       // (t+1)/t^2
    CHECK(a.valuation() == -2);
    CHECK(a.den() == PolyQ::monomial(1, 2));
    RatFunc b = t * t * t / (t + RatFunc(Rational(1)));
    CHECK(b.valuation() == 3);
    CHECK((a * b).valuation() == a.valuation() + b.valuation());
    CHECK((a * b) == t);
    CHECK(a.eval(Rational(2)) == frac(3, 4));
    CHECK((a - a).zero());
    CHECK(a.leading_at_zero() == 1);
}

TEST_CASE("polynomial division and gcd") {
    PolyQ f = P({-1, 0, 1}), g = P({1, 1});
    auto [q, r] = PolyQ::divmod(f, g);
    CHECK(q == P({-1, 1}));
    CHECK(r.zero());
    CHECK(PolyQ::gcd(f, P({-1, 1}) * P({2, 1})) == P({-1, 1}));
    CHECK(P({0, 0, 3, 1}).shift_down(2) == P({3, 1}));
}

TEST_CASE("rank mod p agrees with exact rank on integer matrices") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int r = 2 + rng() % 6, c = 2 + rng() % 6;
        Mat m(r, c);
        std::vector<std::uint64_t> v(std::size_t(r) * c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int x = int(rng() % 7) - 3;
                if (i == r - 1 && trial % 2) x = 0;
                m(i, j) = x;
            }
        if (r > 2 && trial % 3 == 0)
            for (int j = 0; j < c; ++j) m(2, j) = m(0, j) + m(1, j);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) v[std::size_t(i) * c + j] = to_mod_p(m(i, j).get_num());
        CHECK(rank_mod_p(v, r, c) == rank(m));
    }
}
