#include "doctest.h"
#include "redn/grassmann.hpp"

using namespace redn;

namespace {
Mat rows(std::vector<std::vector<int>> r) {
    Mat m(int(r.size()), int(r[0].size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m(i, j) = r[i][j];
    return m;
}
RatFunc T() { return RatFunc::t(); }
}  // namespace

TEST_CASE("colex order and ranking") {
    auto s = colex_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s[0] == std::vector<int>{0, 1});
    CHECK(s[1] == std::vector<int>{0, 2});
    CHECK(s[2] == std::vector<int>{1, 2});
    CHECK(s[3] == std::vector<int>{0, 3});
    CHECK(s[5] == std::vector<int>{2, 3});
    auto big = colex_subsets(15, 3);
    CHECK(big.size() == 455);
    for (std::size_t i = 0; i < big.size(); ++i) CHECK(colex_rank(big[i]) == long(i));
}

TEST_CASE("Pluecker coordinates") {
    auto p = plucker_rows(rows({{1, 0, 0, 0}, {0, 1, 0, 0}}));
    for (std::size_t i = 0; i < p.coords.size(); ++i) CHECK(p.coords[i] == (i == 0 ? 1 : 0));

    auto q = plucker_rows(rows({{1, 0, 1, 0}, {0, 1, 0, 0}}));
    CHECK(q.at({0, 1}) == 1);
    CHECK(q.at({1, 2}) == -1);
    CHECK(q.at({2, 1}) == 1);
    int nonzero = 0;
    for (auto& c : q.coords) nonzero += !is_zero(c);
    CHECK(nonzero == 2);

    auto r = plucker_rows(rows({{2, 1, 2, 0}, {1, 1, 1, 0}}));   // invertible change of basis
    CHECK(q.projectively_equal(r));
    CHECK(LieSubspace::span(2, {}).dim() == 0);

    Mat back = rows_from_plucker(r);
    CHECK(rank(back) == 2);
    CHECK(plucker_rows(back).projectively_equal(q));
}

TEST_CASE("limits of constant and conjugated curves") {
    LieSubspace cartan(4, {E(4, 0, 0) - E(4, 1, 1), E(4, 1, 1) - E(4, 2, 2), E(4, 2, 2) - E(4, 3, 3)});
    CurveSubspace c;
    c.n = 4;
    for (auto& x : cartan.basis()) c.basis.push_back(to_polymat(x));
    CHECK(limit_subspace(c) == cartan);

    // diagonal algebra in the basis e1, e1+t e2, e1+t e3, e1+t e4
    PolyMat g = to_polymat(Mat::identity(4));
    for (int k = 1; k < 4; ++k) { g(0, k) = RatFunc(Rational(1)); g(k, k) = T(); }
    PolyMat gi = inverse(g);
    CHECK(g * gi == to_polymat(Mat::identity(4)));
    // x -> g x g^-1 is conjugate_curve with the roles of g, g^-1 swapped
    CurveSubspace d = conjugate_curve(cartan, gi, g);
    LieSubspace lim = limit_subspace(d);
    CHECK(lim == LieSubspace(4, {E(4, 0, 1), E(4, 0, 2), E(4, 0, 3)}));

    // limits commute with a fixed t-independent change of basis
    Mat h = Mat::identity(4);
    h(0, 2) = 3; h(3, 1) = -1;
    Mat hi = inverse(h);
    CurveSubspace dh = d;
    for (auto& x : dh.basis) x = to_polymat(hi) * x * to_polymat(h);
    CHECK(limit_subspace(dh) == lim.conjugate(h, hi));
}

TEST_CASE("torus invariance") {
    LieSubspace cartan(4, {E(4, 0, 0) - E(4, 1, 1), E(4, 1, 1) - E(4, 2, 2), E(4, 2, 2) - E(4, 3, 3)});
    CHECK(torus_invariant(cartan));
    CHECK(torus_invariant(LieSubspace(4, {E(4, 0, 1), E(4, 0, 2), E(4, 0, 3)})));
    CHECK(!torus_invariant(LieSubspace(4, {E(4, 0, 1) + E(4, 0, 2), E(4, 0, 0) - E(4, 1, 1), E(4, 2, 2) - E(4, 3, 3)})));
}
