#include "doctest.h"
#include "redn/bb.hpp"
#include "redn/tangent.hpp"

#include <algorithm>
#include <map>

using namespace redn;

namespace {

using Roots = std::vector<std::pair<int, int>>;

const FixedPoint& find_point(const std::vector<FixedPoint>& pts, Roots S) {
    std::sort(S.begin(), S.end());
    for (auto& p : pts) {
        Roots r = p.roots;
        std::sort(r.begin(), r.end());
        if (r == S && !p.exceptional) return p;
    }
    throw std::runtime_error("point not found");
}

WeightVector permute(const WeightVector& w, const std::array<int, 4>& s) {
    std::array<int, 4> v{};
    for (int i = 0; i < 4; ++i) v[s[i]] = w.w[i];
    return WeightVector(v);
}

std::vector<WeightVector> sorted(std::vector<WeightVector> v) {
    std::sort(v.begin(), v.end());
    return v;
}

Rational poincare_chi_y(const std::vector<int>& b, const Rational& y) {
    Rational s = 0, p = 1;
    for (int x : b) {
        s += x * p;
        p *= -y;
    }
    return s;
}

}  // namespace

TEST_CASE("fixed points of the base") {
    auto pts = enumerate_fixed_points();
    CHECK(pts.size() == 81);
    CHECK(per_orbit_counts(pts) == std::vector<int>{1, 12, 12, 0, 0, 0, 12, 12, 0, 0, 0, 24, 4, 4});
    std::vector<Roots> listed;
    for (auto& p : pts) {
        Roots r = p.roots;
        std::sort(r.begin(), r.end());
        listed.push_back(r);
        CHECK(torus_invariant(p.subspace));
    }
    std::sort(listed.begin(), listed.end());
    CHECK(listed == brute_force_fixed_roots());
    CHECK(find_point(pts, {}).orbit == OrbitLabel::O12);
    CHECK(find_point(pts, {{0, 2}, {0, 3}, {1, 3}}).orbit == OrbitLabel::O6);
    CHECK(find_point(pts, {{0, 1}, {0, 2}, {0, 3}}).orbit == OrbitLabel::O3p);
    CHECK(find_point(pts, {{0, 3}, {1, 3}, {2, 3}}).orbit == OrbitLabel::O3pp);
}

TEST_CASE("tangent weights at base points") {
    auto pts = enumerate_fixed_points();
    std::vector<WeightVector> roots;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (i != j) roots.push_back(root_weight(i, j));
    CHECK(sorted(tangent_weights(find_point(pts, {}))) == sorted(roots));
    auto w6 = tangent_weights(find_point(pts, {{0, 2}, {0, 3}, {1, 3}}));
    CHECK(w6.size() == 12);
    for (auto& w : w6) CHECK(!w.zero());
    // smooth points: the orbit directions sit inside the tangent weights
    for (auto& p : pts) {
        if (p.minimal()) continue;
        auto t = tangent_weights(p);
        auto o = orbit_weights(p);
        CHECK(int(o.size()) == label_dimension(p.orbit));
        std::map<WeightVector, int> m;
        for (auto& w : t) m[w]++;
        for (auto& w : o) CHECK(m[w]-- > 0);
    }
}

TEST_CASE("tangent weights are Weyl equivariant") {
    auto pts = enumerate_fixed_points();
    const std::array<std::array<int, 4>, 3> perms{{{1, 0, 2, 3}, {1, 2, 3, 0}, {3, 2, 1, 0}}};
    for (auto& p : pts) {
        if (p.minimal()) continue;
        for (auto& s : perms) {
            Roots r;
            for (auto [i, j] : p.roots) r.push_back({s[i], s[j]});
            const FixedPoint& q = find_point(pts, r);
            CHECK(q.orbit == p.orbit);
            std::vector<WeightVector> moved;
            for (auto& w : tangent_weights(p)) moved.push_back(permute(w, s));
            CHECK(sorted(moved) == sorted(tangent_weights(q)));
        }
    }
}

TEST_CASE("minimal points and their lifts") {
    auto pts = enumerate_fixed_points();
    int lifted = 0;
    for (auto& p : pts) {
        if (!p.minimal()) {
            CHECK_THROWS(minimal_frame(p));
            continue;
        }
        CHECK(tangent_space_ab(p.subspace).dim() == 18);
        auto raw = raw_tangent_weights(p);
        CHECK(raw.size() == 18);
        CHECK(sorted(raw) == sorted(predicted_minimal_tangent(p)));
        MinimalFrame f = minimal_frame(p);
        CHECK(f.monomial_weights.size() == 6);
        auto lifts = blowup_fixed_points(p);
        CHECK(lifts.size() == 15);
        // orbit part of each lift agrees with the image of ad at the point
        auto o = sorted(orbit_weights(p));
        for (auto& q : lifts) {
            CHECK(q.weights.size() == 12);
            for (auto& w : q.weights) CHECK(!w.zero());
            CHECK(sorted(std::vector<WeightVector>(q.weights.begin(), q.weights.begin() + 3)) == o);
        }
        lifted += int(lifts.size());
        CHECK_THROWS(tangent_weights(p));
    }
    CHECK(lifted == 120);
}

TEST_CASE("Betti numbers and their consistency") {
    auto pts = fixed_point_data(1);
    CHECK(pts.size() == 193);
    auto par = fixed_point_data(4);
    REQUIRE(par.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(par[i].weights == pts[i].weights);

    auto l0 = choose_lambda(pts);
    auto b = betti_numbers(pts, l0);
    int sum = 0;
    for (int x : b) sum += x;
    CHECK(sum == 193);
    CHECK(palindromic(b));
    for (std::array<long, 4> l : {std::array<long, 4>{27, 9, 3, -39}, {5, -2, 7, -10}, {-11, 1, 4, 6}})
        CHECK(betti_numbers(pts, l) == b);
    CHECK_THROWS(betti_numbers(pts, {1, -1, 0, 0}));

    // oracle: the localized chi_y genus is independent of t and equals the
    // Poincare polynomial at -y; the Todd genus (y = 0) is 1
    std::array<long, 4> l{5, -2, 7, -10};
    for (Rational y : {Rational(0), Rational(2), frac(-1, 3)})
        for (Rational t : {Rational(2), frac(3, 7)}) CHECK(localized_chi_y(pts, l, y, t) == poincare_chi_y(b, y));
    CHECK(localized_chi_y(pts, l, 0, 2) == 1);
}

TEST_CASE("Chow report") {
    ChowReport c = chow_report();
    CHECK(c.target == std::vector<int>{1, 1, 3, 5, 7, 11, 14, 13, 11, 7, 5, 1, 1});
    CHECK(c.reconstruction.size() == 13);
    CHECK(c.reconstruction.front() == 1);
    CHECK(c.reconstruction.back() == 1);
    CHECK(c.exceptional_classes == std::vector<int>{1, 2, 4, 6, 8, 9, 9, 8, 6, 4, 2, 1});
    CHECK(c.discrepancy == (c.reconstruction != c.target));
}
