#include "doctest.h"
#include "redn/exterior.hpp"
#include "redn/orbits.hpp"
#include "redn/tangent.hpp"

#include <random>

using namespace redn;

namespace {

// phi_1 = E12, phi_2 = E11 + E22, phi_k = Ekk, projected; the first n-1 span.
LieSubspace bound_rep(int n) {
    std::vector<Mat> x{project_sl(E(n, 0, 1)), project_sl(E(n, 0, 0) + E(n, 1, 1))};
    for (int k = 2; k + 1 < n; ++k) x.push_back(project_sl(E(n, k, k)));
    return LieSubspace(n, x);
}

// matrices with kernel containing and image inside <e_1..e_{n-1}>
LieSubspace min2_rep(int n) {
    std::vector<Mat> x;
    for (int i = 0; i + 1 < n; ++i) x.push_back(E(n, i, n - 1));
    return LieSubspace(n, x);
}

LieSubspace diagonal_cartan(int n) {
    std::vector<Mat> x;
    for (int i = 0; i + 1 < n; ++i) x.push_back(E(n, i, i) - E(n, i + 1, i + 1));
    return LieSubspace(n, x);
}

Mat random_invertible(std::mt19937& rng, int n) {
    Mat g(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = int(rng() % 7) - 3;
    } while (is_zero(det(g)));
    return g;
}

}  // namespace

TEST_CASE("tangent dimensions at special points") {
    CHECK(tangent_space_ab(bound_rep(4)).dim() == 12);
    CHECK(tangent_space_ab(min2_rep(4)).dim() == 18);
    CHECK(tangent_space_ab(representative(OrbitLabel::O6)).dim() == 12);
    CHECK(tangent_space_ab(bound_rep(5)).dim() == 20);
    CHECK(tangent_space_ab(min2_rep(5)).dim() == 40);
    CHECK(tangent_space_ab(diagonal_cartan(5)).dim() == 20);
    CHECK_THROWS(tangent_space_ab(LieSubspace(4, {E(4, 0, 1), E(4, 1, 0), E(4, 2, 3)})));
}

TEST_CASE("tangent dimension does not depend on the complement") {
    std::mt19937 rng(11);
    for (OrbitLabel l : all_labels()) {
        LieSubspace a = representative(l);
        std::vector<Mat> piv = pivot_complement(a), shifted;
        // third complement: pivot complement moved by random elements of a
        for (auto& c : piv) {
            Mat s = c;
            for (auto& x : a.basis()) s += x * Rational(int(rng() % 5) - 2);
            shifted.push_back(s);
        }
        int d = tangent_space_ab(a, piv).dim();
        CHECK(tangent_space_ab(a, shifted).dim() == d);
        auto k = killing_complement(a);
        if (!k.empty()) CHECK(tangent_space_ab(a, k).dim() == d);
    }
    CHECK(killing_complement(diagonal_cartan(4)).size() == 12);
    CHECK(killing_complement(representative(OrbitLabel::O6)).empty());
    CHECK_THROWS(tangent_space_ab(representative(OrbitLabel::O6), ComplementKind::Killing));
}

TEST_CASE("tangent dimensions on all orbits, conjugation invariant") {
    std::mt19937 rng(5);
    for (OrbitLabel l : all_labels()) {
        bool minimal = l == OrbitLabel::O3p || l == OrbitLabel::O3pp;
        LieSubspace a = representative(l);
        CHECK(tangent_space_ab(a).dim() == (minimal ? 18 : 12));
        for (int r = 0; r < 3; ++r) {
            Mat g = random_invertible(rng, 4);
            CHECK(tangent_space_ab(a.conjugate(g, inverse(g))).dim() == (minimal ? 18 : 12));
        }
    }
}

TEST_CASE("sigma fibre tangents") {
    LieSubspace h = diagonal_cartan(4);
    CHECK(sigma_fiber_tangent(diag({1, 2, 3, -6}), h) == 0);
    CHECK(sigma_fiber_tangent(diag({1, 1, 2, -4}), h) == 2);
    CHECK(sigma_fiber_tangent(diag({1, 1, 1, -3}), h) == 6);
    Mat x = E(4, 0, 1) + E(4, 1, 2) + E(4, 2, 3);
    CHECK(sigma_fiber_tangent(x, centralizer(x, true)) == 0);
    CHECK_THROWS(sigma_fiber_tangent(E(4, 0, 1), h));
}

TEST_CASE("displayed first-order deformations at O_bound") {
    CHECK(bound_params(4).count() == 12);
    CHECK(bound_psi_spans_tangent(4));
    CHECK(bound_psi_spans_tangent(5));
    BoundFamily f = bound_family(4);
    // sum of psi_2..psi_n is the identity at every parameter value
    for (int p = 0; p < 12; ++p) {
        Mat d(4, 4);
        for (int k = 1; k < 4; ++k)
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) d(i, j) += f.d[p][k](i, j).eval(0);
        CHECK(d.is_zero_matrix());
    }
}

TEST_CASE("Killing determinant to first order") {
    FirstOrder fo = killing_first_order(4);
    CHECK(fo.constant == 0);
    BoundParams P = bound_params(4);
    for (int p = 0; p < P.count(); ++p) CHECK(fo.linear[p] == (p == P.nu() ? Rational(4) : Rational(0)));
    // oracle: det(trace(psi_i psi_j)) at nu = s with other parameters 0 is
    // a polynomial in s; its linear coefficient by finite differences
    BoundFamily f = bound_family(4);
    auto q = [&](const Rational& s) {
        std::vector<Mat> psi;
        for (int i = 0; i < 4; ++i) {
            Mat m(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c) m(r, c) = f.at_zero[i](r, c).eval(0) + s * f.d[P.nu()][i](r, c).eval(0);
            psi.push_back(m);
        }
        Mat g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = trace_form(psi[i], psi[j]);
        return det(g);
    };
    // q(s) = 4 s exactly, since psi_1 psi_1 is the only s-dependent product
    CHECK(q(0) == 0);
    CHECK(q(1) == 4);
    CHECK(q(3) == 12);
}

TEST_CASE("vanishing order along O_bound") {
    CanonicalOrder c = canonical_vanishing_order(4);
    CHECK(c.valuation == 3);
    CHECK(c.theta_identities);
    CHECK(c.mu_identity);
    CHECK(c.nu_identity);
    CHECK(c.tangent_dim_generic == 12);
    CHECK(c.tangent_dim_zero == 12);
}

TEST_CASE("cone map B and its equations") {
    for (int n = 4; n <= 6; ++n) {
        ConeMapB B = build_B(n);
        ConeCheck c = check_cone_eqs(B);
        CHECK(c.ok());
        CHECK(!c.witness);
        int m = n - 1;
        // [B(e_i), B(e_j)] w = w_{n-i} e_j - w_{n-j} e_i (1-based)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                Mat C = B.b[i - 1] * B.b[j - 1] - B.b[j - 1] * B.b[i - 1];
                for (int w = 1; w <= m; ++w) {
                    std::vector<Rational> want(m, Rational(0));
                    if (w == n - i) want[j - 1] += 1;
                    if (w == n - j) want[i - 1] -= 1;
                    for (int s = 0; s < m; ++s) CHECK(C(s, w - 1) == want[s]);
                }
            }
    }
    CHECK(stabilizer_lie_dim(build_B(4)) == 0);
    CHECK(stabilizer_lie_dim(build_B(5)) == 0);
    CHECK(stabilizer_lie_dim(build_B(6)) == 0);
    CHECK(stabilizer_lie_dim(pure_trace_B(4)) > 0);
    CHECK(stabilizer_lie_dim(pure_trace_B(5)) > 0);
}

TEST_CASE("random symmetric traceless B fails the quadrics") {
    std::mt19937 rng(3);
    int m = 3, fails = 0;
    for (int trial = 0; trial < 10; ++trial) {
        ConeMapB B;
        B.n = 4;
        B.b.assign(m, Mat(m, m));
        for (int i = 0; i < m; ++i)
            for (int k = i; k < m; ++k)
                for (int s = 0; s < m; ++s) {
                    Rational v = int(rng() % 5) - 2;
                    B.b[i](s, k) = v;
                    B.b[k](s, i) = v;
                }
        for (int i = 0; i < m; ++i) {
            Rational t = B.b[i].trace() - B.b[i](m - 1, m - 1);
            B.b[i](m - 1, m - 1) = -t;
            B.b[m - 1](m - 1, i) = -t;
        }
        ConeCheck c = check_cone_eqs(B);
        CHECK(c.symmetric);
        CHECK(c.traceless);
        if (!c.quadrics) {
            ++fails;
            CHECK(c.witness.has_value());
            CHECK(c.witness->size() == 5);
        }
    }
    CHECK(fails > 0);
}

TEST_CASE("pencil map") {
    // (x - z) y and (x - y) z on x1^2, x1x2, x1x3, x2^2, x2x3, x3^2
    ConeMapB B = tmap({0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, -1, 0});
    std::mt19937 rng(9);
    for (int r = 0; r < 10; ++r) {
        std::vector<Rational> u(3), v(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = int(rng() % 9) - 4;
            v[i] = int(rng() % 9) - 4;
        }
        Rational s = u[0] + u[1] + u[2];
        Mat want = Mat::from_rows({{3 * u[0], -u[0], -u[0]}, {-u[1], 3 * u[1], -u[1]}, {-u[2], -u[2], 3 * u[2]}}) -
                   Mat::identity(3) * s;
        CHECK(B.apply(u) == want);
        auto d = [&](int i, int j) -> Rational { return u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]; };
        Mat delta = Mat::from_rows({{d(1, 2) + d(1, 3), -3 * d(1, 2) + d(1, 3), d(1, 2) - 3 * d(1, 3)},
                                    {3 * d(1, 2) + d(2, 3), -d(1, 2) + d(2, 3), -d(1, 2) - 3 * d(2, 3)},
                                    {3 * d(1, 3) - d(2, 3), 3 * d(2, 3) - d(1, 3), -d(1, 3) - d(2, 3)}});
        Mat C = bracket(B.apply(u), B.apply(v));
        CHECK(C == delta);
        // image inside <u, v>
        Mat uv = Mat::from_rows({u, v});
        Mat all = uv;
        for (int c = 0; c < 3; ++c) all.append_row({C(0, c), C(1, c), C(2, c)});
        CHECK(rank(all) == rank(uv));
    }
    CHECK(check_cone_eqs(B).ok());
    for (int r = 0; r < 20; ++r) {
        std::vector<Rational> q1(6), q2(6);
        for (int i = 0; i < 6; ++i) {
            q1[i] = int(rng() % 7) - 3;
            q2[i] = int(rng() % 7) - 3;
        }
        CHECK(check_cone_eqs(tmap(q1, q2)).ok());
    }
    Mat T = tmap_matrix();
    CHECK(T.rows() == 15);
    CHECK(T.cols() == 18);
    CHECK(rank(T) == 15);
    CHECK_THROWS(tmap({1, 0}, {0, 1}));
}
