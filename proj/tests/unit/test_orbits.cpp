#include "doctest.h"
#include "redn/exterior.hpp"
#include "redn/orbits.hpp"

#include <random>

using namespace redn;

namespace {
Mat e4(int i, int j) { return E(4, i - 1, j - 1); }
Mat random_invertible(std::mt19937& rng) {
    Mat g(4, 4);
    do {
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = int(rng() % 7) - 3;
    } while (is_zero(det(g)));
    return g;
}
}  // namespace

TEST_CASE("representatives") {
    CHECK(representative(OrbitLabel::O6) == LieSubspace(4, {e4(1, 3), e4(1, 4), e4(2, 4)}));
    CHECK(representative(OrbitLabel::O3p) == LieSubspace(4, {e4(1, 2), e4(1, 3), e4(1, 4)}));
    LieSubspace cartan(4, {e4(1, 1) - e4(2, 2), e4(2, 2) - e4(3, 3), e4(3, 3) - e4(4, 4)});
    CHECK(representative(OrbitLabel::O12) == cartan);
    for (OrbitLabel l : all_labels()) {
        LieSubspace a = representative(l);
        CHECK(a.dim() == 3);
        CHECK(is_traceless_subspace(a));
        CHECK(ab_membership(a));
        CHECK(associative_span_dim(a) <= 4);
        CHECK(parse_label(label_name(l)) == l);
    }
    CHECK_THROWS(parse_label("O5"));
}

TEST_CASE("signatures of selected representatives") {
    OrbitSignature s8 = signature(representative(OrbitLabel::O8));
    CHECK(s8.nilpotent);
    CHECK(s8.jordan == "4:31");
    CHECK(s8.nil_image == 3);
    CHECK(s8.nil_kernel == 1);
    OrbitSignature s7 = signature(representative(OrbitLabel::O7));
    CHECK(s7.det_form_rank == 3);
    CHECK(signature(representative(OrbitLabel::O6)).det_form_rank == 2);
    OrbitSignature s12 = signature(representative(OrbitLabel::O12));
    CHECK(s12.regular);
    CHECK(s12.multiplicities == std::vector<int>{1, 1, 1, 1});
    // nilradical of O8p is the line-image plane span{E12, E13}
    CHECK(nilradical(representative(OrbitLabel::O8p)) == LieSubspace(4, {e4(1, 2), e4(1, 3)}));
}

TEST_CASE("signatures are pairwise distinct") {
    std::vector<std::string> keys;
    for (OrbitLabel l : all_labels()) keys.push_back(signature(representative(l)).key());
    for (std::size_t i = 0; i < keys.size(); ++i)
        for (std::size_t j = i + 1; j < keys.size(); ++j) CHECK(keys[i] != keys[j]);
}

TEST_CASE("classifier on representatives and conjugates") {
    std::mt19937 rng(2024);
    for (OrbitLabel l : all_labels()) {
        LieSubspace a = representative(l);
        CHECK(classify_orbit(a) == l);
        for (int k = 0; k < 20; ++k) {
            Mat g = random_invertible(rng);
            CHECK(classify_orbit(a.conjugate(g, inverse(g))) == l);
        }
    }
}

TEST_CASE("span{E12, E34, E14} is in O6") {
    LieSubspace a(4, {e4(1, 2), e4(3, 4), e4(1, 4)});
    CHECK(classify_orbit(a) == OrbitLabel::O6);
    // swap e2 and e3
    Mat p = e4(1, 1) + e4(2, 3) + e4(3, 2) + e4(4, 4);
    CHECK(a.conjugate(p, p) == representative(OrbitLabel::O6));
}

TEST_CASE("classifier rejects bad input") {
    CHECK_THROWS(classify_orbit(LieSubspace(4, {e4(1, 2), e4(2, 1), e4(1, 1) - e4(2, 2)})));
    CHECK_THROWS(classify_orbit(LieSubspace(4, {e4(1, 2), e4(1, 3)})));
}

TEST_CASE("orbit dimensions match the subscripts") {
    for (OrbitLabel l : all_labels()) CHECK(orbit_dimension(representative(l)) == label_dimension(l));
}

TEST_CASE("degeneration curves") {
    auto res = verify_degenerations();
    CHECK(res.size() == 17);
    int ok = 0;
    for (auto& r : res) {
        CHECK(r.got_start == r.from);
        if (r.ok) ++ok;
        bool from8 = r.from == OrbitLabel::O8p || r.from == OrbitLabel::O8pp;
        if (!(from8 && r.to == OrbitLabel::O7)) CHECK(r.ok);
    }
    CHECK(ok == 15);
    // hand computation of the printed O8p -> O7 substitution: the limit is
    // span{E12, E13, E14}
    for (auto& d : degeneration_curves())
        if (d.from == OrbitLabel::O8p && d.to == OrbitLabel::O7)
            CHECK(limit_subspace(d.curve) == representative(OrbitLabel::O3p));
}

TEST_CASE("secant planes through the diagonal Cartan") {
    SecantReport r = secant_planes(representative(OrbitLabel::O12));
    CHECK(r.planes.size() == 6);
    CHECK(r.centralizers_dim_ok);
    CHECK(r.all_abelian);
    CHECK(r.transverse);
    for (auto& p : r.planes) {
        CHECK(p.centralizer.dim() == 5);
        CHECK(p.samples_abelian == 10);
    }
    const SecantPlane& p01 = r.planes[0];
    CHECK(p01.i == 0);
    CHECK(p01.j == 1);
    CHECK(p01.centralizer.contains(e4(1, 2)));
    CHECK(p01.centralizer.contains(e4(2, 1)));

    std::mt19937 rng(5);
    Mat g = random_invertible(rng);
    SecantReport rc = secant_planes(representative(OrbitLabel::O12).conjugate(g, inverse(g)));
    CHECK(rc.planes.size() == 6);
    CHECK(rc.centralizers_dim_ok);
    CHECK(rc.all_abelian);
    CHECK(rc.transverse);
    CHECK_THROWS(secant_planes(representative(OrbitLabel::O11)));
}
