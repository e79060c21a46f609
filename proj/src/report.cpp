#include "redn/report.hpp"
#include "redn/bb.hpp"
#include "redn/exterior.hpp"
#include "redn/orbits.hpp"
#include "redn/tangent.hpp"

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>

namespace redn {

namespace {

template <class T>
std::string join(const std::vector<T>& v) {
    std::ostringstream o;
    o << '(';
    for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
    o << ')';
    return o.str();
}

Mat random_invertible(std::mt19937& rng, int n) {
    Mat g(n, n);
    do {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = int(rng() % 7) - 3;
    } while (is_zero(det(g)));
    return g;
}

Mat random_traceless(std::mt19937& rng, int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = int(rng() % 3) - 1;
    return project_sl(m);
}

std::vector<Mat> cartan(int n) {
    std::vector<Mat> x;
    for (int i = 0; i + 1 < n; ++i) x.push_back(E(n, i, i) - E(n, i + 1, i + 1));
    return x;
}

LieSubspace bound_rep(int n) {
    std::vector<Mat> x{project_sl(E(n, 0, 1)), project_sl(E(n, 0, 0) + E(n, 1, 1))};
    for (int k = 2; k + 1 < n; ++k) x.push_back(project_sl(E(n, k, k)));
    return LieSubspace(n, x);
}

LieSubspace min2_rep(int n) {
    std::vector<Mat> x;
    for (int i = 0; i + 1 < n; ++i) x.push_back(E(n, i, n - 1));
    return LieSubspace(n, x);
}

struct Context {
    int jobs = 1;
    std::vector<FixedPoint> pts;
    const std::vector<FixedPoint>& fixed() {
        if (pts.empty()) pts = fixed_point_data(jobs);
        return pts;
    }
};

using Check = std::function<void(CheckResult&, Context&)>;

void c01(CheckResult& r, Context&) {
    int d = theta_kernel_dim(4);
    r.computed = std::to_string(d);
    r.target = "245";
    r.pass = d == 245;
}

void c02(CheckResult& r, Context& ctx) {
    T4Report t = t4_rank(600, ctx.jobs);
    r.computed = "symbolic " + std::to_string(t.symbolic_rank) + ", certified mod-p " +
                 std::to_string(t.eval_rank_mod_p) + " on " + std::to_string(t.eval_points) + " points";
    r.target = "245";
    r.pass = t.symbolic_rank == 245 && t.eval_rank_mod_p == 245;
}

void c03(CheckResult& r, Context&) {
    std::mt19937 rng(20240);
    int ok = 0, total = 0;
    for (OrbitLabel l : all_labels()) {
        LieSubspace a = representative(l);
        ok += classify_orbit(a) == l;
        ++total;
        for (int k = 0; k < 20; ++k) {
            Mat g = random_invertible(rng, 4);
            ok += classify_orbit(a.conjugate(g, inverse(g))) == l;
            ++total;
        }
    }
    r.computed = std::to_string(ok) + "/" + std::to_string(total);
    r.target = "294/294 (14 representatives + 280 conjugates)";
    r.pass = ok == total && total == 294;
}

void c04(CheckResult& r, Context&) {
    std::vector<int> got, want;
    for (OrbitLabel l : all_labels()) {
        got.push_back(orbit_dimension(representative(l)));
        want.push_back(label_dimension(l));
    }
    r.computed = join(got);
    r.target = join(want);
    r.pass = got == want;
}

void c05(CheckResult& r, Context&) {
    std::vector<int> got{tangent_space_ab(bound_rep(4)).dim(), tangent_space_ab(min2_rep(4)).dim(),
                         tangent_space_ab(representative(OrbitLabel::O6)).dim(), tangent_space_ab(bound_rep(5)).dim(),
                         tangent_space_ab(min2_rep(5)).dim()};
    std::vector<int> want{12, 18, 12, 20, 40};
    r.computed = join(got) + " [O_bound, O''_min, O6 at n=4; O_bound, O''_min at n=5]";
    r.target = join(want);
    r.pass = got == want;
}

void c06(CheckResult& r, Context&) {
    std::vector<Rational> t;
    {
        Mat rows(0, sl_dim(4));
        for (auto& h : cartan(4)) rows.append_row(sl_coords(h));
        t = wedge_rows(rows);
    }
    MPoly x0 = MPoly::var(0), x1 = MPoly::var(1), x2 = MPoly::var(2);
    std::vector<MPoly> xs{x0, x1, x2, -(x0 + x1 + x2)};
    MPoly vdm(Rational(1));
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) vdm = vdm * (xs[i] - xs[j]);
    bool ident = t_n_on_diagonal(4, t) == -vdm;
    std::mt19937 rng(31);
    int vanish = 0;
    for (int k = 0; k < 50; ++k) {
        Mat g = random_invertible(rng, 4);
        LieSubspace a = LieSubspace(4, cartan(4)).conjugate(g, inverse(g));
        Mat x = a.generic_combination({Rational(1), Rational(-2), Rational(5)});
        vanish += is_zero(t_n_twisted_eval(a, x));
    }
    r.computed = std::string(ident ? "t4(t) = -prod(x_i - x_j) symbolically" : "identity fails") + "; t'4 = 0 on " +
                 std::to_string(vanish) + "/50 conjugated Cartans";
    r.target = "identity holds; 50/50";
    r.pass = ident && vanish == 50;
}

void c07(CheckResult& r, Context&) {
    DiagramReport d = diagram_identities(4);
    r.computed = std::string("rho.j=id ") + (d.rho_j ? "yes" : "no") + ", beta.alpha=id " + (d.beta_alpha ? "yes" : "no") +
                 ", pi.i=(1/4)id " + (d.pi_i ? "yes" : "no") + " on " + std::to_string(d.inputs_checked) + " inputs";
    r.target = "all three";
    r.pass = d.rho_j && d.beta_alpha && d.pi_i;
}

void c08(CheckResult& r, Context&) {
    Rational qb = killing_quadric(bound_rep(4).basis());
    Rational qc = killing_quadric(cartan(4));
    FirstOrder fo = killing_first_order(4);
    BoundParams P = bound_params(4);
    bool lin = fo.constant == 0;
    for (int p = 0; p < P.count(); ++p) lin = lin && fo.linear[p] == (p == P.nu() ? Rational(4) : Rational(0));
    r.computed = "Q(O_bound) = " + to_string(qb) + ", Q(Cartan) = " + to_string(qc) + ", first order = " +
                 (lin ? "4*nu" : "other");
    r.target = "0, nonzero, 4*nu";
    r.pass = is_zero(qb) && !is_zero(qc) && lin;
}

void c09(CheckResult& r, Context&) {
    auto res = verify_degenerations();
    int ok = 0;
    std::string bad;
    for (auto& a : res) {
        if (a.ok) {
            ++ok;
            continue;
        }
        bad += (bad.empty() ? "" : ", ") + label_name(a.from) + "->" + label_name(a.to) + " gives " + label_name(a.got_limit);
    }
    r.computed = std::to_string(ok) + "/" + std::to_string(res.size()) + (bad.empty() ? "" : " (" + bad + ")");
    r.target = "17/17";
    r.pass = ok == 17 && res.size() == 17;
}

void c10(CheckResult& r, Context&) {
    SecantReport s = secant_planes(representative(OrbitLabel::O12));
    bool dims = true;
    for (auto& p : s.planes) dims = dims && p.centralizer.dim() == 5;
    r.computed = std::to_string(s.planes.size()) + " planes, centralizers dim 5 " + (dims ? "yes" : "no") +
                 ", abelian " + (s.all_abelian ? "yes" : "no") + ", transverse " + (s.transverse ? "yes" : "no");
    r.target = "6 planes, all yes";
    r.pass = s.planes.size() == 6 && dims && s.centralizers_dim_ok && s.all_abelian && s.transverse;
}

void c11(CheckResult& r, Context&) {
    bool eqs = check_cone_eqs(build_B(4)).ok() && check_cone_eqs(build_B(5)).ok() && check_cone_eqs(build_B(6)).ok();
    int s4 = stabilizer_lie_dim(build_B(4)), s5 = stabilizer_lie_dim(build_B(5));
    ConeMapB B = tmap({0, 1, 0, 0, -1, 0}, {0, 0, 1, 0, -1, 0});
    bool mats = true;
    std::mt19937 rng(77);
    for (int k = 0; k < 20; ++k) {
        std::vector<Rational> u(3), v(3);
        for (int i = 0; i < 3; ++i) {
            u[i] = int(rng() % 9) - 4;
            v[i] = int(rng() % 9) - 4;
        }
        Rational s = u[0] + u[1] + u[2];
        Mat want = Mat::from_rows({{3 * u[0], -u[0], -u[0]}, {-u[1], 3 * u[1], -u[1]}, {-u[2], -u[2], 3 * u[2]}}) -
                   Mat::identity(3) * s;
        auto d = [&](int i, int j) -> Rational { return u[i - 1] * v[j - 1] - u[j - 1] * v[i - 1]; };
        Mat delta = Mat::from_rows({{d(1, 2) + d(1, 3), -3 * d(1, 2) + d(1, 3), d(1, 2) - 3 * d(1, 3)},
                                    {3 * d(1, 2) + d(2, 3), -d(1, 2) + d(2, 3), -d(1, 2) - 3 * d(2, 3)},
                                    {3 * d(1, 3) - d(2, 3), 3 * d(2, 3) - d(1, 3), -d(1, 3) - d(2, 3)}});
        mats = mats && B.apply(u) == want && bracket(B.apply(u), B.apply(v)) == delta;
    }
    int rk = rank(tmap_matrix());
    r.computed = std::string("(6)+(9) for n=4,5,6 ") + (eqs ? "yes" : "no") + "; stabilizer dims " + std::to_string(s4) +
                 "," + std::to_string(s5) + "; explicit B(u), [B(u),B(v)] " + (mats ? "match" : "differ") +
                 "; rank T = " + std::to_string(rk);
    r.target = "yes; 0,0; match; 15";
    r.pass = eqs && s4 == 0 && s5 == 0 && mats && rk == 15;
}

void c12(CheckResult& r, Context&) {
    CanonicalOrder c = canonical_vanishing_order(4);
    r.computed = "valuation " + std::to_string(c.valuation) + ", d/dtheta " + (c.theta_identities ? "ok" : "fails") +
                 ", d/dnu " + (c.nu_identity ? "ok" : "fails");
    r.target = "valuation 3, both identities";
    r.pass = c.valuation == 3 && c.theta_identities && c.nu_identity;
}

void c13(CheckResult& r, Context& ctx) {
    auto base = enumerate_fixed_points();
    auto counts = per_orbit_counts(base);
    int lifted = 0;
    for (auto& p : ctx.fixed()) lifted += p.exceptional.has_value();
    int chi = int(ctx.fixed().size());
    std::vector<int> want{1, 12, 12, 0, 0, 0, 12, 12, 0, 0, 0, 24, 4, 4};
    r.computed = std::to_string(base.size()) + " base " + join(counts) + ", " + std::to_string(lifted) +
                 " lifted, chi = " + std::to_string(chi);
    r.target = "81 base " + join(want) + ", 120 lifted, chi = 193";
    r.pass = base.size() == 81 && counts == want && lifted == 120 && chi == 193;
}

void c14(CheckResult& r, Context& ctx) {
    const auto& pts = ctx.fixed();
    std::vector<std::array<long, 4>> ls{choose_lambda(pts), {27, 9, 3, -39}, {5, -2, 7, -10}};
    auto b = betti_numbers(pts, ls[0]);
    bool same = true;
    for (auto& l : ls) same = same && betti_numbers(pts, l) == b;
    std::vector<int> want{1, 3, 9, 15, 23, 29, 33, 29, 23, 15, 9, 3, 1};
    r.computed = join(b) + (same ? ", identical under 3 subgroups" : ", depends on the subgroup");
    r.target = join(want);
    r.pass = same && b == want;
}

void c15(CheckResult& r, Context& ctx) {
    ChowReport c = chow_report(ctx.jobs);
    r.computed = "target " + join(c.target) + ", reconstruction " + join(c.reconstruction) +
                 (c.discrepancy ? " DISCREPANCY" : "");
    r.target = "echo " + join(chow_target());
    r.tolerance = "report";
    r.pass = c.target == std::vector<int>{1, 1, 3, 5, 7, 11, 14, 13, 11, 7, 5, 1, 1} && c.reconstruction.size() == 13;
}

void c16(CheckResult& r, Context& ctx) {
    std::mt19937 rng(16);
    int rn = 0;
    for (int k = 0; k < 500; ++k) {
        int R = 1 + int(rng() % 6), C = 1 + int(rng() % 7);
        Mat m(R, C);
        for (int i = 0; i < R; ++i)
            for (int j = 0; j < C; ++j)
                if (rng() % 3) m(i, j) = frac(long(rng() % 11) - 5, 1 + long(rng() % 4));
        Mat ker = kernel_basis(m);
        bool ok = rank(m) + ker.rows() == C && (m * ker.transpose()).is_zero_matrix();
        auto rr = rref(m);
        ok = ok && rref(rr.reduced).reduced == rr.reduced;
        rn += ok;
    }
    int ab = 0;
    for (int k = 0; k < 500; ++k) {
        std::vector<Mat> b;
        do {
            b.clear();
            if (k % 2 == 0) {
                Mat g = random_invertible(rng, 4), gi = inverse(g);
                LieSubspace rep = representative(all_labels()[(k / 2) % 14]);
                for (auto& h : rep.basis()) b.push_back(gi * h * g);
            } else {
                for (int i = 0; i < 3; ++i) b.push_back(random_traceless(rng, 4));
            }
        } while (LieSubspace::span(4, b).dim() < 3);
        LieSubspace a(4, b);
        ab += ab_membership(a) == pairwise_commute(a);
    }
    int inv = 0;
    for (OrbitLabel l : all_labels()) {
        Mat g = random_invertible(rng, 4);
        inv += classify_orbit(representative(l).conjugate(g, inverse(g))) == classify_orbit(representative(l));
    }
    int zero = 0;
    for (auto& p : ctx.fixed())
        for (auto& w : p.weights) zero += w.zero();
    r.computed = "rank-nullity " + std::to_string(rn) + "/500, membership " + std::to_string(ab) +
                 "/500, invariance " + std::to_string(inv) + "/14, zero weights " + std::to_string(zero) + " at " +
                 std::to_string(ctx.fixed().size()) + " points";
    r.target = "500/500, 500/500, 14/14, 0 at 193";
    r.pass = rn == 500 && ab == 500 && inv == 14 && zero == 0 && ctx.fixed().size() == 193;
}

struct CheckDef {
    const char* name;
    double budget;
    Check run;
};

const std::vector<CheckDef>& check_defs() {
    static const std::vector<CheckDef> s{
        {"dim ker Theta (n=4)", 60, c01},
        {"rank t_4, certified", 600, c02},
        {"classifier on representatives and conjugates", 60, c03},
        {"orbit dimensions", 10, c04},
        {"tangent dimensions", 60, c05},
        {"Vandermonde identity and t'_4 on Cartans", 60, c06},
        {"diagram identities", 10, c07},
        {"Killing quadric", 10, c08},
        {"degeneration arrows", 60, c09},
        {"secant planes", 10, c10},
        {"tangent cone", 60, c11},
        {"canonical order", 60, c12},
        {"fixed points and Euler characteristic", 300, c13},
        {"Betti numbers", 300, c14},
        {"Chow report", 10, c15},
        {"property suites", 300, c16},
    };
    return s;
}

}  // namespace

std::vector<CheckResult> run_acceptance(int jobs, const std::function<void(const CheckResult&)>& on_done) {
    Context ctx;
    ctx.jobs = jobs;
    std::vector<CheckResult> out;
    int id = 0;
    for (auto& s : check_defs()) {
        CheckResult r;
        r.id = ++id;
        r.name = s.name;
        r.budget_seconds = s.budget;
        auto t0 = std::chrono::steady_clock::now();
        try {
            s.run(r, ctx);
        } catch (const std::exception& e) {
            r.pass = false;
            r.computed = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.seconds > r.budget_seconds) r.pass = false;
        if (on_done) on_done(r);
        out.push_back(r);
    }
    return out;
}

std::string format_line(const CheckResult& r) {
    char head[96];
    std::snprintf(head, sizeof head, "%s %2d  %-46s", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str());
    char tail[64];
    std::snprintf(tail, sizeof tail, "  [%s, %.1fs/%.0fs]", r.tolerance.c_str(), r.seconds, r.budget_seconds);
    return std::string(head) + "computed: " + r.computed + " | target: " + r.target + tail;
}

Json report_json(const std::vector<CheckResult>& rs, bool timings) {
    Json checks = Json::array();
    int passed = 0;
    for (auto& r : rs) {
        Json j{{"id", r.id},         {"name", r.name},           {"status", r.pass ? "pass" : "fail"},
               {"computed", r.computed}, {"target", r.target}, {"tolerance", r.tolerance},
               {"budget_seconds", r.budget_seconds}};
        if (timings) j["seconds"] = r.seconds;
        checks.push_back(j);
        passed += r.pass;
    }
    return Json{{"checks", checks}, {"passed", passed}, {"total", int(rs.size())}};
}

}  // namespace redn
