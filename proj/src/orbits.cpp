#include "redn/orbits.hpp"
#include "redn/tangent.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace redn {

namespace {

const char* kNames[] = {"O12", "O11", "O10p", "O10pp", "O9", "O8", "O8p",
                        "O8pp", "O7p", "O7pp", "O7", "O6", "O3p", "O3pp"};
const int kDims[] = {12, 11, 10, 10, 9, 8, 8, 8, 7, 7, 7, 6, 3, 3};

Mat e4(int i, int j) { return E(4, i - 1, j - 1); }   // 1-based, as in the tables

LieSubspace span_sl(const std::vector<Mat>& gens) {
    std::vector<Mat> p;
    for (auto& g : gens) p.push_back(project_sl(g));
    return LieSubspace::span(4, p);
}

Rational coef(int s, int i) {
    int v = ((7 * s + 3) * (i + 1) * (i + 1) + 5 * s + i) % 13 - 6;
    return v == 0 ? 7 : v;
}

Mat power(const Mat& x, int k) {
    Mat r = Mat::identity(x.rows());
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

LieSubspace intersect(const LieSubspace& u, const LieSubspace& v) {
    int n = u.n(), N = n * n, p = u.dim(), q = v.dim();
    Mat m(N, p + q);
    for (int i = 0; i < p; ++i)
        for (int e = 0; e < N; ++e) m(e, i) = u.basis()[i].data()[e];
    for (int j = 0; j < q; ++j)
        for (int e = 0; e < N; ++e) m(e, p + j) = -v.basis()[j].data()[e];
    Mat k = kernel_basis(m);
    std::vector<Mat> out;
    for (int r = 0; r < k.rows(); ++r) {
        Mat x(n, n);
        for (int i = 0; i < p; ++i) x += u.basis()[i] * k(r, i);
        out.push_back(x);
    }
    return LieSubspace::span(n, out);
}

LieSubspace trace_radical(const std::vector<Mat>& b, int n) {
    int k = int(b.size());
    Mat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g(i, j) = trace_form(b[i], b[j]);
    Mat ker = kernel_basis(g);
    std::vector<Mat> out;
    for (int r = 0; r < ker.rows(); ++r) {
        Mat x(n, n);
        for (int i = 0; i < k; ++i) x += b[i] * ker(r, i);
        out.push_back(x);
    }
    return LieSubspace::span(n, out);
}

std::vector<Mat> associative_closure(const LieSubspace& a) {
    int n = a.n();
    std::vector<Mat> gens{Mat::identity(n)};
    for (auto& b : a.basis()) gens.push_back(b);
    LieSubspace s = LieSubspace::span(n, gens);
    while (true) {
        std::vector<Mat> g = s.basis();
        for (auto& x : s.basis())
            for (auto& y : a.basis()) g.push_back(x * y);
        LieSubspace t = LieSubspace::span(n, g);
        if (t.dim() == s.dim()) return s.basis();
        s = t;
    }
}

void check_abelian(const LieSubspace& a, const char* who) {
    if (!is_traceless_subspace(a)) throw std::invalid_argument(std::string(who) + ": subspace is not traceless");
    if (!pairwise_commute(a)) throw std::invalid_argument(std::string(who) + ": subspace is not abelian");
    if (a.dim() != a.n() - 1) throw std::invalid_argument(std::string(who) + ": dimension is not n-1");
}

// Rank of the quadratic form det on a square-zero algebra with image and
// common kernel the same plane P, read as Hom(C^4/P, P).
int det_form_rank(const LieSubspace& a, const Mat& kernel_rows) {
    int n = a.n();
    // complement: standard basis vectors outside P
    Mat P = kernel_rows;
    std::vector<int> comp;
    for (int e = 0; e < n && int(comp.size()) < n - P.rows(); ++e) {
        Mat t = P;
        std::vector<Rational> v(n, Rational(0));
        v[e] = 1;
        t.append_row(v);
        for (int c : comp) {
            std::vector<Rational> w(n, Rational(0));
            w[c] = 1;
            t.append_row(w);
        }
        if (rank(t) == t.rows()) comp.push_back(e);
    }
    int k = a.dim();
    std::vector<Mat> blocks;
    for (auto& x : a.basis()) {
        Mat m(P.rows(), int(comp.size()));
        for (std::size_t s = 0; s < comp.size(); ++s) {
            std::vector<Rational> col(n), c;
            for (int i = 0; i < n; ++i) col[i] = x(i, comp[s]);
            if (!solve_in_rowspace(P, col, c))
                throw std::logic_error("det_form_rank: image not in the common plane");
            for (int r = 0; r < P.rows(); ++r) m(r, int(s)) = c[r];
        }
        blocks.push_back(m);
    }
    Mat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g(i, j) = (det(blocks[i] + blocks[j]) - det(blocks[i]) - det(blocks[j])) / 2;
    return rank(g);
}

// Oracle run on the fourteen representatives, frozen.
const std::map<std::string, OrbitLabel>& signature_table() {
    static const std::map<std::string, OrbitLabel> t = {
#include "signature_table.inc"
    };
    return t;
}

}  // namespace

const std::vector<OrbitLabel>& all_labels() {
    static const std::vector<OrbitLabel> v = {
        OrbitLabel::O12, OrbitLabel::O11, OrbitLabel::O10p, OrbitLabel::O10pp, OrbitLabel::O9,
        OrbitLabel::O8, OrbitLabel::O8p, OrbitLabel::O8pp, OrbitLabel::O7p, OrbitLabel::O7pp,
        OrbitLabel::O7, OrbitLabel::O6, OrbitLabel::O3p, OrbitLabel::O3pp};
    return v;
}

std::string label_name(OrbitLabel l) { return kNames[int(l)]; }

OrbitLabel parse_label(const std::string& s) {
    for (int i = 0; i < 14; ++i)
        if (s == kNames[i]) return OrbitLabel(i);
    throw std::invalid_argument("unknown orbit label '" + s + "'");
}

int label_dimension(OrbitLabel l) { return kDims[int(l)]; }

LieSubspace representative(OrbitLabel l) {
    Mat I3 = e4(1, 1) + e4(2, 2) + e4(3, 3);
    switch (l) {
    case OrbitLabel::O12: return span_sl({e4(1, 1), e4(2, 2), e4(3, 3), e4(4, 4)});
    case OrbitLabel::O11: return span_sl({e4(1, 1) + e4(2, 2), e4(1, 2), e4(3, 3), e4(4, 4)});
    case OrbitLabel::O10p: return span_sl({e4(1, 1) + e4(2, 2), e4(1, 2), e4(3, 3) + e4(4, 4), e4(3, 4)});
    case OrbitLabel::O10pp: return span_sl({I3, e4(1, 2) + e4(2, 3), e4(1, 3), e4(4, 4)});
    case OrbitLabel::O9: return span_sl({e4(1, 2) + e4(2, 3) + e4(3, 4), e4(1, 3) + e4(2, 4), e4(1, 4)});
    case OrbitLabel::O8: return span_sl({e4(1, 2) + e4(2, 4), e4(1, 3) + e4(3, 4), e4(1, 4)});
    case OrbitLabel::O8p: return span_sl({I3, e4(1, 2), e4(1, 3), e4(4, 4)});
    case OrbitLabel::O8pp: return span_sl({I3, e4(1, 3), e4(2, 3), e4(4, 4)});
    case OrbitLabel::O7p: return span_sl({e4(1, 2) + e4(2, 4), e4(1, 3), e4(1, 4)});
    case OrbitLabel::O7pp: return span_sl({e4(1, 3) + e4(3, 4), e4(2, 4), e4(1, 4)});
    case OrbitLabel::O7: return span_sl({e4(1, 3), e4(1, 4) + e4(2, 3), e4(2, 4)});
    case OrbitLabel::O6: return span_sl({e4(1, 3), e4(1, 4), e4(2, 4)});
    case OrbitLabel::O3p: return span_sl({e4(1, 2), e4(1, 3), e4(1, 4)});
    case OrbitLabel::O3pp: return span_sl({e4(1, 4), e4(2, 4), e4(3, 4)});
    }
    throw std::logic_error("representative: bad label");
}

std::string OrbitSignature::key() const {
    std::ostringstream s;
    s << (regular ? "reg" : "nonreg") << ";" << (nilpotent ? "nil" : "nonnil") << ";m=";
    for (std::size_t i = 0; i < multiplicities.size(); ++i) s << (i ? "," : "") << multiplicities[i];
    s << ";j=" << jordan << ";im=" << nil_image << ";ker=" << nil_kernel
      << ";det=" << det_form_rank << ";rk=" << generic_rank;
    return s.str();
}

Mat generic_element(const LieSubspace& a) {
    Mat best;
    int best_c = 0, best_r = 0;
    std::vector<int> best_m;
    for (int s = 0; s < 8; ++s) {
        std::vector<Rational> c;
        for (int i = 0; i < a.dim(); ++i) c.push_back(coef(s, i));
        Mat x = a.generic_combination(c);
        int cd = centralizer(x, false).dim(), rk = rank(x);
        auto m = multiplicity_partition(charpoly(x));
        bool better = s == 0 || cd < best_c || (cd == best_c && rk > best_r) ||
                      (cd == best_c && rk == best_r && m < best_m);
        if (better) { best = x; best_c = cd; best_r = rk; best_m = m; }
    }
    return best;
}

LieSubspace nilradical(const LieSubspace& a) {
    int n = a.n();
    LieSubspace rad = trace_radical(a.basis(), n);
    bool ok = true;
    for (auto& x : rad.basis())
        if (!power(x, n).is_zero_matrix()) ok = false;
    if (ok && rad.dim() < a.dim()) {
        // complement element: basis vectors of a extending rad
        std::vector<Mat> g = rad.basis(), comp;
        for (auto& b : a.basis()) {
            std::vector<Mat> t = g;
            t.push_back(b);
            if (LieSubspace::span(n, t).dim() > int(g.size())) { g = t; comp.push_back(b); }
        }
        Mat y(n, n);
        for (std::size_t i = 0; i < comp.size(); ++i) y += comp[i] * coef(int(i), 1);
        if (power(y, n).is_zero_matrix()) ok = false;
    }
    if (ok) return rad;
    // radical of the trace form on the commutative associative closure
    LieSubspace arad = trace_radical(associative_closure(a), n);
    return intersect(a, arad);
}

OrbitSignature signature(const LieSubspace& a) {
    check_abelian(a, "signature");
    int n = a.n();
    OrbitSignature sig;
    Mat x = generic_element(a);
    sig.regular = is_regular(x);
    sig.multiplicities = multiplicity_partition(charpoly(x));
    std::ostringstream js;
    auto jd = jordan_data(x);
    for (std::size_t i = 0; i < jd.size(); ++i) {
        js << (i ? "|" : "") << jd[i].multiplicity << ":";
        for (int b : jd[i].blocks) js << b;
    }
    sig.jordan = js.str();
    sig.generic_rank = rank(x);

    LieSubspace nil = nilradical(a);
    sig.nilpotent = nil.dim() == a.dim();
    if (nil.dim() == 0) {
        sig.nil_image = 0;
        sig.nil_kernel = n;
    } else {
        Mat im(n, 0), ker(0, n);
        Mat wide(n, n * nil.dim()), tall(n * nil.dim(), n);
        for (int k = 0; k < nil.dim(); ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    wide(i, k * n + j) = nil.basis()[k](i, j);
                    tall(k * n + i, j) = nil.basis()[k](i, j);
                }
        sig.nil_image = rank(wide);
        sig.nil_kernel = n - rank(tall);
        bool square_zero = true;
        for (auto& u : a.basis())
            for (auto& v : a.basis())
                if (!(u * v).is_zero_matrix()) square_zero = false;
        if (square_zero && sig.nil_image == 2 && sig.nil_kernel == 2)
            sig.det_form_rank = det_form_rank(a, kernel_basis(tall));
    }
    return sig;
}

OrbitLabel classify_orbit(const LieSubspace& a) {
    OrbitSignature s = signature(a);
    auto& t = signature_table();
    auto it = t.find(s.key());
    if (it == t.end()) throw std::runtime_error("classify_orbit: no orbit has signature " + s.key());
    return it->second;
}

int orbit_dimension(const LieSubspace& a) {
    int n = a.n();
    std::vector<std::vector<Rational>> rows;
    for (auto& X : sl_basis(n)) {
        std::vector<Rational> r;
        for (auto& y : a.basis()) {
            auto q = quotient_coords(a, bracket(X, y));
            r.insert(r.end(), q.begin(), q.end());
        }
        rows.push_back(r);
    }
    return rank(Mat::from_rows(rows));
}

// ---- degenerations ----

namespace {

RatFunc T() { return RatFunc::t(); }
RatFunc Tinv() { return RatFunc(Rational(1)) / RatFunc::t(); }

PolyMat pdiag(const std::vector<RatFunc>& d) {
    PolyMat g(int(d.size()), int(d.size()));
    for (std::size_t i = 0; i < d.size(); ++i) g(int(i), int(i)) = d[i];
    return g;
}

CurveSubspace base_change(OrbitLabel from, const PolyMat& g) {
    return conjugate_curve(representative(from), g, inverse(g));
}

PolyMat p_sl(const PolyMat& x) {
    int n = x.rows();
    RatFunc s = x.trace() / RatFunc(Rational(n));
    PolyMat y = x;
    for (int i = 0; i < n; ++i) y(i, i) -= s;
    return y;
}

// Centralizer in sl_n of the regular element x(t): span of p(x), p(x^2), ...
CurveSubspace centralizer_curve(const PolyMat& x) {
    CurveSubspace c;
    c.n = x.rows();
    PolyMat p = x;
    for (int k = 1; k < c.n; ++k) {
        c.basis.push_back(p_sl(p));
        p = p * x;
    }
    return c;
}

PolyMat upper(const std::vector<RatFunc>& d, const std::vector<std::pair<int, int>>& ones) {
    PolyMat x = pdiag(d);
    for (auto [i, j] : ones) x(i - 1, j - 1) = RatFunc(Rational(1));
    return x;
}

}  // namespace

std::vector<Degeneration> degeneration_curves() {
    using L = OrbitLabel;
    RatFunc one(Rational(1)), zero(Rational(0));
    auto R = [](long v) { return RatFunc(Rational(v)); };
    std::vector<Degeneration> d;

    // regular to regular: centralizers of a curve of regular elements
    d.push_back({L::O12, L::O11, "centralizer of diag(0,t,2,3)+E12",
                 centralizer_curve(upper({zero, T(), R(2), R(3)}, {{1, 2}}))});
    d.push_back({L::O11, L::O10p, "centralizer of diag(0,0,5,5+t)+E12+E34",
                 centralizer_curve(upper({zero, zero, R(5), R(5) + T()}, {{1, 2}, {3, 4}}))});
    d.push_back({L::O11, L::O10pp, "centralizer of diag(0,0,t,5)+E12+E23",
                 centralizer_curve(upper({zero, zero, T(), R(5)}, {{1, 2}, {2, 3}}))});
    d.push_back({L::O10p, L::O9, "centralizer of diag(0,0,t,t)+E12+E23+E34",
                 centralizer_curve(upper({zero, zero, T(), T()}, {{1, 2}, {2, 3}, {3, 4}}))});
    d.push_back({L::O10pp, L::O9, "centralizer of diag(0,0,0,t)+E12+E23+E34",
                 centralizer_curve(upper({zero, zero, zero, T()}, {{1, 2}, {2, 3}, {3, 4}}))});

    // explicit base changes
    CurveSubspace c10_8p = base_change(L::O10pp, pdiag({one, Tinv(), one, one}));
    d.push_back({L::O10pp, L::O8p, "e2 -> e2/t", c10_8p});
    d.push_back({L::O10pp, L::O8pp, "transpose of e2 -> e2/t", transpose_curve(c10_8p)});
    d.push_back({L::O9, L::O8, "e1 -> t e1, e3 -> t e3", base_change(L::O9, pdiag({T(), one, T(), one}))});

    PolyMat g(4, 4);
    g(3, 0) = one;      // e1 -> e4
    g(2, 1) = one;      // e2 -> e3
    g(1, 2) = one;      // e3 -> e2
    g(0, 3) = one;      // e4 -> e1 + e4/t
    g(3, 3) = Tinv();
    CurveSubspace c8p_7 = base_change(L::O8p, g);
    d.push_back({L::O8p, L::O7, "e1->e4, e2->e3, e3->e2, e4->e1+e4/t", c8p_7});
    d.push_back({L::O8pp, L::O7, "transpose of the previous curve", transpose_curve(c8p_7)});

    CurveSubspace c8_7p = base_change(L::O8, pdiag({one, one, Tinv(), one}));
    d.push_back({L::O8, L::O7p, "e3 -> e3/t", c8_7p});
    d.push_back({L::O8, L::O7pp, "transpose of e3 -> e3/t", transpose_curve(c8_7p)});
    d.push_back({L::O7, L::O6, "e3 -> e3/t", base_change(L::O7, pdiag({one, one, Tinv(), one}))});
    CurveSubspace c7p_6 = base_change(L::O7p, pdiag({one, T(), one, one}));
    d.push_back({L::O7p, L::O6, "e2 -> t e2", c7p_6});
    d.push_back({L::O7pp, L::O6, "transpose of e2 -> t e2", transpose_curve(c7p_6)});
    CurveSubspace c7p_3p = base_change(L::O7p, pdiag({one, Tinv(), one, one}));
    d.push_back({L::O7p, L::O3p, "e2 -> e2/t", c7p_3p});
    d.push_back({L::O7pp, L::O3pp, "transpose of e2 -> e2/t", transpose_curve(c7p_3p)});
    return d;
}

std::vector<ArrowResult> verify_degenerations() {
    std::vector<ArrowResult> out;
    for (auto& d : degeneration_curves()) {
        ArrowResult r{d.from, d.to, d.from, d.to, false};
        r.got_start = classify_orbit(d.curve.at(Rational(1)));
        r.got_limit = classify_orbit(limit_subspace(d.curve));
        r.ok = r.got_start == d.from && r.got_limit == d.to;
        out.push_back(r);
    }
    return out;
}

// ---- secant planes ----

namespace {

// Rational roots of a squarefree polynomial with rational coefficients.
std::vector<Rational> rational_roots(const PolyQ& f) {
    std::vector<Rational> roots;
    PolyQ g = f;
    while (g.degree() > 0 && is_zero(g.coeff(0))) {
        roots.push_back(0);
        g = g.shift_down(1);
    }
    if (g.degree() <= 0) return roots;
    // integer coefficients
    mpz_class l = 1;
    for (auto& c : g.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<mpz_class> a;
    for (auto& c : g.coeffs()) a.push_back(mpz_class(c * Rational(l)));
    auto divisors = [](mpz_class v) {
        v = abs(v);
        std::vector<mpz_class> d;
        for (mpz_class i = 1; i * i <= v; ++i)
            if (v % i == 0) {
                d.push_back(i);
                if (i * i != v) d.push_back(v / i);
            }
        return d;
    };
    for (auto& p : divisors(a.front()))
        for (auto& q : divisors(a.back()))
            for (int s : {1, -1}) {
                Rational r(p * s, q);
                r.canonicalize();
                if (is_zero(g.eval(r)) && std::find(roots.begin(), roots.end(), r) == roots.end())
                    roots.push_back(r);
            }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

SecantReport secant_planes(const LieSubspace& a) {
    check_abelian(a, "secant_planes");
    int n = a.n();
    Mat x = generic_element(a);
    auto mult = multiplicity_partition(charpoly(x));
    if (mult != std::vector<int>(n, 1)) throw std::invalid_argument("secant_planes: generic element is not regular semisimple");
    auto roots = rational_roots(charpoly(x));
    if (int(roots.size()) != n) throw std::invalid_argument("secant_planes: Cartan is not split over Q");
    // eigenvectors ordered by leading position, so a diagonal Cartan keeps
    // the coordinate order
    std::vector<std::vector<Rational>> vecs;
    for (auto& lam : roots) {
        auto v = kernel_basis(x - Mat::identity(n) * lam).row(0);
        int p = 0;
        while (is_zero(v[p])) ++p;
        Rational f = v[p];
        for (auto& e : v) e /= f;
        vecs.push_back(v);
    }
    auto lead = [](const std::vector<Rational>& v) {
        int p = 0;
        while (is_zero(v[p])) ++p;
        return p;
    };
    std::sort(vecs.begin(), vecs.end(), [&](auto& u, auto& v) {
        return lead(u) != lead(v) ? lead(u) < lead(v) : u < v;
    });
    Mat S(n, n);
    for (int i = 0; i < n; ++i)
        for (int r = 0; r < n; ++r) S(r, i) = vecs[i][r];
    Mat Si = inverse(S);
    int k = a.dim();
    std::vector<std::vector<Rational>> lam(k);   // lam[b][i]: i-th eigenvalue of basis b
    for (int b = 0; b < k; ++b) {
        Mat dgl = Si * a.basis()[b] * S;
        for (int i = 0; i < n; ++i) lam[b].push_back(dgl(i, i));
    }

    SecantReport rep;
    rep.centralizers_dim_ok = rep.all_abelian = true;
    std::vector<Mat> dirs;   // tangent directions, two rows per plane
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mat f(1, k);
            for (int b = 0; b < k; ++b) f(0, b) = lam[b][i] - lam[b][j];
            Mat ker = kernel_basis(f);
            std::vector<Mat> pb;
            for (int r = 0; r < ker.rows(); ++r) {
                Mat y(n, n);
                for (int b = 0; b < k; ++b) y += a.basis()[b] * ker(r, b);
                pb.push_back(y);
            }
            SecantPlane pl;
            pl.i = i;
            pl.j = j;
            pl.hyperplane = LieSubspace(n, pb);
            pl.centralizer = centralizer(pl.hyperplane, true);
            if (pl.centralizer.dim() != n + 1) rep.centralizers_dim_ok = false;
            const auto& cb = pl.centralizer.basis();
            for (int s = 0; s < 10; ++s) {
                Mat w(n, n);
                for (std::size_t c = 0; c < cb.size(); ++c) w += cb[c] * coef(s, int(c));
                std::vector<Mat> g = pb;
                g.push_back(w);
                LieSubspace v = LieSubspace::span(n, g);
                if (v.dim() == n - 1 && pairwise_commute(v)) ++pl.samples_abelian;
                else rep.all_abelian = false;
            }
            // a = P_ij + <u>; directions u -> w mod a for w in the centralizer
            int ub = 0;
            while (is_zero(f(0, ub))) ++ub;
            std::vector<std::vector<Rational>> drows;
            for (auto& w : cb) {
                auto q = quotient_coords(a, w);
                bool nz = false;
                for (auto& e : q) nz |= !is_zero(e);
                if (!nz) continue;
                std::vector<Rational> row;
                for (int b = 0; b < k; ++b) {
                    Rational cbk = f(0, b) / f(0, ub);
                    for (auto& e : q) row.push_back(cbk * e);
                }
                drows.push_back(row);
            }
            dirs.push_back(Mat::from_rows(drows));
            rep.planes.push_back(pl);
        }
    rep.transverse = true;
    for (std::size_t p = 0; p < dirs.size(); ++p)
        for (std::size_t q = p + 1; q < dirs.size(); ++q) {
            Mat m = dirs[p];
            for (int r = 0; r < dirs[q].rows(); ++r) m.append_row(dirs[q].row(r));
            if (rank(m) != rank(dirs[p]) + rank(dirs[q])) rep.transverse = false;
        }
    return rep;
}

}  // namespace redn
