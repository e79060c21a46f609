#include "redn/tangent.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace redn {

namespace {

// Canonical form of span(rows) and reduction modulo it, over any field type.
template <class T>
struct Quotient {
    Matrix<T> canon;
    std::vector<int> piv;
    explicit Quotient(const Matrix<T>& rows) {
        auto rr = rref(rows);
        canon = rr.reduced;
        piv = rr.pivots;
    }
    std::vector<T> coords(std::vector<T> w) const {
        for (int r = 0; r < canon.rows(); ++r) {
            T f = w[piv[r]];
            if (is_zero(f)) continue;
            for (std::size_t j = 0; j < w.size(); ++j)
                if (!is_zero(canon(r, int(j)))) w[j] -= f * canon(r, int(j));
        }
        std::vector<T> out;
        std::size_t p = 0;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (p < piv.size() && piv[p] == int(j)) { ++p; continue; }
            out.push_back(w[j]);
        }
        return out;
    }
};

template <class T>
Matrix<T> flat_rows(const std::vector<Matrix<T>>& ms) {
    int n = ms[0].rows();
    Matrix<T> r(0, n * n);
    for (auto& m : ms) r.append_row(m.data());
    return r;
}

template <class T>
Matrix<T> br(const Matrix<T>& x, const Matrix<T>& y) { return x * y - y * x; }

PolyMat pm_E(int n, int i, int j) {   // 1-based
    PolyMat m(n, n);
    m(i - 1, j - 1) = RatFunc(Rational(1));
    return m;
}

PolyMat p_sl(const PolyMat& x) {
    int n = x.rows();
    RatFunc s = x.trace() / RatFunc(Rational(n));
    PolyMat y = x;
    for (int i = 0; i < n; ++i) y(i, i) -= s;
    return y;
}

PolyMat subs_t(const PolyMat& m, const RatFunc& t) {
    // entries are polynomials in t of degree <= 1 here
    PolyMat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            const RatFunc& e = m(i, j);
            if (e.den().degree() != 0) throw std::logic_error("subs_t: expected polynomial entries");
            RatFunc acc;
            RatFunc pw(Rational(1));
            for (auto& c : e.num().coeffs()) {
                acc += pw * RatFunc(c / e.den().lead());
                pw *= t;
            }
            r(i, j) = acc;
        }
    return r;
}

Mat eval_at(const PolyMat& m, const Rational& t) {
    Mat r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).eval(t);
    return r;
}

}  // namespace

std::vector<Rational> quotient_coords(const LieSubspace& a, const Mat& v) {
    return Quotient<Rational>(a.canonical()).coords(v.data());
}

std::vector<Mat> killing_complement(const LieSubspace& a) {
    int n = a.n(), N = sl_dim(n);
    const auto& sb = sl_basis(n);
    Mat eq(a.dim(), N);
    for (int i = 0; i < a.dim(); ++i)
        for (int s = 0; s < N; ++s) eq(i, s) = trace_form(a.basis()[i], sb[s]);
    Mat ker = kernel_basis(eq);
    std::vector<Mat> c;
    for (int r = 0; r < ker.rows(); ++r) c.push_back(from_sl_coords(n, ker.row(r)));
    std::vector<Mat> all = a.basis();
    all.insert(all.end(), c.begin(), c.end());
    if (LieSubspace::span(n, all).dim() != N) return {};
    return c;
}

std::vector<Mat> pivot_complement(const LieSubspace& a) {
    int n = a.n(), N = sl_dim(n);
    Mat rows(0, N);
    for (auto& x : a.basis()) rows.append_row(sl_coords(x));
    auto rr = rref(rows);
    std::vector<char> piv(N, 0);
    for (int p : rr.pivots) piv[p] = 1;
    std::vector<Mat> c;
    for (int s = 0; s < N; ++s)
        if (!piv[s]) c.push_back(sl_basis(n)[s]);
    return c;
}

Mat tangent_equations(const LieSubspace& a, const std::vector<Mat>& comp) {
    int n = a.n(), k = a.dim(), c = int(comp.size());
    const auto& x = a.basis();
    int unknowns = k * c;
    Mat rows(0, unknowns);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Mat block(n * n, unknowns);
            for (int s = 0; s < c; ++s) {
                Mat l = bracket(comp[s], x[j]);    // from psi(x_i)
                Mat r = bracket(x[i], comp[s]);    // from psi(x_j)
                for (int e = 0; e < n * n; ++e) {
                    block(e, i * c + s) += l.data()[e];
                    block(e, j * c + s) += r.data()[e];
                }
            }
            for (int e = 0; e < n * n; ++e) rows.append_row(block.row(e));
        }
    return rows;
}

DeformationSpace tangent_space_ab(const LieSubspace& a, const std::vector<Mat>& comp) {
    if (!pairwise_commute(a)) throw std::invalid_argument("tangent_space_ab: subspace is not abelian");
    int n = a.n(), k = a.dim(), c = int(comp.size());
    {
        std::vector<Mat> all = a.basis();
        all.insert(all.end(), comp.begin(), comp.end());
        if (int(all.size()) != sl_dim(n) || LieSubspace::span(n, all).dim() != sl_dim(n))
            throw std::invalid_argument("tangent_space_ab: not a complement of a in sl_n");
    }
    int unknowns = k * c;
    Mat eqs = tangent_equations(a, comp);
    DeformationSpace d;
    d.a = a;
    d.complement = comp;
    Mat ker = eqs.rows() ? kernel_basis(eqs) : Mat(0, unknowns);
    if (!eqs.rows()) {
        for (int u = 0; u < unknowns; ++u) {
            std::vector<Rational> v(unknowns, Rational(0));
            v[u] = 1;
            ker.append_row(v);
        }
    }
    for (int r = 0; r < ker.rows(); ++r) {
        std::vector<Mat> psi;
        for (int i = 0; i < k; ++i) {
            Mat m(n, n);
            for (int s = 0; s < c; ++s)
                if (!is_zero(ker(r, i * c + s))) m += comp[s] * ker(r, i * c + s);
            psi.push_back(m);
        }
        d.basis.push_back(psi);
    }
    return d;
}

DeformationSpace tangent_space_ab(const LieSubspace& a, ComplementKind kind) {
    std::vector<Mat> c;
    if (kind != ComplementKind::Pivot) c = killing_complement(a);
    if (kind == ComplementKind::Killing && c.empty())
        throw std::invalid_argument("tangent_space_ab: trace form degenerate on a");
    if (c.empty()) c = pivot_complement(a);
    return tangent_space_ab(a, c);
}

int sigma_fiber_tangent(const Mat& x, const LieSubspace& a) {
    if (!a.contains(x)) throw std::invalid_argument("sigma_fiber_tangent: x not in a");
    int n = a.n();
    Mat rows(0, n * n);
    for (auto& b : a.basis()) rows.append_row(b.data());
    std::vector<Rational> c;
    solve_in_rowspace(rows, x.data(), c);
    DeformationSpace d = tangent_space_ab(a);
    std::vector<std::vector<Rational>> img;
    for (auto& psi : d.basis) {
        Mat v(n, n);
        for (int i = 0; i < a.dim(); ++i) v += psi[i] * c[i];
        img.push_back(v.data());
    }
    if (img.empty()) return 0;
    return d.dim() - rank(Mat::from_rows(img));
}

// ---- O_bound family ----

int BoundParams::theta_index(int j, int k) const {
    for (std::size_t i = 0; i < theta.size(); ++i)
        if (theta[i] == std::make_pair(j, k)) return 2 + int(i);
    throw std::out_of_range("theta_index");
}

BoundParams bound_params(int n) {
    BoundParams p;
    p.n = n;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
            if (j != k && (j > 2 || k > 2)) p.theta.push_back({j, k});
    return p;
}

BoundFamily bound_family(int n) {
    BoundParams P = bound_params(n);
    RatFunc one(Rational(1)), t = RatFunc::t();
    BoundFamily f;
    f.at_zero.assign(n, PolyMat(n, n));
    f.d.assign(P.count(), std::vector<PolyMat>(n, PolyMat(n, n)));
    auto th = [&](int j, int k) { return P.theta_index(j, k); };
    // psi_1
    f.at_zero[0](0, 1) = one;
    f.at_zero[0](1, 0) = t;
    f.d[P.mu()][0](0, 0) = one;
    f.d[P.mu()][0](1, 1) = -one;
    f.d[P.nu()][0](1, 0) = one;
    for (int j = 3; j <= n; ++j) {
        f.d[th(2, j)][0](0, j - 1) = -one;
        f.d[th(1, j)][0](1, j - 1) = -t;
        f.d[th(j, 2)][0](j - 1, 0) = -t;
        f.d[th(j, 1)][0](j - 1, 1) = -one;
    }
    // psi_2
    f.at_zero[1](0, 0) = one;
    f.at_zero[1](1, 1) = one;
    for (int j = 3; j <= n; ++j) {
        f.d[th(1, j)][1](0, j - 1) = -one;
        f.d[th(2, j)][1](1, j - 1) = -one;
        f.d[th(j, 1)][1](j - 1, 0) = -one;
        f.d[th(j, 2)][1](j - 1, 1) = -one;
    }
    // psi_k: k-th row and column, sign change after the diagonal
    for (int k = 3; k <= n; ++k) {
        f.at_zero[k - 1](k - 1, k - 1) = one;
        for (int i = 1; i <= n; ++i) {
            if (i == k) continue;
            RatFunc s = i < k ? one : -one;
            f.d[th(i, k)][k - 1](i - 1, k - 1) = s;
            f.d[th(k, i)][k - 1](k - 1, i - 1) = s;
        }
    }
    return f;
}

bool bound_psi_spans_tangent(int n) {
    BoundFamily f = bound_family(n);
    BoundParams P = bound_params(n);
    std::vector<Mat> x;
    for (int i = 0; i + 1 < n; ++i) x.push_back(project_sl(eval_at(f.at_zero[i], 0)));
    LieSubspace a(n, x);
    DeformationSpace d = tangent_space_ab(a);
    Quotient<Rational> q(a.canonical());
    auto vec = [&](const std::vector<Mat>& images) {
        std::vector<Rational> v;
        for (auto& m : images) {
            auto c = q.coords(m.data());
            v.insert(v.end(), c.begin(), c.end());
        }
        return v;
    };
    std::vector<std::vector<Rational>> dp, tv, both;
    for (int p = 0; p < P.count(); ++p) {
        std::vector<Mat> im;
        for (int i = 0; i + 1 < n; ++i) im.push_back(project_sl(eval_at(f.d[p][i], 0)));
        dp.push_back(vec(im));
    }
    for (auto& psi : d.basis) tv.push_back(vec(psi));
    both = dp;
    both.insert(both.end(), tv.begin(), tv.end());
    int rd = rank(Mat::from_rows(dp)), rt = rank(Mat::from_rows(tv)), rb = rank(Mat::from_rows(both));
    return rd == P.count() && rt == d.dim() && rb == rd && rb == rt;
}

FirstOrder killing_first_order(int n) {
    BoundFamily f = bound_family(n);
    BoundParams P = bound_params(n);
    int np = P.count();
    std::vector<Mat> A;
    std::vector<std::vector<Mat>> D(np);
    for (int i = 0; i < n; ++i) A.push_back(eval_at(f.at_zero[i], 0));
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < n; ++i) D[p].push_back(eval_at(f.d[p][i], 0));
    // first-order jets (constant, linear part) of trace(psi_i psi_j)
    using Jet = std::pair<Rational, std::vector<Rational>>;
    std::vector<std::vector<Jet>> g(n, std::vector<Jet>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            g[i][j].first = trace_form(A[i], A[j]);
            g[i][j].second.resize(np);
            for (int p = 0; p < np; ++p)
                g[i][j].second[p] = trace_form(A[i], D[p][j]) + trace_form(D[p][i], A[j]);
        }
    // Leibniz expansion on jets
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    FirstOrder out;
    out.constant = 0;
    out.linear.assign(np, Rational(0));
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inv;
        Rational c0 = 1;
        std::vector<Rational> c1(np, Rational(0));
        for (int i = 0; i < n; ++i) {
            const Jet& e = g[i][perm[i]];
            for (int p = 0; p < np; ++p) c1[p] = c1[p] * e.first + c0 * e.second[p];
            c0 *= e.first;
        }
        Rational s = inv % 2 ? Rational(-1) : Rational(1);
        out.constant += s * c0;
        for (int p = 0; p < np; ++p) out.linear[p] += s * c1[p];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

CanonicalOrder canonical_vanishing_order(int n) {
    BoundFamily f = bound_family(n);
    BoundParams P = bound_params(n);
    RatFunc tau = RatFunc::t(), t = tau * tau, one(Rational(1));
    CanonicalOrder res;

    // tangent dimension at a generic point of the curve and at t = 0
    {
        std::vector<Mat> x2, x0;
        for (int i = 0; i + 1 < n; ++i) {
            x2.push_back(project_sl(eval_at(f.at_zero[i], 4)));
            x0.push_back(project_sl(eval_at(f.at_zero[i], 0)));
        }
        res.tangent_dim_generic = tangent_space_ab(LieSubspace(n, x2)).dim();
        res.tangent_dim_zero = tangent_space_ab(LieSubspace(n, x0)).dim();
        if (res.tangent_dim_generic != n * (n - 1) || res.tangent_dim_zero != n * (n - 1))
            throw std::runtime_error("canonical_vanishing_order: tangent dimension is not n(n-1) along the curve");
    }

    std::vector<PolyMat> x;
    for (int i = 0; i + 1 < n; ++i) x.push_back(p_sl(subs_t(f.at_zero[i], t)));
    Quotient<RatFunc> q(flat_rows(x));
    auto vec = [&](const std::vector<PolyMat>& images) {
        std::vector<RatFunc> v;
        for (auto& m : images) {
            auto c = q.coords(m.data());
            v.insert(v.end(), c.begin(), c.end());
        }
        return v;
    };
    auto ad = [&](const PolyMat& y) {
        std::vector<PolyMat> im;
        for (auto& xi : x) im.push_back(br(y, xi));
        return vec(im);
    };
    // coordinate basis
    std::vector<std::vector<RatFunc>> D;
    for (int p = 0; p < P.count(); ++p) {
        std::vector<PolyMat> im;
        for (int i = 0; i + 1 < n; ++i) im.push_back(p_sl(subs_t(f.d[p][i], t)));
        D.push_back(vec(im));
    }
    // ad images of the Killing-orthogonal basis
    PolyMat H = pm_E(n, 1, 1) - pm_E(n, 2, 2);
    PolyMat Z = pm_E(n, 2, 1) * tau - pm_E(n, 1, 2) * (one / tau);
    std::vector<std::vector<RatFunc>> Ad{ad(H), ad(Z)};
    for (auto [j, k] : P.theta) Ad.push_back(ad(pm_E(n, j, k)));

    // sub-identities
    auto scaled = [](std::vector<RatFunc> v, const RatFunc& c) {
        for (auto& e : v) e *= c;
        return v;
    };
    res.mu_identity = D[P.mu()] == scaled(ad(Z), -(one / (RatFunc(Rational(2)) * tau)));
    res.nu_identity = D[P.nu()] == scaled(ad(H), -(one / (RatFunc(Rational(4)) * t)));
    res.theta_identities = true;
    for (auto [j, k] : P.theta) {
        RatFunc s = k > j ? one : -one;
        if (!(D[P.theta_index(j, k)] == scaled(ad(pm_E(n, j, k)), s))) res.theta_identities = false;
    }

    // Ad = T D; valuation of det T
    int m = int(D.size());
    Matrix<RatFunc> MD(0, int(D[0].size()));
    for (auto& r : D) MD.append_row(r);
    auto rr = rref(MD);
    if (rr.rank != m) throw std::runtime_error("canonical_vanishing_order: coordinate basis is dependent");
    Matrix<RatFunc> sub(m, m), ads(m, m);
    for (int i = 0; i < m; ++i)
        for (int c = 0; c < m; ++c) {
            sub(i, c) = D[i][rr.pivots[c]];
            ads(i, c) = Ad[i][rr.pivots[c]];
        }
    Matrix<RatFunc> T = ads * inverse(sub);
    // every ad image lies in the span of the coordinate basis
    for (int i = 0; i < m; ++i) {
        std::vector<RatFunc> comb(D[0].size());
        for (int p = 0; p < m; ++p)
            for (std::size_t c = 0; c < comb.size(); ++c) comb[c] += T(i, p) * D[p][c];
        if (!(comb == Ad[i])) throw std::runtime_error("canonical_vanishing_order: ad basis leaves the tangent space");
    }
    res.valuation = det(T).valuation();
    return res;
}

// ---- cone map B ----

Mat ConeMapB::apply(const std::vector<Rational>& u) const {
    int m = n - 1;
    Mat r(m, m);
    for (int i = 0; i < m; ++i)
        if (!is_zero(u[i])) r += b[i] * u[i];
    return r;
}

ConeMapB build_B(int n) {
    ConeMapB B;
    B.n = n;
    int m = n - 1;
    for (int i = 1; i <= m; ++i) {
        Mat M(m, m);
        for (int k = 1; k <= m; ++k) {
            int r = (i + k) % n;
            if (r != 0) M(r - 1, k - 1) = 1;
        }
        B.b.push_back(M);
    }
    return B;
}

ConeMapB pure_trace_B(int n) {
    ConeMapB B;
    B.n = n;
    int m = n - 1;
    for (int i = 0; i < m; ++i) {
        Mat M(m, m);
        for (int k = 0; k < m; ++k) {
            if (i == 0) M(k, k) += 1;
            if (k == 0) M(i, k) += 1;
        }
        B.b.push_back(M);
    }
    return B;
}

namespace {

// coordinates of p ^ q ^ z in Lambda^3 (all 3-subsets, lexicographic)
std::vector<Rational> wedge3(const std::vector<Rational>& p, const std::vector<Rational>& q,
                             const std::vector<Rational>& z) {
    int m = int(p.size());
    std::vector<Rational> out;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                Mat M = Mat::from_rows({{p[a], p[b], p[c]}, {q[a], q[b], q[c]}, {z[a], z[b], z[c]}});
                out.push_back(det(M));
            }
    return out;
}

std::vector<Rational> unit(int m, int i) {
    std::vector<Rational> v(m, Rational(0));
    v[i] = 1;
    return v;
}

}  // namespace

ConeCheck check_cone_eqs(const ConeMapB& B) {
    int m = B.n - 1;
    ConeCheck r;
    r.symmetric = r.traceless = r.quadrics = true;
    for (int i = 0; i < m; ++i) {
        if (!is_zero(B.b[i].trace())) r.traceless = false;
        for (int k = 0; k < m; ++k)
            for (int s = 0; s < m; ++s)
                if (B.b[i](s, k) != B.b[k](s, i)) r.symmetric = false;
    }
    std::vector<std::vector<Mat>> C(m, std::vector<Mat>(m));
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) C[i][k] = B.b[i] * B.b[k] - B.b[k] * B.b[i];
    auto col = [&](const Mat& M, int w) {
        std::vector<Rational> v(m);
        for (int s = 0; s < m; ++s) v[s] = M(s, w);
        return v;
    };
    for (int u1 = 0; u1 < m && r.quadrics; ++u1)
        for (int u2 = u1; u2 < m && r.quadrics; ++u2)
            for (int v1 = 0; v1 < m && r.quadrics; ++v1)
                for (int v2 = v1; v2 < m && r.quadrics; ++v2)
                    for (int w = 0; w < m && r.quadrics; ++w) {
                        // full polarization of u ^ v ^ [B(u),B(v)]w
                        std::vector<Rational> acc;
                        int us[2] = {u1, u2}, vs[2] = {v1, v2};
                        for (int a = 0; a < 2; ++a)
                            for (int b = 0; b < 2; ++b) {
                                auto term = wedge3(unit(m, us[a]), unit(m, vs[b]), col(C[us[1 - a]][vs[1 - b]], w));
                                if (acc.empty()) acc = term;
                                else
                                    for (std::size_t e = 0; e < acc.size(); ++e) acc[e] += term[e];
                            }
                        for (auto& e : acc)
                            if (!is_zero(e)) {
                                r.quadrics = false;
                                r.witness = std::vector<int>{u1, u2, v1, v2, w};
                                break;
                            }
                    }
    return r;
}

int stabilizer_lie_dim(const ConeMapB& B) {
    int m = B.n - 1, U = m * m;
    // unknown X(l, c) at index l*m + c; equations X B(e_i)e_k - B(X e_i)e_k - B(e_i) X e_k = 0
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> tr(U, Rational(0));
    for (int l = 0; l < m; ++l) tr[l * m + l] = 1;
    rows.push_back(tr);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) {
            Mat eq(m, U);
            // X (B(e_i) e_k)
            for (int s = 0; s < m; ++s) {
                Rational bik = B.b[i](s, k);
                if (is_zero(bik)) continue;
                for (int l = 0; l < m; ++l) eq(l, l * m + s) += bik;
            }
            // - B(X e_i) e_k = - sum_l X(l,i) B(e_l) e_k
            for (int l = 0; l < m; ++l)
                for (int s = 0; s < m; ++s) eq(s, l * m + i) -= B.b[l](s, k);
            // - B(e_i) X e_k = - sum_l X(l,k) B(e_i) e_l
            for (int l = 0; l < m; ++l)
                for (int s = 0; s < m; ++s) eq(s, l * m + k) -= B.b[i](s, l);
            for (int s = 0; s < m; ++s) rows.push_back(eq.row(s));
        }
    return U - rank(Mat::from_rows(rows));
}

// ---- pencil map ----

namespace {

const int kMon[6][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}};

std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& u) {
    return a[0] * u[0] + a[1] * u[1] + a[2] * u[2];
}

// Q(u) = 2 Phi(u) for the pair of monomials (m1, m2); Lambda^2 U* = U through
// the cross product. The factor 2 matches the explicit matrices.
std::vector<Rational> q_pair(int m1, int m2, const std::vector<Rational>& u) {
    auto e = unit(3, kMon[m1][0]), e2 = unit(3, kMon[m1][1]);
    auto f = unit(3, kMon[m2][0]), f2 = unit(3, kMon[m2][1]);
    std::vector<Rational> out(3, Rational(0));
    auto add = [&](const Rational& c, const std::vector<Rational>& v) {
        for (int i = 0; i < 3; ++i) out[i] += 2 * c * v[i];
    };
    add(dot(e, u) * dot(f, u), cross(e2, f2));
    add(dot(e2, u) * dot(f, u), cross(e, f2));
    add(dot(e, u) * dot(f2, u), cross(e2, f));
    add(dot(e2, u) * dot(f2, u), cross(e, f));
    return out;
}

// B(e_i) e_k by polarization of Q.
std::vector<Rational> polar(int m1, int m2, int i, int k) {
    std::vector<Rational> ei = unit(3, i), ek = unit(3, k), s(3);
    for (int c = 0; c < 3; ++c) s[c] = ei[c] + ek[c];
    auto a = q_pair(m1, m2, s), b = q_pair(m1, m2, ei), c = q_pair(m1, m2, ek);
    std::vector<Rational> r(3);
    for (int x = 0; x < 3; ++x) r[x] = (a[x] - b[x] - c[x]) / 2;
    return r;
}

}  // namespace

ConeMapB tmap(const std::vector<Rational>& q1, const std::vector<Rational>& q2) {
    if (q1.size() != 6 || q2.size() != 6) throw std::invalid_argument("tmap: quadratic forms need 6 coefficients");
    ConeMapB B;
    B.n = 4;
    B.b.assign(3, Mat(3, 3));
    for (int m1 = 0; m1 < 6; ++m1)
        for (int m2 = 0; m2 < 6; ++m2) {
            Rational c = q1[m1] * q2[m2];
            if (is_zero(c)) continue;
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k) {
                    auto v = polar(m1, m2, i, k);
                    for (int s = 0; s < 3; ++s) B.b[i](s, k) += c * v[s];
                }
        }
    return B;
}

Mat tmap_matrix() {
    Mat M(0, 18);
    for (int m1 = 0; m1 < 6; ++m1)
        for (int m2 = m1 + 1; m2 < 6; ++m2) {
            std::vector<Rational> row;
            for (int i = 0; i < 3; ++i)
                for (int k = i; k < 3; ++k) {
                    auto v = polar(m1, m2, i, k);
                    row.insert(row.end(), v.begin(), v.end());
                }
            M.append_row(row);
        }
    return M;
}

}  // namespace redn
