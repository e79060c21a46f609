#include "redn/exterior.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <thread>

namespace redn {

// ---- sparse maps ----

std::vector<Rational> SparseMap::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(rows, Rational(0));
    for (int c = 0; c < cols; ++c) {
        if (is_zero(v[c])) continue;
        for (auto& [r, x] : col[c]) out[r] += x * v[c];
    }
    return out;
}

SparseVec SparseMap::apply_sparse(const SparseVec& v) const {
    std::map<int, Rational> acc;
    for (auto& [c, a] : v)
        for (auto& [r, x] : col[c]) acc[r] += x * a;
    SparseVec out;
    for (auto& [r, x] : acc)
        if (!is_zero(x)) out.emplace_back(r, x);
    return out;
}

Mat SparseMap::dense() const {
    Mat m(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (auto& [r, x] : col[c]) m(r, c) = x;
    return m;
}

SparseMap compose(const SparseMap& a, const SparseMap& b) {
    if (a.cols != b.rows) throw std::invalid_argument("compose: shape mismatch");
    SparseMap m;
    m.rows = a.rows;
    m.cols = b.cols;
    m.col.resize(b.cols);
    for (int c = 0; c < b.cols; ++c) m.col[c] = a.apply_sparse(b.col[c]);
    return m;
}

namespace {

SparseMap from_columns(int rows, const std::vector<std::map<int, Rational>>& cols) {
    SparseMap m;
    m.rows = rows;
    m.cols = int(cols.size());
    m.col.resize(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (auto& [r, x] : cols[c])
            if (!is_zero(x)) m.col[c].emplace_back(r, x);
    return m;
}

// Sort indices, returning the permutation sign, or 0 on a repeat.
int sort_with_sign(std::vector<int>& s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
            if (s[j - 1] == s[j]) return 0;
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    return sign;
}

// f_1 ^ ... ^ f_k expanded into sorted monomials keyed by colex rank.
void wedge_expand(const std::vector<SparseVec>& f, const Rational& scale, std::map<int, Rational>& out) {
    std::vector<int> idx(f.size());
    std::vector<Rational> coef(f.size() + 1);
    coef[0] = scale;
    std::function<void(std::size_t)> rec = [&](std::size_t d) {
        if (d == f.size()) {
            std::vector<int> s = idx;
            int sg = sort_with_sign(s);
            if (sg == 0) return;
            Rational& slot = out[int(colex_rank(s))];
            if (sg > 0) slot += coef[d];
            else slot -= coef[d];
            return;
        }
        for (auto& [i, x] : f[d]) {
            idx[d] = i;
            coef[d + 1] = coef[d] * x;
            rec(d + 1);
        }
    };
    rec(0);
}

SparseVec sparse(const std::vector<Rational>& v) {
    SparseVec s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!is_zero(v[i])) s.emplace_back(int(i), v[i]);
    return s;
}

// sl basis element k written in the flattened gl basis.
SparseVec sl_in_gl(int n, int k) {
    SparseVec s;
    if (k < n * (n - 1)) {
        int i = k / (n - 1), r = k % (n - 1);
        int j = r < i ? r : r + 1;
        s.emplace_back(i * n + j, Rational(1));
    } else {
        int m = k - n * (n - 1);
        s.emplace_back(m * n + m, Rational(1));
        s.emplace_back((m + 1) * n + m + 1, Rational(-1));
    }
    return s;
}

// Structure constants: sl coordinates of [b_s, b_t].
const std::vector<std::vector<SparseVec>>& sl_brackets(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<SparseVec>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const auto& b = sl_basis(n);
    int N = sl_dim(n);
    std::vector<std::vector<SparseVec>> br(N, std::vector<SparseVec>(N));
    for (int s = 0; s < N; ++s)
        for (int t = 0; t < N; ++t) br[s][t] = sparse(sl_coords(bracket(b[s], b[t])));
    return cache.emplace(n, std::move(br)).first->second;
}

}  // namespace

std::vector<Rational> wedge_rows(const Mat& rows) {
    int k = rows.rows(), N = rows.cols();
    std::vector<SparseVec> f;
    for (int i = 0; i < k; ++i) f.push_back(sparse(rows.row(i)));
    std::map<int, Rational> acc;
    wedge_expand(f, Rational(1), acc);
    std::vector<Rational> out(binom(N, k), Rational(0));
    for (auto& [r, x] : acc) out[r] = x;
    return out;
}

std::vector<int> wedge_weight(int n, const std::vector<int>& subset) {
    std::vector<int> w(n, 0);
    for (int s : subset) {
        auto ws = sl_basis_weight(n, s);
        for (int i = 0; i < n; ++i) w[i] += ws[i];
    }
    return w;
}

// ---- Theta ----

ThetaMap build_theta(int n) {
    if (n < 3) throw std::invalid_argument("Theta needs n >= 3");
    ThetaMap th;
    th.n = n;
    th.N = sl_dim(n);
    const int N = th.N, k = n - 1;
    const long R = binom(N, n - 3);
    const auto& br = sl_brackets(n);
    auto subsets = colex_subsets(N, k);
    std::vector<std::map<int, Rational>> cols(subsets.size());
    for (std::size_t ci = 0; ci < subsets.size(); ++ci) {
        const auto& S = subsets[ci];
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                int sign = (a + b + 1) % 2 == 0 ? 1 : -1;
                std::vector<int> rest;
                for (int i = 0; i < k; ++i)
                    if (i != a && i != b) rest.push_back(S[i]);
                long r = colex_rank(rest);
                for (auto& [c, x] : br[S[a]][S[b]]) {
                    Rational& slot = cols[ci][int(c * R + r)];
                    if (sign > 0) slot += x;
                    else slot -= x;
                }
            }
    }
    th.map = from_columns(int(N * R), cols);
    return th;
}

std::vector<Rational> theta_apply(const ThetaMap& th, const std::vector<Rational>& wedge) {
    return th.map.apply(wedge);
}

ThetaKernel theta_kernel(int n, bool allow_large) {
    if (n >= 5 && !allow_large)
        throw std::invalid_argument("theta kernel for n >= 5 is a large computation; pass the explicit opt-in");
    ThetaMap th = build_theta(n);
    int N = th.N;
    auto subsets = colex_subsets(N, n - 1);
    ThetaKernel out;
    for (std::size_t c = 0; c < subsets.size(); ++c)
        out.blocks[wedge_weight(n, subsets[c])].push_back(int(c));
    out.basis = Mat(0, int(subsets.size()));
    for (auto& [w, cols] : out.blocks) {
        std::set<int> rowset;
        for (int c : cols)
            for (auto& [r, x] : th.map.col[c]) rowset.insert(r);
        std::vector<int> rows(rowset.begin(), rowset.end());
        std::map<int, int> rpos;
        for (std::size_t i = 0; i < rows.size(); ++i) rpos[rows[i]] = int(i);
        Mat block(int(rows.size()), int(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (auto& [r, x] : th.map.col[cols[j]]) block(rpos[r], int(j)) = x;
        Mat k = block.rows() ? kernel_basis(block) : Mat::identity(int(cols.size()));
        for (int i = 0; i < k.rows(); ++i) {
            std::vector<Rational> v(subsets.size(), Rational(0));
            for (std::size_t j = 0; j < cols.size(); ++j) v[cols[j]] = k(i, int(j));
            out.basis.append_row(v);
        }
    }
    out.dim = out.basis.rows();
    return out;
}

int theta_kernel_dim(int n, bool allow_large) { return theta_kernel(n, allow_large).dim; }

int theta_rank_bruteforce(int n) { return rank(build_theta(n).map.dense()); }

bool ab_membership(const LieSubspace& a) {
    int n = a.n();
    if (a.dim() != n - 1) throw std::invalid_argument("ab_membership: subspace must have dimension n-1");
    if (!is_traceless_subspace(a)) throw std::invalid_argument("ab_membership: subspace is not in sl_n");
    static std::mutex mu;
    static std::map<int, ThetaMap> cache;
    const ThetaMap* th;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it == cache.end()) it = cache.emplace(n, build_theta(n)).first;
        th = &it->second;
    }
    auto img = theta_apply(*th, plucker(a).coords);
    bool in_kernel = std::all_of(img.begin(), img.end(), [](const Rational& x) { return is_zero(x); });
    if (in_kernel != pairwise_commute(a))
        throw std::logic_error("ab_membership: Theta test and pairwise bracket test disagree");
    return in_kernel;
}

// ---- Killing quadric ----

Rational killing_quadric(const std::vector<Mat>& xs) {
    int k = int(xs.size());
    Mat g(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) g(i, j) = trace_form(xs[i], xs[j]);
    return det(g);
}

// ---- diagram maps ----

namespace {

std::vector<std::vector<int>> multisets(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int lo) {
        if (int(cur.size()) == size) { out.push_back(cur); return; }
        for (int a = lo; a < n; ++a) {
            cur.push_back(a);
            rec(a);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

Rational factorial(int n) {
    Rational f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

DiagramMaps build_diagram(int n) {
    DiagramMaps d;
    d.n = n;
    d.sym_basis = multisets(n, n);
    std::map<std::vector<int>, int> sym_index;
    for (std::size_t i = 0; i < d.sym_basis.size(); ++i) sym_index[d.sym_basis[i]] = int(i);
    const int G = n * n, N = sl_dim(n);
    const int dimS = int(d.sym_basis.size());
    const int dimLgl = int(binom(G, n)), dimLsl = int(binom(N, n - 1));
    Rational inv_fact = Rational(1) / factorial(n);

    // j(x_a1 ... x_an) = (1/n!) sum_sigma E_{a_sigma(1),1} ^ ... ^ E_{a_sigma(n),n}
    std::vector<std::map<int, Rational>> jc(dimS);
    for (int s = 0; s < dimS; ++s) {
        const auto& a = d.sym_basis[s];
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<int> idx(n);
            for (int k = 0; k < n; ++k) idx[k] = a[perm[k]] * n + k;
            int sg = sort_with_sign(idx);
            if (sg == 0) continue;
            Rational& slot = jc[s][int(colex_rank(idx))];
            if (sg > 0) slot += inv_fact;
            else slot -= inv_fact;
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    d.j = from_columns(dimLgl, jc);

    // rho(E_{a1 b1} ^ ... ^ E_{an bn}) = sign(b) x_a1 ... x_an when b is a permutation
    auto glsub = colex_subsets(G, n);
    std::vector<std::map<int, Rational>> rc(dimLgl);
    for (int c = 0; c < dimLgl; ++c) {
        std::vector<int> a(n), b(n);
        for (int i = 0; i < n; ++i) { a[i] = glsub[c][i] / n; b[i] = glsub[c][i] % n; }
        int sg = sort_with_sign(b);
        if (sg == 0) continue;
        std::sort(a.begin(), a.end());
        rc[c][sym_index[a]] += sg;
    }
    d.rho = from_columns(dimS, rc);

    // alpha(Y_1 ^ ... ^ Y_{n-1}) = I ^ Y_1 ^ ... ^ Y_{n-1}
    SparseVec I;
    for (int k = 0; k < n; ++k) I.emplace_back(k * n + k, Rational(1));
    auto slsub = colex_subsets(N, n - 1);
    std::vector<std::map<int, Rational>> ac(dimLsl);
    for (int c = 0; c < dimLsl; ++c) {
        std::vector<SparseVec> f{I};
        for (int s : slsub[c]) f.push_back(sl_in_gl(n, s));
        wedge_expand(f, Rational(1), ac[c]);
    }
    d.alpha = from_columns(dimLgl, ac);

    // beta(X_1 ^ ... ^ X_n) = (1/n) sum_j (-1)^(j-1) tr(X_j) pX_1 ^ .. ^ pX_j-hat ^ .. ^ pX_n
    std::vector<SparseVec> p_gl(G);
    for (int g = 0; g < G; ++g) p_gl[g] = sparse(sl_coords(project_sl(E(n, g / n, g % n))));
    std::vector<std::map<int, Rational>> bc(dimLgl);
    Rational inv_n = Rational(1) / Rational(n);
    for (int c = 0; c < dimLgl; ++c) {
        const auto& g = glsub[c];
        for (int jj = 0; jj < n; ++jj) {
            if (g[jj] / n != g[jj] % n) continue;   // trace zero
            std::vector<SparseVec> f;
            for (int i = 0; i < n; ++i)
                if (i != jj) f.push_back(p_gl[g[i]]);
            wedge_expand(f, jj % 2 == 0 ? inv_n : Rational(-inv_n), bc[c]);
        }
    }
    d.beta = from_columns(dimLsl, bc);

    d.i = compose(d.beta, d.j);
    d.pi = compose(d.rho, d.alpha);
    d.i_pi = compose(d.i, d.pi);
    // t_n(t) / t_n(i o pi(t)) = n! on the diagonal Cartan for these
    // normalizations of beta and the trace pairing; that ratio is what makes
    // t_n o tau vanish on the cone.
    d.tau_coeff = factorial(n);
    Rational c = factorial(n - 1) / Rational(n);
    d.printed_tau_coeff = (n - 1) % 2 == 0 ? c : Rational(-c);
    return d;
}

}  // namespace

std::vector<Rational> DiagramMaps::tau(const std::vector<Rational>& wedge) const {
    auto ip = i_pi.apply(wedge);
    std::vector<Rational> out = wedge;
    for (std::size_t k = 0; k < out.size(); ++k) out[k] -= tau_coeff * ip[k];
    return out;
}

std::vector<Rational> DiagramMaps::sym_power(const std::vector<Rational>& v) const {
    // (sum v_i x_i)^n: multinomial coefficient times the product of v's
    std::vector<Rational> out;
    for (auto& m : sym_basis) {
        Rational c = factorial(n);
        Rational prod = 1;
        std::vector<int> cnt(n, 0);
        for (int a : m) { ++cnt[a]; prod *= v[a]; }
        for (int a = 0; a < n; ++a) c /= factorial(cnt[a]);
        out.push_back(c * prod);
    }
    return out;
}

const DiagramMaps& diagram_maps(int n) {
    static std::mutex mu;
    static std::map<int, DiagramMaps> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_diagram(n)).first;
    return it->second;
}

DiagramReport diagram_identities(int n) {
    const DiagramMaps& d = diagram_maps(n);
    DiagramReport rep;
    rep.rho_j = rep.beta_alpha = rep.pi_i = true;
    int dimS = int(d.sym_basis.size()), dimL = d.alpha.cols;
    auto unit = [](int dim, int k) {
        std::vector<Rational> e(dim, Rational(0));
        e[k] = 1;
        return e;
    };
    Rational inv_n = Rational(1) / Rational(n);
    std::vector<std::vector<Rational>> sym_inputs;
    for (int k = 0; k < dimS; ++k) sym_inputs.push_back(unit(dimS, k));
    std::mt19937 rng(1729);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rational> v(n);
        for (auto& x : v) x = int(rng() % 7) - 3;
        sym_inputs.push_back(d.sym_power(v));
    }
    for (auto& s : sym_inputs) {
        rep.rho_j &= d.rho.apply(d.j.apply(s)) == s;
        auto back = d.pi.apply(d.i.apply(s));
        for (auto& x : back) x *= n;
        rep.pi_i &= back == s;
        ++rep.inputs_checked;
    }
    std::vector<std::vector<Rational>> wedge_inputs;
    for (int k = 0; k < dimL; ++k) wedge_inputs.push_back(unit(dimL, k));
    for (int t = 0; t < 10; ++t) {
        Mat rows(0, sl_dim(n));
        for (int r = 0; r + 1 < n; ++r) {
            std::vector<Rational> y(sl_dim(n));
            for (auto& x : y) x = int(rng() % 5) - 2;
            rows.append_row(y);
        }
        wedge_inputs.push_back(wedge_rows(rows));
    }
    for (auto& w : wedge_inputs) {
        rep.beta_alpha &= d.beta.apply(d.alpha.apply(w)) == w;
        ++rep.inputs_checked;
    }
    (void)inv_n;
    return rep;
}

// ---- determinant systems ----

namespace {
// M[k][j] = trace(b_k x^(j+1)), k over the sl basis, j = 0..n-2
std::vector<std::vector<Rational>> trace_table(const Mat& x) {
    int n = x.rows(), N = sl_dim(n);
    std::vector<Mat> pw{x};
    for (int j = 1; j + 1 < n; ++j) pw.push_back(pw.back() * x);
    std::vector<std::vector<Rational>> M(N, std::vector<Rational>(n - 1));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j + 1 < n; ++j) {
            const Mat& P = pw[j];
            if (k < n * (n - 1)) {
                int a = k / (n - 1), r = k % (n - 1);
                int b = r < a ? r : r + 1;
                M[k][j] = P(b, a);   // trace(E_ab P) = P_ba
            } else {
                int m = k - n * (n - 1);
                M[k][j] = P(m, m) - P(m + 1, m + 1);
            }
        }
    return M;
}

Rational det_rows(const std::vector<std::vector<Rational>>& M, const std::vector<int>& S) {
    int k = int(S.size());
    Mat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = M[S[i]][j];
    return det(m);
}
}  // namespace

Rational wedge_pairing(const std::vector<Mat>& z, const std::vector<Mat>& w) {
    int k = int(z.size());
    Mat m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = trace_form(z[i], w[j]);
    return det(m);
}

Rational t_n_eval(const std::vector<Mat>& z, const Mat& x) {
    int n = x.rows();
    if (int(z.size()) != n - 1) throw std::invalid_argument("t_n_eval: need n-1 matrices");
    std::vector<Mat> pw{x};
    for (int j = 1; j + 1 < n; ++j) pw.push_back(pw.back() * x);
    return wedge_pairing(z, pw);
}

Rational t_n_eval_wedge(int n, const std::vector<Rational>& wedge, const Mat& x) {
    auto M = trace_table(x);
    auto subsets = colex_subsets(sl_dim(n), n - 1);
    Rational s = 0;
    for (std::size_t c = 0; c < subsets.size(); ++c)
        if (!is_zero(wedge[c])) s += wedge[c] * det_rows(M, subsets[c]);
    return s;
}

Rational t_n_twisted_eval(const LieSubspace& a, const Mat& x) {
    int n = a.n();
    const DiagramMaps& d = diagram_maps(n);
    return t_n_eval_wedge(n, d.tau(plucker(a).coords), x);
}

Rational s_n_eval(const std::vector<Rational>& v, const Mat& x) {
    int n = x.rows();
    Mat m(n, n);
    std::vector<Rational> cur = v;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) m(i, j) = cur[i];
        std::vector<Rational> nxt(n, Rational(0));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) nxt[i] += x(i, k) * cur[k];
        cur = nxt;
    }
    return det(m);
}

Rational s_n_dual_eval(const std::vector<Rational>& e, const Mat& x) {
    return s_n_eval(e, x.transpose());
}

MPoly t_n_on_diagonal(int n, const std::vector<Rational>& wedge) {
    // x_{n-1} = -(x_0 + ... + x_{n-2})
    std::vector<MPoly> xs;
    MPoly last;
    for (int i = 0; i + 1 < n; ++i) {
        xs.push_back(MPoly::var(i));
        last -= xs.back();
    }
    xs.push_back(last);
    int N = sl_dim(n);
    std::vector<std::vector<MPoly>> M(N, std::vector<MPoly>(n - 1));
    for (int m = 0; m + 1 < n; ++m) {
        MPoly a = xs[m], b = xs[m + 1];
        MPoly pa = a, pb = b;
        for (int j = 0; j + 1 < n; ++j) {
            M[n * (n - 1) + m][j] = pa - pb;
            pa = pa * a;
            pb = pb * b;
        }
    }
    auto subsets = colex_subsets(N, n - 1);
    MPoly s;
    for (std::size_t c = 0; c < subsets.size(); ++c) {
        if (is_zero(wedge[c])) continue;
        std::vector<std::vector<MPoly>> sub;
        for (int r : subsets[c]) sub.push_back(M[r]);
        s += mdet(sub) * wedge[c];
    }
    return s;
}

// ---- t4 rank ----

std::vector<Mat> wbar4_points(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Mat> pts;
    while (int(pts.size()) < count) {
        Mat g(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) g(i, j) = int(rng() % 7) - 3;
        if (is_zero(det(g))) continue;
        int b = int(rng() % 9) - 4, c = int(rng() % 9) - 4;
        if (b == 0 || c == 0) continue;
        Mat D = diag({Rational(0), Rational(0), Rational(b), Rational(c)});
        pts.push_back(project_sl(g * D * inverse(g)));
    }
    return pts;
}

namespace {

using MPolyMat = std::vector<std::vector<MPoly>>;

MPolyMat mpoly_mul(const MPolyMat& a, const MPolyMat& b) {
    int n = int(a.size());
    MPolyMat r(n, std::vector<MPoly>(n));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!b[k][j].zero()) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

std::vector<Mat> integer_points(int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Mat> pts;
    for (int t = 0; t < count; ++t) {
        Mat x(4, 4);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) x(i, j) = int(rng() % 11) - 5;
        x(3, 3) = -(x(0, 0) + x(1, 1) + x(2, 2));
        pts.push_back(x);
    }
    return pts;
}

template <class F>
void parallel_for(int count, int jobs, F f) {
    jobs = std::max(1, jobs);
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> th;
    for (int w = 0; w < jobs; ++w)
        th.emplace_back([&, w] {
            for (int i = w; i < count; i += jobs) f(i);
        });
    for (auto& t : th) t.join();
}

}  // namespace

T4Report t4_rank(int eval_points, int jobs) {
    const int n = 4, N = 15;
    T4Report rep;
    auto subsets = colex_subsets(N, 3);
    const int L = int(subsets.size());

    // symbolic route: X = sum_k c_k b_k with the 15 sl coordinates as variables
    MPolyMat X(n, std::vector<MPoly>(n));
    {
        int idx = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) X[i][j] = MPoly::var(idx++);
        for (int m = 0; m + 1 < n; ++m) {
            X[m][m] += MPoly::var(12 + m);
            X[m + 1][m + 1] -= MPoly::var(12 + m);
        }
    }
    std::vector<MPolyMat> pw{X};
    pw.push_back(mpoly_mul(X, X));
    pw.push_back(mpoly_mul(pw[1], X));
    std::vector<std::vector<MPoly>> T(N, std::vector<MPoly>(3));
    for (int k = 0; k < N; ++k)
        for (int j = 0; j < 3; ++j) {
            if (k < 12) {
                int a = k / 3, r = k % 3;
                int b = r < a ? r : r + 1;
                T[k][j] = pw[j][b][a];
            } else {
                int m = k - 12;
                T[k][j] = pw[j][m][m] - pw[j][m + 1][m + 1];
            }
        }
    std::vector<MPoly> polys(L);
    parallel_for(L, jobs, [&](int c) {
        std::vector<std::vector<MPoly>> sub;
        for (int r : subsets[c]) sub.push_back(T[r]);
        polys[c] = mdet(sub);
    });

    std::map<std::vector<int>, std::vector<int>> blocks;
    for (int c = 0; c < L; ++c) blocks[wedge_weight(n, subsets[c])].push_back(c);
    ThetaKernel tk = theta_kernel(4);
    Mat t4_kernel(0, L);
    bool injective = true;
    for (auto& [w, members] : blocks) {
        std::map<MPoly::Key, int> col;
        for (int c : members)
            for (auto& [key, x] : polys[c].terms()) col.emplace(key, 0);
        int ci = 0;
        for (auto& [key, v] : col) v = ci++;
        // rows = members, cols = monomials; kernel of the transpose gives relations
        Mat m(int(col.size()), int(members.size()));
        for (std::size_t r = 0; r < members.size(); ++r)
            for (auto& [key, x] : polys[members[r]].terms()) m(col[key], int(r)) = x;
        int rk = col.empty() ? 0 : rank(m);
        rep.symbolic_rank += rk;
        Mat k = col.empty() ? Mat::identity(int(members.size())) : kernel_basis(m);
        Mat stacked(0, int(members.size()));
        for (int i = 0; i < k.rows(); ++i) {
            std::vector<Rational> v(L, Rational(0));
            for (std::size_t j = 0; j < members.size(); ++j) v[members[j]] = k(i, int(j));
            t4_kernel.append_row(v);
            stacked.append_row(k.row(i));
        }
        // t4 restricted to ker Theta: kernels must meet only in 0
        auto& tcols = tk.blocks.at(w);
        for (int i = 0; i < tk.basis.rows(); ++i) {
            bool here = false;
            for (int c : tcols)
                if (!is_zero(tk.basis(i, c))) { here = true; break; }
            if (!here) continue;
            std::vector<Rational> v;
            for (int c : members) v.push_back(tk.basis(i, c));
            stacked.append_row(v);
        }
        if (stacked.rows() > 0 && rank(stacked) != stacked.rows()) injective = false;
    }
    rep.kernel_dim = t4_kernel.rows();
    rep.injective_on_theta_kernel = injective;

    // evaluation route: rank mod p of the L x M evaluation matrix
    auto pts = integer_points(eval_points, 0x5eed0001ULL);
    rep.eval_points = eval_points;
    std::vector<std::uint64_t> ev(std::size_t(L) * eval_points);
    parallel_for(eval_points, jobs, [&](int p) {
        auto M = trace_table(pts[p]);
        for (int c = 0; c < L; ++c) {
            Rational d = det_rows(M, subsets[c]);
            ev[std::size_t(c) * eval_points + p] = to_mod_p(d.get_num());
        }
    });
    rep.eval_rank_mod_p = rank_mod_p(ev, L, eval_points);

    // exact kernel re-evaluated at fresh points
    auto fresh = integer_points(50, 0x5eed0002ULL);
    rep.fresh_points = int(fresh.size());
    rep.kernel_zero_at_fresh = true;
    for (auto& x : fresh) {
        auto M = trace_table(x);
        std::vector<Rational> vals(L);
        for (int c = 0; c < L; ++c) vals[c] = det_rows(M, subsets[c]);
        for (int i = 0; i < t4_kernel.rows(); ++i) {
            Rational s = 0;
            for (int c = 0; c < L; ++c)
                if (!is_zero(t4_kernel(i, c))) s += t4_kernel(i, c) * vals[c];
            if (!is_zero(s)) rep.kernel_zero_at_fresh = false;
        }
    }

    // every t_4 image vanishes on non-regular x; sanity check on ker Theta
    auto wpts = wbar4_points(30, 4242);
    rep.wbar_points = int(wpts.size());
    rep.theta_kernel_vanishes_on_wbar = true;
    for (auto& x : wpts) {
        auto M = trace_table(x);
        std::vector<Rational> vals(L);
        for (int c = 0; c < L; ++c) vals[c] = det_rows(M, subsets[c]);
        for (int i = 0; i < tk.basis.rows(); ++i) {
            Rational s = 0;
            for (int c = 0; c < L; ++c)
                if (!is_zero(tk.basis(i, c))) s += tk.basis(i, c) * vals[c];
            if (!is_zero(s)) rep.theta_kernel_vanishes_on_wbar = false;
        }
    }

    return rep;
}

}  // namespace redn
