#include "redn/lie.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace redn {

Mat E(int n, int i, int j) {
    Mat m(n, n);
    m(i, j) = 1;
    return m;
}

Mat diag(const std::vector<Rational>& d) {
    int n = int(d.size());
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = d[i];
    return m;
}

Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

Mat project_sl(const Mat& x) {
    int n = x.rows();
    Rational s = x.trace() / Rational(n);
    Mat r = x;
    for (int i = 0; i < n; ++i) r(i, i) -= s;
    return r;
}

Rational trace_form(const Mat& x, const Mat& y) {
    Rational s = 0;
    int n = x.rows();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) s += x(i, k) * y(k, i);
    return s;
}

std::vector<Rational> flatten(const Mat& x) { return x.data(); }

Mat unflatten(int n, const std::vector<Rational>& v) {
    if (int(v.size()) != n * n) throw std::invalid_argument("unflatten: wrong length");
    Mat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = v[std::size_t(i) * n + j];
    return m;
}

int sl_dim(int n) { return n * n - 1; }

const std::vector<Mat>& sl_basis(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Mat>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Mat> b;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) b.push_back(E(n, i, j));
    for (int k = 0; k + 1 < n; ++k) b.push_back(E(n, k, k) - E(n, k + 1, k + 1));
    return cache.emplace(n, std::move(b)).first->second;
}

std::vector<Rational> sl_coords(const Mat& x) {
    int n = x.rows();
    if (!is_zero(x.trace())) throw std::invalid_argument("sl_coords: matrix is not traceless");
    std::vector<Rational> c;
    c.reserve(n * n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) c.push_back(x(i, j));
    Rational h = 0;
    for (int k = 0; k + 1 < n; ++k) {
        h += x(k, k);
        c.push_back(h);
    }
    return c;
}

Mat from_sl_coords(int n, const std::vector<Rational>& c) {
    if (int(c.size()) != n * n - 1) throw std::invalid_argument("from_sl_coords: wrong length");
    Mat m(n, n);
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) m(i, j) = c[idx++];
    for (int k = 0; k + 1 < n; ++k) {
        m(k, k) += c[idx];
        m(k + 1, k + 1) -= c[idx];
        ++idx;
    }
    return m;
}

std::vector<int> sl_basis_weight(int n, int k) {
    std::vector<int> w(n, 0);
    if (k < n * (n - 1)) {
        int i = k / (n - 1), r = k % (n - 1);
        int j = r < i ? r : r + 1;
        w[i] += 1;
        w[j] -= 1;
    }
    return w;
}

// ---- LieSubspace ----

namespace {
Mat rows_of(const std::vector<Mat>& gens, int n) {
    Mat m(0, n * n);
    for (auto& g : gens) {
        if (g.rows() != n || g.cols() != n) throw std::invalid_argument("generator of wrong size");
        m.append_row(g.data());
    }
    if (gens.empty()) m = Mat(0, n * n);
    return m;
}
}  // namespace

LieSubspace::LieSubspace(int n, std::vector<Mat> basis) : n_(n), basis_(std::move(basis)) {
    auto rr = rref(rows_of(basis_, n));
    if (rr.rank != int(basis_.size())) throw std::invalid_argument("LieSubspace: basis is linearly dependent");
    canon_ = rr.reduced;
}

LieSubspace LieSubspace::span(int n, const std::vector<Mat>& gens) {
    auto rr = rref(rows_of(gens, n));
    LieSubspace s;
    s.n_ = n;
    s.canon_ = rr.reduced;
    for (int i = 0; i < rr.rank; ++i) s.basis_.push_back(unflatten(n, rr.reduced.row(i)));
    return s;
}

bool LieSubspace::contains(const Mat& x) const {
    Mat m = canon_;
    m.append_row(x.data());
    return rank(m) == dim();
}

bool LieSubspace::contains(const LieSubspace& s) const {
    Mat m = canon_;
    for (auto& b : s.basis()) m.append_row(b.data());
    return rank(m) == dim();
}

Mat LieSubspace::generic_combination(const std::vector<Rational>& coeffs) const {
    Mat x(n_, n_);
    for (int i = 0; i < dim(); ++i) x += basis_[i] * coeffs.at(i);
    return x;
}

LieSubspace LieSubspace::conjugate(const Mat& g, const Mat& g_inv) const {
    std::vector<Mat> b;
    for (auto& x : basis_) b.push_back(g_inv * x * g);
    return LieSubspace(n_, b);
}

LieSubspace LieSubspace::transpose() const {
    std::vector<Mat> b;
    for (auto& x : basis_) b.push_back(x.transpose());
    return LieSubspace(n_, b);
}

bool is_traceless_subspace(const LieSubspace& a) {
    for (auto& x : a.basis())
        if (!is_zero(x.trace())) return false;
    return true;
}

bool pairwise_commute(const LieSubspace& a) {
    auto& b = a.basis();
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = i + 1; j < b.size(); ++j)
            if (!bracket(b[i], b[j]).is_zero_matrix()) return false;
    return true;
}

// ---- centralizers and Jordan data ----

LieSubspace centralizer(const LieSubspace& a, bool traceless_ambient) {
    int n = a.n();
    int N = n * n;
    // unknown y (flattened); equations [x, y] = 0 for every basis x
    Mat sys(0, N);
    for (auto& x : a.basis()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                // ([x,y])_ij = sum_k x_ik y_kj - y_ik x_kj
                std::vector<Rational> row(N, Rational(0));
                for (int k = 0; k < n; ++k) {
                    row[k * n + j] += x(i, k);
                    row[i * n + k] -= x(k, j);
                }
                sys.append_row(row);
            }
    }
    if (traceless_ambient) {
        std::vector<Rational> row(N, Rational(0));
        for (int i = 0; i < n; ++i) row[i * n + i] = 1;
        sys.append_row(row);
    }
    if (sys.rows() == 0) sys = Mat(0, N);
    auto k = kernel_basis(sys);
    std::vector<Mat> b;
    for (int i = 0; i < k.rows(); ++i) b.push_back(unflatten(n, k.row(i)));
    return LieSubspace::span(n, b);
}

LieSubspace centralizer(const Mat& x, bool traceless_ambient) {
    return centralizer(LieSubspace::span(x.rows(), {x}), traceless_ambient);
}

bool is_regular(const Mat& x) { return centralizer(x, false).dim() == x.rows(); }

std::vector<JordanLayer> jordan_data(const Mat& x) {
    int n = x.rows();
    auto layers = squarefree_layers(charpoly(x));
    std::vector<JordanLayer> out;
    for (std::size_t k = 0; k < layers.size(); ++k) {
        const PolyQ& s = layers[k];
        if (s.degree() <= 0) continue;
        int mult = int(k) + 1;
        Mat sx = eval_poly_at(s, x);
        // nullity of s(x)^j; stabilizes at j = mult (largest possible block)
        std::vector<int> nul{0};
        Mat P = Mat::identity(n);
        for (int j = 1; j <= mult; ++j) {
            P = P * sx;
            nul.push_back(n - rank(P));
        }
        // blocks of size >= j, counted over all roots of s
        std::vector<int> ge;
        for (int j = 1; j <= mult; ++j) ge.push_back(nul[j] - nul[j - 1]);
        std::vector<int> blocks;
        for (int j = 1; j <= mult; ++j) {
            int exact = ge[j - 1] - (j < mult ? ge[j] : 0);
            for (int c = 0; c < exact; ++c) blocks.push_back(j);
        }
        std::sort(blocks.rbegin(), blocks.rend());
        out.push_back({mult, s, blocks});
    }
    return out;
}

bool is_nonregular_projected(const Mat& x) {
    int n = x.rows();
    Mat m(0, n * n);
    Mat P = x;
    m.append_row(x.data());
    for (int k = 2; k < n; ++k) {
        P = P * x;
        m.append_row(project_sl(P).data());
    }
    return rank(m) < n - 1;
}

bool is_nilpotent(const Mat& x) {
    Mat P = x;
    for (int k = 1; k < x.rows(); ++k) P = P * x;
    return P.is_zero_matrix();
}

int associative_span_dim(const LieSubspace& a) {
    int n = a.n();
    std::vector<Mat> gens{Mat::identity(n)};
    for (auto& b : a.basis()) gens.push_back(b);
    LieSubspace s = LieSubspace::span(n, gens);
    while (true) {
        std::vector<Mat> g = s.basis();
        for (auto& x : s.basis())
            for (auto& y : a.basis()) g.push_back(x * y);
        LieSubspace t = LieSubspace::span(n, g);
        if (t.dim() == s.dim()) return s.dim();
        s = t;
    }
}

}  // namespace redn
