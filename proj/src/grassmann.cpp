#include "redn/grassmann.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace redn {

long binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<std::vector<int>> colex_subsets(int N, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    if (k > N) return out;
    while (true) {
        out.push_back(s);
        // colex successor: bump the first entry that can move up
        int i = 0;
        while (i < k && s[i] + 1 == (i + 1 < k ? s[i + 1] : N)) ++i;
        if (i == k) break;
        ++s[i];
        for (int j = 0; j < i; ++j) s[j] = j;
    }
    return out;
}

long colex_rank(const std::vector<int>& s) {
    long r = 0;
    for (std::size_t i = 0; i < s.size(); ++i) r += binom(s[i], int(i) + 1);
    return r;
}

bool PluckerVector::zero() const {
    for (auto& c : coords)
        if (!is_zero(c)) return false;
    return true;
}

PluckerVector PluckerVector::normalized() const {
    PluckerVector p = *this;
    for (auto& c : coords)
        if (!is_zero(c)) {
            Rational s = c;
            for (auto& x : p.coords) x /= s;
            break;
        }
    return p;
}

bool PluckerVector::projectively_equal(const PluckerVector& o) const {
    return N == o.N && k == o.k && normalized().coords == o.normalized().coords;
}

Rational PluckerVector::at(const std::vector<int>& idx) const {
    std::vector<int> s = idx;
    int sign = 1;
    // insertion sort, tracking parity; repeated index gives 0
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
            if (s[j - 1] == s[j]) return 0;
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    Rational c = coords[colex_rank(s)];
    return sign > 0 ? c : Rational(-c);
}

namespace {

template <class T>
T minor_det(const std::function<const T&(int, int)>& a, const std::vector<int>& cols) {
    int k = int(cols.size());
    if (k == 1) return a(0, cols[0]);
    if (k == 2) return a(0, cols[0]) * a(1, cols[1]) - a(0, cols[1]) * a(1, cols[0]);
    if (k == 3)
        return a(0, cols[0]) * (a(1, cols[1]) * a(2, cols[2]) - a(1, cols[2]) * a(2, cols[1]))
             - a(0, cols[1]) * (a(1, cols[0]) * a(2, cols[2]) - a(1, cols[2]) * a(2, cols[0]))
             + a(0, cols[2]) * (a(1, cols[0]) * a(2, cols[1]) - a(1, cols[1]) * a(2, cols[0]));
    Matrix<T> m(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) m(i, j) = a(i, cols[j]);
    return det(m);
}

// Laplace expansion along the first row, for division-free rings.
PolyQ poly_minor(const std::vector<std::vector<PolyQ>>& rows, const std::vector<int>& cols, int r0) {
    int k = int(cols.size());
    if (k == 1) return rows[r0][cols[0]];
    PolyQ s;
    for (int j = 0; j < k; ++j) {
        if (rows[r0][cols[j]].zero()) continue;
        std::vector<int> rest;
        for (int i = 0; i < k; ++i)
            if (i != j) rest.push_back(cols[i]);
        PolyQ t = rows[r0][cols[j]] * poly_minor(rows, rest, r0 + 1);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

}  // namespace

PluckerVector plucker_rows(const Mat& rows) {
    PluckerVector p;
    p.N = rows.cols();
    p.k = rows.rows();
    std::function<const Rational&(int, int)> acc = [&](int i, int j) -> const Rational& { return rows(i, j); };
    for (auto& s : colex_subsets(p.N, p.k)) p.coords.push_back(minor_det<Rational>(acc, s));
    if (p.zero()) throw std::invalid_argument("plucker: rows are dependent");
    return p;
}

PluckerVector plucker(const LieSubspace& a) {
    Mat rows(0, sl_dim(a.n()));
    for (auto& b : a.basis()) rows.append_row(sl_coords(b));
    return plucker_rows(rows);
}

Mat rows_from_plucker(const PluckerVector& p) {
    auto subsets = colex_subsets(p.N, p.k);
    std::size_t piv = 0;
    while (piv < p.coords.size() && is_zero(p.coords[piv])) ++piv;
    if (piv == p.coords.size()) throw std::invalid_argument("rows_from_plucker: zero vector");
    const auto& I = subsets[piv];
    Rational pI = p.coords[piv];
    // row r: entry j = p(I with i_r replaced by j) / p(I); identity on I
    Mat m(p.k, p.N);
    for (int r = 0; r < p.k; ++r)
        for (int j = 0; j < p.N; ++j) {
            std::vector<int> idx = I;
            idx[r] = j;
            m(r, j) = p.at(idx) / pI;
        }
    return m;
}

LieSubspace CurveSubspace::at(const Rational& t) const {
    std::vector<Mat> b;
    for (auto& x : basis) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = x(i, j).eval(t);
        b.push_back(m);
    }
    return LieSubspace(n, b);
}

PolyMat to_polymat(const Mat& m) {
    PolyMat p(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) p(i, j) = RatFunc(m(i, j));
    return p;
}

PolyMat conjugate_curve(const PolyMat& x, const PolyMat& g, const PolyMat& g_inv) {
    return g_inv * x * g;
}

CurveSubspace conjugate_curve(const LieSubspace& a, const PolyMat& g, const PolyMat& g_inv) {
    CurveSubspace c;
    c.n = a.n();
    for (auto& x : a.basis()) c.basis.push_back(g_inv * to_polymat(x) * g);
    return c;
}

CurveSubspace transpose_curve(const CurveSubspace& c) {
    CurveSubspace d = c;
    for (auto& x : d.basis) x = x.transpose();
    return d;
}

LieSubspace limit_subspace(const CurveSubspace& c) {
    int n = c.n, k = c.k(), N = n * n;
    // clear denominators row by row: a polynomial basis of the same family
    std::vector<std::vector<PolyQ>> rows(k, std::vector<PolyQ>(N));
    for (int r = 0; r < k; ++r) {
        PolyQ l(Rational(1));
        for (int e = 0; e < N; ++e) {
            const PolyQ& d = c.basis[r].data()[e].den();
            if (d.degree() > 0) l = PolyQ::divmod(l * d, PolyQ::gcd(l, d)).first;
        }
        for (int e = 0; e < N; ++e) {
            const RatFunc& x = c.basis[r].data()[e];
            rows[r][e] = PolyQ::divmod(x.num() * l, x.den()).first;
        }
    }
    auto subsets = colex_subsets(N, k);
    std::vector<PolyQ> minors;
    minors.reserve(subsets.size());
    int vmin = std::numeric_limits<int>::max();
    for (auto& s : subsets) {
        minors.push_back(poly_minor(rows, s, 0));
        if (!minors.back().zero()) vmin = std::min(vmin, minors.back().valuation());
    }
    if (vmin == std::numeric_limits<int>::max())
        throw std::invalid_argument("limit_subspace: family has rank below k (all Pluecker coordinates vanish)");
    PluckerVector p;
    p.N = N;
    p.k = k;
    for (auto& m : minors) p.coords.push_back(m.coeff(vmin));
    Mat r = rows_from_plucker(p);
    std::vector<Mat> b;
    for (int i = 0; i < k; ++i) b.push_back(unflatten(n, r.row(i)));
    LieSubspace lim(n, b);
    if (!plucker_rows(lim.canonical()).projectively_equal(p))
        throw std::logic_error("limit_subspace: limiting Pluecker vector is not decomposable");
    return lim;
}

bool torus_invariant(const LieSubspace& a) {
    int n = a.n();
    int total = 0;
    // diagonal part: elements of a with vanishing off-diagonal entries
    Mat off(0, n * (n - 1));
    for (auto& x : a.basis()) {
        std::vector<Rational> v;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) v.push_back(x(i, j));
        off.append_row(v);
    }
    total += a.dim() - rank(off);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && a.contains(E(n, i, j))) ++total;
    return total == a.dim();
}

}  // namespace redn
