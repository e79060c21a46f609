#pragma once
// Exact arithmetic substrate: rationals, univariate polynomials, rational
// functions in one parameter, and dense matrices over any of these fields.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace redn {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// mpq_class(a, b) is not canonicalized; always build fractions through this.
inline Rational frac(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(const Rational& c);
    explicit PolyQ(std::vector<Rational> coeffs);
    static PolyQ monomial(const Rational& c, int degree);
    static PolyQ x() { return monomial(1, 1); }

    int degree() const { return int(c_.size()) - 1; }   // -1 for zero
    bool zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    Rational lead() const { return c_.empty() ? Rational(0) : c_.back(); }
    int valuation() const;     // lowest nonzero degree; -1 for zero
    Rational eval(const Rational& t) const;
    PolyQ derivative() const;
    PolyQ monic() const;
    PolyQ shift_down(int k) const;   // exact division by x^k

    PolyQ& operator+=(const PolyQ& o);
    PolyQ& operator-=(const PolyQ& o);
    PolyQ& operator*=(const PolyQ& o);
    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const PolyQ& b) { return a *= b; }
    PolyQ operator-() const;
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }

    static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b);
    static PolyQ gcd(PolyQ a, PolyQ b);   // monic, gcd(0,0) = 0

    std::string str(const char* var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

inline bool is_zero(const PolyQ& p) { return p.zero(); }

// num/den with gcd 1 and monic denominator.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFunc(const PolyQ& p) : num_(p), den_(Rational(1)) {}
    RatFunc(PolyQ num, PolyQ den);
    static RatFunc t() { return RatFunc(PolyQ::x()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool zero() const { return num_.zero(); }
    int valuation() const;            // ord_0(num) - ord_0(den); throws on zero
    Rational eval(const Rational& t) const;   // throws if den vanishes
    Rational leading_at_zero() const;   // coefficient of t^valuation

    RatFunc& operator+=(const RatFunc& o);
    RatFunc& operator-=(const RatFunc& o);
    RatFunc& operator*=(const RatFunc& o);
    RatFunc& operator/=(const RatFunc& o);
    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
    RatFunc operator-() const;
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    PolyQ num_, den_;
};

inline bool is_zero(const RatFunc& r) { return r.zero(); }

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols) : r_(rows), c_(cols), a_(std::size_t(rows) * cols, T(0)) {}
    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        int r = int(rows.size()), c = r ? int(rows[0].size()) : 0;
        Matrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (int(rows[i].size()) != c) throw std::invalid_argument("ragged matrix");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[std::size_t(i) * c_ + j]; }
    const T& operator()(int i, int j) const { return a_[std::size_t(i) * c_ + j]; }
    const std::vector<T>& data() const { return a_; }

    std::vector<T> row(int i) const {
        return std::vector<T>(a_.begin() + std::size_t(i) * c_, a_.begin() + std::size_t(i + 1) * c_);
    }
    void append_row(const std::vector<T>& v) {
        if (r_ == 0 && c_ == 0) c_ = int(v.size());
        if (int(v.size()) != c_) throw std::invalid_argument("row length mismatch");
        a_.insert(a_.end(), v.begin(), v.end());
        ++r_;
    }

    bool is_zero_matrix() const {
        for (auto& x : a_) if (!is_zero(x)) return false;
        return true;
    }
    T trace() const {
        T s(0);
        for (int i = 0; i < std::min(r_, c_); ++i) s += (*this)(i, i);
        return s;
    }
    Matrix transpose() const {
        Matrix m(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }

    Matrix& operator+=(const Matrix& o) { check_same(o); for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i]; return *this; }
    Matrix& operator-=(const Matrix& o) { check_same(o); for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i]; return *this; }
    Matrix& operator*=(const T& s) { for (auto& x : a_) x *= s; return *this; }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    Matrix operator-() const { Matrix m = *this; for (auto& x : m.a_) x = -x; return m; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.c_ != b.r_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
            }
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix shape mismatch");
    }
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using Mat = Matrix<Rational>;
using PolyMat = Matrix<RatFunc>;

template <class T>
struct RrefResult {
    Matrix<T> reduced;          // rank rows, reduced echelon
    int rank = 0;
    std::vector<int> pivots;
};

// Gauss-Jordan, pivot = first nonzero entry scanning columns left to right.
template <class T>
RrefResult<T> rref(const Matrix<T>& m) {
    Matrix<T> a = m;
    int R = a.rows(), C = a.cols();
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < C && r < R; ++c) {
        int p = -1;
        for (int i = r; i < R; ++i)
            if (!is_zero(a(i, c))) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < C; ++j) std::swap(a(p, j), a(r, j));
        T inv = T(1) / a(r, c);
        for (int j = c; j < C; ++j) a(r, j) *= inv;
        for (int i = 0; i < R; ++i) {
            if (i == r || is_zero(a(i, c))) continue;
            T f = a(i, c);
            for (int j = c; j < C; ++j)
                if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    RrefResult<T> out;
    out.rank = r;
    out.pivots = piv;
    out.reduced = Matrix<T>(r, C);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < C; ++j) out.reduced(i, j) = a(i, j);
    return out;
}

template <class T>
int rank(const Matrix<T>& m) { return rref(m).rank; }

// Rows span {x : m x^T = 0}; one row per free column, with a 1 there.
template <class T>
Matrix<T> kernel_basis(const Matrix<T>& m) {
    auto rr = rref(m);
    int C = m.cols();
    std::vector<char> is_piv(C, 0);
    for (int p : rr.pivots) is_piv[p] = 1;
    Matrix<T> k(0, C);
    for (int f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(C, T(0));
        v[f] = T(1);
        for (int i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, f);
        k.append_row(v);
    }
    return k;
}

template <class T>
T det(const Matrix<T>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det of non-square matrix");
    Matrix<T> a = m;
    int n = a.rows();
    T d(1);
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int i = c; i < n; ++i)
            if (!is_zero(a(i, c))) { p = i; break; }
        if (p < 0) return T(0);
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
            d = -d;
        }
        d *= a(c, c);
        T inv = T(1) / a(c, c);
        for (int i = c + 1; i < n; ++i) {
            if (is_zero(a(i, c))) continue;
            T f = a(i, c) * inv;
            for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
        }
    }
    return d;
}

// Solve x m = b for a row vector x (m has full row rank on the relevant span).
// Returns false when b is not in the row space.
bool solve_in_rowspace(const Mat& m, const std::vector<Rational>& b, std::vector<Rational>& x);

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    Matrix<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
    return inv;
}

PolyQ charpoly(const Mat& m);
PolyQ minpoly(const Mat& m);
Mat eval_poly_at(const PolyQ& p, const Mat& m);

// Root multiplicities of f, largest first, via the gcd tower.
std::vector<int> multiplicity_partition(const PolyQ& f);

// Squarefree factors s_k (roots of multiplicity exactly k), k = 1..deg.
std::vector<PolyQ> squarefree_layers(const PolyQ& f);

// Rank over Z/p, p = 2^61 - 1, of an integer matrix given row-major.
constexpr std::uint64_t kPrime61 = (std::uint64_t(1) << 61) - 1;
int rank_mod_p(std::vector<std::uint64_t> a, int rows, int cols);
std::uint64_t to_mod_p(const mpz_class& z);

}  // namespace redn
