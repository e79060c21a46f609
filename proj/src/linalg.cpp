#include "redn/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace redn {

Rational parse_rational(const std::string& s) {
    // [-]digits or [-]digits/digits, nothing else
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = 0, slash = std::string::npos;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/' && slash == std::string::npos && digits > 0) { slash = j; digits = 0; continue; }
        if (!std::isdigit(static_cast<unsigned char>(s[j]))) throw std::invalid_argument("malformed scalar \"" + s + "\"");
        ++digits;
    }
    if (digits == 0) throw std::invalid_argument("malformed scalar \"" + s + "\"");
    std::string body = s[0] == '+' ? s.substr(1) : s;
    Rational q;
    if (q.set_str(body, 10) != 0) throw std::invalid_argument("malformed scalar \"" + s + "\"");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---- PolyQ ----

PolyQ::PolyQ(const Rational& c) {
    if (!is_zero(c)) c_.push_back(c);
}

PolyQ::PolyQ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyQ PolyQ::monomial(const Rational& c, int degree) {
    PolyQ p;
    if (is_zero(c)) return p;
    p.c_.assign(degree + 1, Rational(0));
    p.c_[degree] = c;
    return p;
}

void PolyQ::trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
}

Rational PolyQ::coeff(int i) const {
    return (i >= 0 && i < int(c_.size())) ? c_[i] : Rational(0);
}

int PolyQ::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (!is_zero(c_[i])) return int(i);
    return -1;
}

Rational PolyQ::eval(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

PolyQ PolyQ::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(int(i)));
    return PolyQ(d);
}

PolyQ PolyQ::monic() const {
    if (c_.empty()) return *this;
    PolyQ p = *this;
    Rational l = c_.back();
    for (auto& x : p.c_) x /= l;
    return p;
}

PolyQ PolyQ::shift_down(int k) const {
    if (k <= 0 || c_.empty()) return *this;
    for (int i = 0; i < k && i < int(c_.size()); ++i)
        if (!is_zero(c_[i])) throw std::domain_error("shift_down: not divisible by x^k");
    if (k >= int(c_.size())) return PolyQ();
    return PolyQ(std::vector<Rational>(c_.begin() + k, c_.end()));
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
    if (c_.empty() || o.c_.empty()) { c_.clear(); return *this; }
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (is_zero(c_[i])) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

PolyQ PolyQ::operator-() const {
    PolyQ p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ& a, const PolyQ& b) {
    if (b.zero()) throw std::domain_error("polynomial division by zero");
    PolyQ q, r = a;
    int db = b.degree();
    Rational lb = b.lead();
    std::vector<Rational> qc(std::max(0, a.degree() - db + 1), Rational(0));
    while (!r.zero() && r.degree() >= db) {
        int s = r.degree() - db;
        Rational f = r.lead() / lb;
        qc[s] = f;
        r -= monomial(f, s) * b;
    }
    q = PolyQ(qc);
    return {q, r};
}

PolyQ PolyQ::gcd(PolyQ a, PolyQ b) {
    while (!b.zero()) {
        PolyQ r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string PolyQ::str(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (is_zero(c)) continue;
        Rational a = abs(c);
        os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (i == 0 || a != 1) os << a.get_str() << (i ? "*" : "");
        if (i >= 1) os << var;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

// ---- RatFunc ----

RatFunc::RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.zero()) { den_ = PolyQ(Rational(1)); return; }
    if (den_.degree() > 0) {
        PolyQ g = PolyQ::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = PolyQ::divmod(num_, g).first;
            den_ = PolyQ::divmod(den_, g).first;
        }
    }
    Rational l = den_.lead();
    if (l != 1) {
        num_ *= PolyQ(Rational(1) / l);
        den_ *= PolyQ(Rational(1) / l);
    }
}

int RatFunc::valuation() const {
    if (num_.zero()) throw std::domain_error("valuation of zero");
    return num_.valuation() - den_.valuation();
}

Rational RatFunc::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (is_zero(d)) throw std::domain_error("pole at evaluation point");
    return num_.eval(t) / d;
}

Rational RatFunc::leading_at_zero() const {
    if (num_.zero()) return 0;
    return num_.coeff(num_.valuation()) / den_.coeff(den_.valuation());
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
    if (den_ == o.den_) num_ += o.num_;
    else { num_ = num_ * o.den_ + o.num_ * den_; den_ *= o.den_; }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
    if (den_ == o.den_) num_ -= o.num_;
    else { num_ = num_ * o.den_ - o.num_ * den_; den_ *= o.den_; }
    normalize();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
    if (o.num_.zero()) throw std::domain_error("rational function division by zero");
    PolyQ n = num_ * o.den_;
    den_ = den_ * o.num_;
    num_ = std::move(n);
    normalize();
    return *this;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

// ---- matrices ----

bool solve_in_rowspace(const Mat& m, const std::vector<Rational>& b, std::vector<Rational>& x) {
    // x m = b  <=>  m^T x^T = b^T; eliminate on [m^T | b^T]
    int k = m.rows(), C = m.cols();
    Mat aug(C, k + 1);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < C; ++j) aug(j, i) = m(i, j);
    for (int j = 0; j < C; ++j) aug(j, k) = b[j];
    auto rr = rref(aug);
    if (!rr.pivots.empty() && rr.pivots.back() == k) return false;
    x.assign(k, Rational(0));
    for (int i = 0; i < rr.rank; ++i) x[rr.pivots[i]] = rr.reduced(i, k);
    return true;
}

PolyQ charpoly(const Mat& m) {
    // Faddeev-LeVerrier
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("charpoly of non-square matrix");
    std::vector<Rational> c(n + 1, Rational(0));
    c[n] = 1;
    Mat M(n, n);
    for (int k = 1; k <= n; ++k) {
        M = m * M;
        for (int i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
        Rational tr = (m * M).trace();
        c[n - k] = -tr / Rational(k);
    }
    return PolyQ(c);
}

PolyQ minpoly(const Mat& m) {
    int n = m.rows();
    Mat powers(0, n * n);
    Mat P = Mat::identity(n);
    for (int d = 0; d <= n; ++d) {
        powers.append_row(P.data());
        auto k = kernel_basis(powers.transpose());
        if (k.rows() > 0) {
            std::vector<Rational> c = k.row(0);
            PolyQ p(c);
            return p.monic();
        }
        P = P * m;
    }
    throw std::logic_error("minpoly: no dependence found");
}

Mat eval_poly_at(const PolyQ& p, const Mat& m) {
    int n = m.rows();
    Mat r(n, n);
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r = r * m;
        for (int i = 0; i < n; ++i) r(i, i) += *it;
    }
    return r;
}

std::vector<int> multiplicity_partition(const PolyQ& f) {
    if (f.zero()) throw std::invalid_argument("multiplicity_partition of zero polynomial");
    std::vector<int> at_least;   // at_least[k-1] = #roots of multiplicity >= k
    PolyQ g = f.monic();
    while (g.degree() > 0) {
        PolyQ h = PolyQ::gcd(g, g.derivative());
        at_least.push_back(g.degree() - h.degree());
        g = h;
    }
    std::vector<int> parts;
    for (std::size_t k = 0; k < at_least.size(); ++k) {
        int exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
        for (int i = 0; i < exact; ++i) parts.push_back(int(k) + 1);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::vector<PolyQ> squarefree_layers(const PolyQ& f) {
    // g_k = gcd tower; r_k = g_{k-1}/g_k has the roots of multiplicity >= k;
    // s_k = r_k / r_{k+1}.
    std::vector<PolyQ> r;
    PolyQ g = f.monic();
    while (g.degree() > 0) {
        PolyQ h = PolyQ::gcd(g, g.derivative());
        r.push_back(PolyQ::divmod(g, h).first.monic());
        g = h;
    }
    std::vector<PolyQ> s;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (k + 1 < r.size()) s.push_back(PolyQ::divmod(r[k], r[k + 1]).first.monic());
        else s.push_back(r[k]);
    }
    return s;
}

// ---- mod p ----

namespace {
inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 p = (unsigned __int128)a * b;
    std::uint64_t lo = std::uint64_t(p & kPrime61), hi = std::uint64_t(p >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kPrime61) s -= kPrime61;
    return s;
}
inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}
}  // namespace

std::uint64_t to_mod_p(const mpz_class& z) {
    mpz_class r = z % mpz_class(std::to_string(kPrime61));
    if (r < 0) r += mpz_class(std::to_string(kPrime61));
    return std::stoull(r.get_str());
}

int rank_mod_p(std::vector<std::uint64_t> a, int rows, int cols) {
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[std::size_t(i) * cols + c]) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(a[std::size_t(p) * cols + j], a[std::size_t(r) * cols + j]);
        std::uint64_t inv = powmod(a[std::size_t(r) * cols + c], kPrime61 - 2);
        for (int i = r + 1; i < rows; ++i) {
            std::uint64_t x = a[std::size_t(i) * cols + c];
            if (!x) continue;
            std::uint64_t f = mulmod(x, inv);
            for (int j = c; j < cols; ++j) {
                std::uint64_t s = mulmod(f, a[std::size_t(r) * cols + j]);
                std::uint64_t& t = a[std::size_t(i) * cols + j];
                t = t >= s ? t - s : t + kPrime61 - s;
            }
        }
        ++r;
    }
    return r;
}

}  // namespace redn
