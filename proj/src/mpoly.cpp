#include "redn/mpoly.hpp"

#include <stdexcept>

namespace redn {

MPoly::MPoly(const Rational& c) {
    if (!is_zero(c)) t_[0] = c;
}

MPoly MPoly::var(int i) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("MPoly::var index");
    MPoly p;
    p.t_[Key(1) << (4 * i)] = 1;
    return p;
}

int MPoly::total_degree() const {
    int d = -1;
    for (auto& [k, c] : t_) {
        int s = 0;
        for (int v = 0; v < kMaxVars; ++v) s += exponent(k, v);
        d = std::max(d, s);
    }
    return d;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) t_.emplace(k, c);
        else {
            it->second += c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (auto& [k, c] : o.t_) {
        auto it = t_.find(k);
        if (it == t_.end()) t_.emplace(k, -c);
        else {
            it->second -= c;
            if (is_zero(it->second)) t_.erase(it);
        }
    }
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (is_zero(c)) { t_.clear(); return *this; }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (auto& [ka, ca] : a.t_)
        for (auto& [kb, cb] : b.t_) {
            MPoly::Key k = ka + kb;   // callers keep exponents below 16
            auto it = r.t_.find(k);
            if (it == r.t_.end()) r.t_.emplace(k, ca * cb);
            else {
                it->second += ca * cb;
                if (is_zero(it->second)) r.t_.erase(it);
            }
        }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly p = *this;
    for (auto& [k, c] : p.t_) c = -c;
    return p;
}

Rational MPoly::eval(const std::vector<Rational>& x) const {
    Rational s = 0;
    for (auto& [k, c] : t_) {
        Rational m = c;
        for (int v = 0; v < kMaxVars; ++v) {
            int e = exponent(k, v);
            for (int i = 0; i < e; ++i) m *= x.at(v);
        }
        s += m;
    }
    return s;
}

MPoly mdet(const std::vector<std::vector<MPoly>>& m) {
    int n = int(m.size());
    if (n == 0) return MPoly(Rational(1));
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    MPoly s;
    for (int j = 0; j < n; ++j) {
        if (m[0][j].zero()) continue;
        std::vector<std::vector<MPoly>> sub;
        for (int i = 1; i < n; ++i) {
            std::vector<MPoly> r;
            for (int c = 0; c < n; ++c)
                if (c != j) r.push_back(m[i][c]);
            sub.push_back(r);
        }
        MPoly t = m[0][j] * mdet(sub);
        if (j % 2) s -= t;
        else s += t;
    }
    return s;
}

}  // namespace redn
