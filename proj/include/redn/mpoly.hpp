#pragma once
// Sparse multivariate polynomials over Q in at most 15 variables, each
// exponent below 16, packed 4 bits per variable into one 64-bit key.

#include "redn/linalg.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace redn {

class MPoly {
public:
    using Key = std::uint64_t;
    static constexpr int kMaxVars = 15;

    MPoly() = default;
    MPoly(const Rational& c);
    static MPoly var(int i);

    const std::map<Key, Rational>& terms() const { return t_; }
    bool zero() const { return t_.empty(); }
    int total_degree() const;
    static int exponent(Key k, int var) { return int((k >> (4 * var)) & 0xF); }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& c);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
    MPoly operator-() const;
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

    Rational eval(const std::vector<Rational>& x) const;

private:
    std::map<Key, Rational> t_;
};

inline bool is_zero(const MPoly& p) { return p.zero(); }

// Determinant by cofactor expansion (small sizes, no division).
MPoly mdet(const std::vector<std::vector<MPoly>>& m);

}  // namespace redn
