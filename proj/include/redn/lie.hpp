#pragma once
// gl_n / sl_n structure on top of exact matrices.

#include "redn/linalg.hpp"

#include <vector>

namespace redn {

// Elementary matrix E_ij, 0-based indices.
Mat E(int n, int i, int j);
Mat diag(const std::vector<Rational>& d);
Mat bracket(const Mat& x, const Mat& y);
Mat project_sl(const Mat& x);
Rational trace_form(const Mat& x, const Mat& y);   // trace(xy)

std::vector<Rational> flatten(const Mat& x);
Mat unflatten(int n, const std::vector<Rational>& v);

// sl_n basis: E_ij (i != j) row-major, then H_k = E_kk - E_k+1,k+1.
int sl_dim(int n);
const std::vector<Mat>& sl_basis(int n);
std::vector<Rational> sl_coords(const Mat& x);    // x traceless
Mat from_sl_coords(int n, const std::vector<Rational>& c);
// Torus weight of the k-th sl basis vector as an n-vector (eps_i - eps_j, or 0).
std::vector<int> sl_basis_weight(int n, int k);

class LieSubspace {
public:
    LieSubspace() = default;
    // Basis must be linearly independent.
    LieSubspace(int n, std::vector<Mat> basis);
    // Span of arbitrary generators; basis is taken from the reduced form.
    static LieSubspace span(int n, const std::vector<Mat>& gens);

    int n() const { return n_; }
    int dim() const { return int(basis_.size()); }
    const std::vector<Mat>& basis() const { return basis_; }
    const Mat& canonical() const { return canon_; }   // rref of flattened basis rows
    bool contains(const Mat& x) const;
    bool contains(const LieSubspace& s) const;
    Mat generic_combination(const std::vector<Rational>& coeffs) const;
    LieSubspace conjugate(const Mat& g, const Mat& g_inv) const;   // g^-1 x g
    LieSubspace transpose() const;
    friend bool operator==(const LieSubspace& a, const LieSubspace& b) {
        return a.n_ == b.n_ && a.canon_ == b.canon_;
    }

private:
    int n_ = 0;
    std::vector<Mat> basis_;
    Mat canon_;
};

bool is_traceless_subspace(const LieSubspace& a);
bool pairwise_commute(const LieSubspace& a);

LieSubspace centralizer(const Mat& x, bool traceless_ambient);
LieSubspace centralizer(const LieSubspace& a, bool traceless_ambient);
bool is_regular(const Mat& x);

// Block sizes of x grouped by squarefree layer of the characteristic
// polynomial: for the layer s_k (roots of multiplicity k) the block sizes
// over all its roots, read off from the nullities of s_k(x)^j.
struct JordanLayer {
    int multiplicity;
    PolyQ factor;
    std::vector<int> blocks;   // descending, counted over all roots of factor
};
std::vector<JordanLayer> jordan_data(const Mat& x);

bool is_nonregular_projected(const Mat& x);
bool is_nilpotent(const Mat& x);

// Dimension of the unital associative algebra generated by a.
int associative_span_dim(const LieSubspace& a);

}  // namespace redn
