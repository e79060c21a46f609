#pragma once
// Subspaces as Grassmannian points: Pluecker coordinates in colex subset
// order, limits of one-parameter families, torus invariance.

#include "redn/lie.hpp"

#include <vector>

namespace redn {

// k-subsets of {0..N-1} in colexicographic order, and the inverse ranking.
std::vector<std::vector<int>> colex_subsets(int N, int k);
long colex_rank(const std::vector<int>& sorted_subset);
long binom(int n, int k);

struct PluckerVector {
    int N = 0, k = 0;
    std::vector<Rational> coords;   // indexed by colex rank

    bool zero() const;
    // Scale so the first nonzero coordinate is 1.
    PluckerVector normalized() const;
    bool projectively_equal(const PluckerVector& o) const;
    // Alternating coordinate for an arbitrary ordered index tuple.
    Rational at(const std::vector<int>& idx) const;
};

// Maximal minors of a k x N matrix with independent rows.
PluckerVector plucker_rows(const Mat& rows);
// Pluecker vector of a subspace in sl_n coordinates (basis must be traceless).
PluckerVector plucker(const LieSubspace& a);
// Rows spanning the subspace encoded by a decomposable Pluecker vector.
Mat rows_from_plucker(const PluckerVector& p);

// A k-dimensional family a(t) of n x n matrices with entries in Q(t).
struct CurveSubspace {
    int n = 0;
    std::vector<PolyMat> basis;
    int k() const { return int(basis.size()); }
    LieSubspace at(const Rational& t) const;
};

PolyMat to_polymat(const Mat& m);
PolyMat conjugate_curve(const PolyMat& x, const PolyMat& g, const PolyMat& g_inv);
CurveSubspace conjugate_curve(const LieSubspace& a, const PolyMat& g, const PolyMat& g_inv);
CurveSubspace transpose_curve(const CurveSubspace& c);

// Flat limit at t = 0, computed in Pluecker coordinates (flattened gl_n).
LieSubspace limit_subspace(const CurveSubspace& c);

// True iff a is the direct sum of its intersections with the diagonal
// part and the root lines.
bool torus_invariant(const LieSubspace& a);

}  // namespace redn
