#pragma once
// Zariski tangent spaces of Ab(n), sigma-fibre tangents, the cone map B at
// the minimal orbit with its quadratic equations, the pencil map T for n = 4,
// and the vanishing order of the squared volume form along O_bound.

#include "redn/grassmann.hpp"

#include <optional>
#include <vector>

namespace redn {

enum class ComplementKind { Auto, Killing, Pivot };

// Solutions psi in Hom(a, C) of [psi(x_i), x_j] + [x_i, psi(x_j)] = 0, with C
// a fixed complement of a in sl_n. basis[s][i] = psi_s(x_i), x_i = a.basis()[i].
struct DeformationSpace {
    LieSubspace a;
    std::vector<Mat> complement;
    std::vector<std::vector<Mat>> basis;
    int dim() const { return int(basis.size()); }
};

std::vector<Mat> killing_complement(const LieSubspace& a);   // empty if degenerate
std::vector<Mat> pivot_complement(const LieSubspace& a);
DeformationSpace tangent_space_ab(const LieSubspace& a, ComplementKind kind = ComplementKind::Auto);
DeformationSpace tangent_space_ab(const LieSubspace& a, const std::vector<Mat>& complement);
// The linear system itself; unknown i*|C|+s is the coefficient of C_s in psi(x_i).
Mat tangent_equations(const LieSubspace& a, const std::vector<Mat>& complement);

// dim {psi in T_a : psi(x) = 0}
int sigma_fiber_tangent(const Mat& x, const LieSubspace& a);

// Coordinates of v in sl_n / a (entries of v at non-pivot columns after
// reduction by the canonical form of a).
std::vector<Rational> quotient_coords(const LieSubspace& a, const Mat& v);

// ---- first-order deformations at O_bound ----

// Parameters mu, nu and theta_jk (j != k, not both in {1,2}), 1-based names.
struct BoundParams {
    int n = 0;
    std::vector<std::pair<int, int>> theta;   // (j, k)
    int count() const { return 2 + int(theta.size()); }
    int mu() const { return 0; }
    int nu() const { return 1; }
    int theta_index(int j, int k) const;
};
BoundParams bound_params(int n);
// psi_i(t, p) for p = 0 and the derivative in each parameter, as in the
// displayed first-order deformations (t = 0 gives the O_bound point).
struct BoundFamily {
    std::vector<PolyMat> at_zero;                  // psi_i(t, 0), i = 1..n
    std::vector<std::vector<PolyMat>> d;           // d[p][i] = d psi_i / d p
};
BoundFamily bound_family(int n);
// True iff the n(n-1) displayed deformations span the computed tangent space
// at the O_bound representative (t = 0).
bool bound_psi_spans_tangent(int n);
// det(trace(psi_i psi_j)) truncated to first order in the parameters, as a
// polynomial in them (variable p = parameter p); n <= 4 keeps within MPoly.
struct FirstOrder { Rational constant; std::vector<Rational> linear; };
FirstOrder killing_first_order(int n);

struct CanonicalOrder {
    int valuation = -1;          // of det(ad basis in terms of the coordinate basis), in tau
    bool theta_identities = false;
    bool mu_identity = false;
    bool nu_identity = false;
    int tangent_dim_generic = 0, tangent_dim_zero = 0;
};
CanonicalOrder canonical_vanishing_order(int n = 4);

// ---- cone map B at O''_min ----

struct ConeMapB {
    int n = 0;                     // ambient sl_n; U has dimension n-1
    std::vector<Mat> b;            // b[i] = B(e_{i+1})
    Mat apply(const std::vector<Rational>& u) const;   // B(u)
};
ConeMapB build_B(int n);
ConeMapB pure_trace_B(int n);      // B(u)v = u_1 v + v_1 u

struct ConeCheck {
    bool symmetric = false, traceless = false, quadrics = false;
    std::optional<std::vector<int>> witness;   // basis indices (u1,u2,v1,v2,w) where (9) fails
    bool ok() const { return symmetric && traceless && quadrics; }
};
ConeCheck check_cone_eqs(const ConeMapB& B);
int stabilizer_lie_dim(const ConeMapB& B);

// Pencil map for dim U = 3: quadratic forms as 6 coefficients on
// x1^2, x1x2, x1x3, x2^2, x2x3, x3^2.
ConeMapB tmap(const std::vector<Rational>& q1, const std::vector<Rational>& q2);
// 15 x 18 matrix of T from Lambda^2 S^2 U* to symmetric maps (coordinates
// B(e_i)e_k[r], i <= k); rank 15 means T is an isomorphism onto the
// traceless part.
Mat tmap_matrix();

}  // namespace redn
