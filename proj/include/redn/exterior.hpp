#pragma once
// Multilinear maps on exterior and symmetric powers: Theta (abelian test),
// the Killing quadric, the diagram i, j, pi, rho, alpha, beta and the twist
// tau, and the determinant systems t_n, t'_n, s_n, s_n^*.

#include "redn/grassmann.hpp"
#include "redn/mpoly.hpp"

#include <map>
#include <vector>

namespace redn {

using SparseVec = std::vector<std::pair<int, Rational>>;

// Linear map stored column by column.
struct SparseMap {
    int rows = 0, cols = 0;
    std::vector<SparseVec> col;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    SparseVec apply_sparse(const SparseVec& v) const;
    Mat dense() const;
};
SparseMap compose(const SparseMap& a, const SparseMap& b);   // a after b

// Coordinates of r_1 ^ ... ^ r_k in the colex monomial basis (zero allowed).
std::vector<Rational> wedge_rows(const Mat& rows);
// Monomial weight (sum of sl basis weights) of a sorted subset of sl indices.
std::vector<int> wedge_weight(int n, const std::vector<int>& subset);

// ---- Theta ----

struct ThetaMap {
    int n = 0;
    int N = 0;                 // dim sl_n
    SparseMap map;             // Lambda^{n-1} sl_n -> sl_n (x) Lambda^{n-3} sl_n
};
ThetaMap build_theta(int n);
std::vector<Rational> theta_apply(const ThetaMap& th, const std::vector<Rational>& wedge);

// Kernel of Theta computed block by block over torus weights. Rows of
// `basis` are kernel vectors in Lambda^{n-1} sl_n coordinates.
struct ThetaKernel {
    int dim = 0;
    Mat basis;
    std::map<std::vector<int>, std::vector<int>> blocks;   // weight -> monomial ranks
};
ThetaKernel theta_kernel(int n, bool allow_large = false);
int theta_kernel_dim(int n, bool allow_large = false);
// Plain rank of the whole matrix (used as an independent oracle for n = 3).
int theta_rank_bruteforce(int n);

bool ab_membership(const LieSubspace& a);

// ---- Killing quadric ----

Rational killing_quadric(const std::vector<Mat>& xs);

// ---- diagram maps ----

struct DiagramMaps {
    int n = 0;
    std::vector<std::vector<int>> sym_basis;    // sorted multisets of size n
    SparseMap i, j, pi, rho, alpha, beta;       // see diagram
    SparseMap i_pi;                             // i o pi on Lambda^{n-1} sl_n
    Rational tau_coeff;                         // tau = id - tau_coeff * i o pi
    Rational printed_tau_coeff;                 // (-1)^(n-1) (n-1)!/n, kept for reports
    std::vector<Rational> tau(const std::vector<Rational>& wedge) const;
    std::vector<Rational> sym_power(const std::vector<Rational>& v) const;   // v^n
};
const DiagramMaps& diagram_maps(int n);

struct DiagramReport {
    bool rho_j = false, beta_alpha = false, pi_i = false;
    int inputs_checked = 0;
};
DiagramReport diagram_identities(int n);

// ---- determinant systems ----

// det(trace(z_i x^j)), i, j = 1..n-1
Rational t_n_eval(const std::vector<Mat>& z, const Mat& x);
// Same, extended linearly to Lambda^{n-1} sl_n coordinates.
Rational t_n_eval_wedge(int n, const std::vector<Rational>& wedge, const Mat& x);
Rational t_n_twisted_eval(const LieSubspace& a, const Mat& x);
Rational s_n_eval(const std::vector<Rational>& v, const Mat& x);
Rational s_n_dual_eval(const std::vector<Rational>& e, const Mat& x);
// (z_1 ^ ... ^ z_k)(w_1, ..., w_k) = det(trace(z_i w_j))
Rational wedge_pairing(const std::vector<Mat>& z, const std::vector<Mat>& w);

// t_n(wedge) restricted to x = diag(x_1, ..., x_{n-1}, -sum) as a polynomial
// in x_1..x_{n-1}.
MPoly t_n_on_diagonal(int n, const std::vector<Rational>& wedge);

struct T4Report {
    int symbolic_rank = 0;          // exact, per weight block
    int kernel_dim = 0;
    int eval_points = 0;
    int eval_rank_mod_p = 0;        // certified lower bound
    int fresh_points = 0;
    bool kernel_zero_at_fresh = false;
    int wbar_points = 0;
    bool theta_kernel_vanishes_on_wbar = false;
    bool injective_on_theta_kernel = false;
    int rank() const { return symbolic_rank; }
    bool certified() const {
        return eval_rank_mod_p == symbolic_rank && kernel_zero_at_fresh;
    }
};
T4Report t4_rank(int eval_points = 600, int jobs = 1);

// Deterministic sample points.
std::vector<Mat> wbar4_points(int count, unsigned seed);

}  // namespace redn
