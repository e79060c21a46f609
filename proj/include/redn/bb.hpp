#pragma once
// Torus-fixed points of Red(4) and of its blow-up along the two minimal
// orbits, their tangent weights, and the Bialynicki-Birula counts.

#include "redn/orbits.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace redn {

// Character of the diagonal torus of PGL_4, stored with last entry 0.
struct WeightVector {
    std::array<int, 4> w{};
    WeightVector() = default;
    explicit WeightVector(std::array<int, 4> raw);
    long pair(const std::array<long, 4>& lambda) const;   // lambda sums to 0
    bool zero() const { return w == std::array<int, 4>{}; }
    friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.w == b.w; }
    friend bool operator<(const WeightVector& a, const WeightVector& b) { return a.w < b.w; }
    std::string str() const;
};
WeightVector root_weight(int i, int j);   // eps_i - eps_j, 0-based

struct FixedPoint {
    std::vector<std::pair<int, int>> roots;   // E_ij, 0-based
    std::vector<Mat> diagonal_part;           // basis of the intersection of root kernels
    LieSubspace subspace;                     // basis: roots first, then diagonal_part
    OrbitLabel orbit = OrbitLabel::O12;
    // blow-up datum: indices (a < b) of two monomials of S^2 U*, see blowup_fixed_points
    std::optional<std::pair<int, int>> exceptional;
    std::vector<WeightVector> weights;        // filled by fixed_point_data
    bool minimal() const { return orbit == OrbitLabel::O3p || orbit == OrbitLabel::O3pp; }
};

// Root subsets of size <= 3 with pairwise sums neither roots nor zero, and
// a traceless diagonal part of the complementary dimension.
std::vector<FixedPoint> enumerate_fixed_points();
// Oracle: every root subset of size <= 3, kept when the assembled subspace is
// 3-dimensional and abelian. Returns the sorted root lists.
std::vector<std::vector<std::pair<int, int>>> brute_force_fixed_roots();

// Per-orbit counts in the order of all_labels().
std::vector<int> per_orbit_counts(const std::vector<FixedPoint>& pts);

// Weights of the Zariski tangent space, from the weight-graded linear system.
// Throws unless the dimension is 12 and no weight is zero.
std::vector<WeightVector> tangent_weights(const FixedPoint& p);
// Same grading without the smoothness requirement (18 weights at minimal points).
std::vector<WeightVector> raw_tangent_weights(const FixedPoint& p);
// Weights of the image of ad in the tangent space (orbit directions).
std::vector<WeightVector> orbit_weights(const FixedPoint& p);

// The minimal point is "column k" (image in the hyperplane U, kernel
// containing it) for O3pp, "row k" for O3p; U = indices other than k and the
// sign s = +1 resp. -1 records the duality.
struct MinimalFrame {
    int k = 0, sign = 1;
    std::vector<int> U;
    std::vector<std::pair<int, int>> monomials;   // S^2 U*, lexicographic in U
    std::vector<WeightVector> monomial_weights;   // -(eps_a + eps_b)
};
MinimalFrame minimal_frame(const FixedPoint& p);
// Weights of S^2 U* (x) U predicted for the 18-dimensional tangent space.
std::vector<WeightVector> predicted_minimal_tangent(const FixedPoint& p);
// The 15 lifts of a minimal point, with their 12 weights.
std::vector<FixedPoint> blowup_fixed_points(const FixedPoint& p);

// All 193 fixed points of the blow-up with weights (73 base + 120 lifted),
// in canonical order. jobs > 1 processes base points in parallel.
std::vector<FixedPoint> fixed_point_data(int jobs = 1);

// First lambda = (N^3, N^2, N, -N^3-N^2-N), N = 2, 3, ..., pairing nonzero
// with every weight. Throws if none up to N = 50.
std::array<long, 4> choose_lambda(const std::vector<FixedPoint>& pts);
// b_{2k} = number of fixed points with k negative pairings, k = 0..12.
std::vector<int> betti_numbers(const std::vector<FixedPoint>& pts, const std::array<long, 4>& lambda);
std::vector<int> betti_numbers(int jobs = 1);
int euler_characteristic(int jobs = 1);
bool palindromic(const std::vector<int>& b);

// Localized chi_y genus: sum over fixed points of prod (1 + y t^<l,w>) / (1 - t^<l,w>).
Rational localized_chi_y(const std::vector<FixedPoint>& pts, const std::array<long, 4>& lambda,
                         const Rational& y, const Rational& t);

std::vector<int> chow_target();   // the published ranks
struct ChowReport {
    std::vector<int> target, reconstruction, betti;
    std::vector<int> exceptional_classes;   // Betti numbers of a G(2,6)-bundle over P^3
    bool discrepancy = false;
    std::string method;
};
ChowReport chow_report(int jobs = 1);

}  // namespace redn
