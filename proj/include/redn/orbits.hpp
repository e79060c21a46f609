#pragma once
// The fourteen PGL_4-orbits in Ab(4): representatives, an invariant-based
// classifier, orbit dimensions, degeneration curves and the secant planes
// through a Cartan subalgebra.

#include "redn/grassmann.hpp"

#include <string>
#include <vector>

namespace redn {

enum class OrbitLabel { O12, O11, O10p, O10pp, O9, O8, O8p, O8pp, O7p, O7pp, O7, O6, O3p, O3pp };

const std::vector<OrbitLabel>& all_labels();
std::string label_name(OrbitLabel l);
OrbitLabel parse_label(const std::string& s);    // throws on unknown names
int label_dimension(OrbitLabel l);

LieSubspace representative(OrbitLabel l);

struct OrbitSignature {
    bool regular = false;
    bool nilpotent = false;
    std::vector<int> multiplicities;     // of the generic element, descending
    std::string jordan;                  // "mult:blocks" per squarefree layer
    int nil_image = 0, nil_kernel = 0;   // dim sum of images, dim common kernel
    int det_form_rank = -1;              // only for square-zero common-plane algebras
    int generic_rank = 0;
    std::string key() const;
    friend bool operator==(const OrbitSignature& a, const OrbitSignature& b) {
        return a.key() == b.key();
    }
};

// Element with minimal centralizer among eight fixed coefficient vectors.
Mat generic_element(const LieSubspace& a);
// Nilpotent elements of an abelian a.
LieSubspace nilradical(const LieSubspace& a);
OrbitSignature signature(const LieSubspace& a);
OrbitLabel classify_orbit(const LieSubspace& a);
int orbit_dimension(const LieSubspace& a);

struct Degeneration {
    OrbitLabel from, to;
    std::string how;
    CurveSubspace curve;
};
std::vector<Degeneration> degeneration_curves();

struct ArrowResult {
    OrbitLabel from, to, got_start, got_limit;
    bool ok = false;
};
std::vector<ArrowResult> verify_degenerations();

struct SecantPlane {
    int i = 0, j = 0;           // eigenvalue pair, 0-based
    LieSubspace hyperplane;     // P_ij in a
    LieSubspace centralizer;    // of P_ij in sl_n
    int samples_abelian = 0;
};
struct SecantReport {
    std::vector<SecantPlane> planes;
    bool centralizers_dim_ok = false;   // each of dimension n+1
    bool all_abelian = false;
    bool transverse = false;            // tangent directions pairwise independent
};
// a must be a Cartan subalgebra split over Q.
SecantReport secant_planes(const LieSubspace& a);

}  // namespace redn
