#pragma once

/*
 * Star-shaped root system data attached to a triple A = (a1, a2, a3) of
 * positive integers with 1/a1 + 1/a2 + 1/a3 > 1.
 *
 * The lattice has rank mu = a1 + a2 + a3 - 1 with basis indexed by the
 * vertices, in this fixed order:
 *
 *   1*, 1, (1,1) ... (1,a1-1), (2,1) ... (2,a2-1), (3,1) ... (3,a3-1)
 *
 * so arm i contributes a_i - 1 vertices (nothing when a_i = 1).  The
 * symmetric pairing has 2 on the diagonal, 2 between 1* and 1, -1 between
 * 1 and each (i,1), between 1* and each (i,1), and along each arm between
 * consecutive (i,j), (i,j+1); all other entries vanish.  The isotropic
 * vector delta = e_{1*} - e_1 spans the radical.
 *
 * Real roots are alpha + n*delta with alpha a root of the finite system
 * spanned by the basis vectors other than e_{1*}; in coordinates the
 * delta-coefficient of a real root is its first entry.
 */

#include "grs/exactlin.hpp"
#include "grs/report.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace grs {

struct NotAffineAde : std::invalid_argument {
    explicit NotAffineAde(const std::string& what) : std::invalid_argument(what) {}
};

struct NotARoot : std::invalid_argument {
    explicit NotARoot(const std::string& what) : std::invalid_argument(what) {}
};

struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

enum class VertexKind { Star, One, Arm };

struct VertexId {
    VertexKind kind = VertexKind::One;
    int arm = 0; /* 1..3, Arm only */
    int pos = 0; /* 1..a_arm - 1, Arm only */

    std::string name() const;
    bool operator==(const VertexId& o) const = default;
};

struct SystemDescriptor {
    std::array<int64_t, 3> a{};
    std::size_t mu = 0;
    Rat chi;      /* 1/a1 + 1/a2 + 1/a3 - 1 */
    int64_t ell = 0; /* lcm(a1, a2, a3) */
    std::vector<VertexId> vertex_order;

    static constexpr std::size_t star_index = 0;
    static constexpr std::size_t one_index = 1;
    std::size_t arm_index(int i, int j) const;
};

/* Validate the triple and assemble the descriptor; NotAffineAde names the
 * violated inequality. */
SystemDescriptor build_system(int64_t a1, int64_t a2, int64_t a3);

IntMat cartan_form(const SystemDescriptor& sys);
IntVec delta(const SystemDescriptor& sys);
IntVec simple_root(const SystemDescriptor& sys, std::size_t vertex);

/* u^T * form * v, exact. */
int64_t bilinear(const IntMat& form, const IntVec& u, const IntVec& v);

/* v - form(alpha, v) * alpha, the reflection in a vector of square 2. */
IntVec reflect(const IntMat& form, const IntVec& alpha, const IntVec& v);

/* The unique unipotent-upper-triangular form chi with chi + chi^T equal to
 * the pairing: entries above the diagonal copy the pairing, diagonal 1. */
IntMat euler_form_triangular(const SystemDescriptor& sys);

/* Recover the same form from its abstract characterization alone, by
 * solving the linear system consisting of the symmetrization equations
 * chi + chi^T = pairing and the duality equations chi * cox = -chi^T.
 * InternalInconsistency if that system fails to have a unique integral
 * solution or disagrees with the triangular construction. */
IntMat euler_form_from_axioms(const SystemDescriptor& sys);

/* chi(delta, v) for the triangular form: first coordinate plus second. */
int64_t chi_delta(const IntVec& v);

/* v minus its delta-component: coordinates of the finite-system part. */
IntVec finite_part(const SystemDescriptor& sys, const IntVec& v);

/* Decimal key, stable across runs, for hashing lattice vectors. */
std::string encode_vec(const IntVec& v);

/* All roots of the finite system (first coordinate zero), found by closing
 * the finite simple roots under their reflections. */
std::vector<IntVec> finite_real_roots(const SystemDescriptor& sys);

/* Precomputed root data for membership and positivity queries. */
class RootIndex {
public:
    explicit RootIndex(const SystemDescriptor& sys);

    const SystemDescriptor& system() const { return sys_; }
    const IntMat& cartan() const { return cartan_; }
    const std::vector<IntVec>& finite_roots() const { return finite_; }

    bool is_real_root(const IntVec& v) const;

    /* NotARoot when v is not a real root.  A real root alpha + n*delta is
     * positive when n > 0, or n = 0 and alpha is a nonnegative combination
     * of the finite simple roots. */
    bool is_positive_root(const IntVec& v) const;

private:
    SystemDescriptor sys_;
    IntMat cartan_;
    std::vector<IntVec> finite_;
    std::unordered_set<std::string> finite_keys_;
};

/* Checks that the axioms pin the Euler form down: the triangular form
 * satisfies both equation families, the solver reproduces it uniquely, and
 * dropping the duality family leaves mu*(mu-1)/2 degrees of freedom. */
CheckReport verify_euler_uniqueness(const SystemDescriptor& sys);

} // namespace grs
