#pragma once

/*
 * K-theory shadow of the module category attached to a star-shaped
 * system: quiver presentation with relations, Euler matrix in the
 * simple-module basis, class-level exceptional mutations, and
 * cross-checks tying the quiver picture to the lattice picture.
 */

#include "grs/exactlin.hpp"
#include "grs/report.hpp"
#include "grs/system.hpp"

#include <cstddef>
#include <vector>

namespace grs {

/* Arrow and relation multiplicities between vertices, indexed by the
 * vertex order of the descriptor. */
struct QuiverPresentation {
    std::size_t mu = 0;
    IntMat arrow_count;
    IntMat relation_count;
};

/* Star-shaped quiver: arrows 1 -> (i,1) and (i,1) -> 1* for every arm
 * with a_i >= 2, chain arrows (i,j) -> (i,j+1) along each arm, and two
 * relations from vertex 1 to vertex 1*. */
QuiverPresentation build_octopus_quiver(const SystemDescriptor& sys);

/* Euler pairing of the simple modules read off the presentation:
 * chi(S_v, S_w) = delta_vw - #arrows(v -> w) + #relations(v -> w). */
IntMat euler_matrix_from_quiver(const QuiverPresentation& q);

enum class MutationSide { Left, Right };

/* Class of a mutated object: the right mutation of e through f is
 * e - chi(e,f) f, the left mutation of f through e is f - chi(e,f) e. */
IntVec mutate_class(const IntVec& e, const IntVec& f, const IntMat& chi,
                    MutationSide side);

/* Ordered classes of an exceptional collection. */
struct ClassTuple {
    std::vector<IntVec> entries;
    bool operator==(const ClassTuple&) const = default;
};

/* Classes of the simple modules, ordered (S_1, arm simples, S_1*).
 * Computed by left-mutating the sign-adjusted basis tuple
 * (e_1*, -e_1, -e_(1,1), ...) at positions 1, 2, ..., mu - 1 in turn,
 * then certified against the quiver Euler matrix;
 * InternalInconsistency if the certification fails. */
ClassTuple simples_class_tuple(const SystemDescriptor& sys);

/* Coordinate matrix whose column v holds the class of the simple
 * module at vertex-order position v. */
IntMat simples_coordinate_matrix(const SystemDescriptor& sys,
                                 const ClassTuple& simples);

/* Checks that subtracting the chi(delta, -)-multiple of delta is the
 * twist map, for the spherical class delta as well as -delta. */
CheckReport verify_spherical_class_identity(const SystemDescriptor& sys);

/* Checks that the quiver-side Euler matrix agrees with the lattice
 * side: base change of the triangular form, unimodularity, the
 * symmetrized pairing, Serre duality against the Coxeter map, the
 * reflection factorization over the collection, and the agreement of
 * mutations with reflections on consecutive pairs. */
CheckReport verify_quiver_cross_check(const SystemDescriptor& sys);

} // namespace grs
