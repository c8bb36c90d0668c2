#pragma once

/*
 * Lattice automorphisms generated by reflections in real roots, the
 * Coxeter transformation, and the twist along the radical vector delta:
 * t(v) = v - chi(delta, v) delta.  Words in these generators evaluate to
 * matrices; the verification suites exercise the algebraic identities the
 * generators are required to satisfy.
 */

#include "grs/exactlin.hpp"
#include "grs/report.hpp"
#include "grs/system.hpp"

#include <cstdint>
#include <vector>

namespace grs {

struct LatticeMap {
    IntMat matrix;
    bool preserves_form = false;
};

/* Wrap a matrix after checking unimodularity (NotUnimodular otherwise)
 * and recording whether it preserves the given symmetric pairing. */
LatticeMap make_lattice_map(const IntMat& form, const IntMat& m);

/* Matrix of the reflection in alpha, without any validation of alpha;
 * the caller guarantees form(alpha, alpha) = 2. */
IntMat reflection_in(const IntMat& form, const IntVec& alpha);

/* Reflection in a real root alpha; NotARoot when alpha is not one. */
LatticeMap reflection_matrix(const RootIndex& idx, const IntVec& alpha);

/* Product of all simple reflections in vertex order, the rightmost factor
 * acting first on vectors: r_{1*} r_1 r_{(1,1)} ... r_{(3,a3-1)}. */
LatticeMap coxeter_matrix(const SystemDescriptor& sys);

LatticeMap twist_matrix(const SystemDescriptor& sys);

/* t^n(v) = v - n chi(delta, v) delta, without forming matrix powers. */
IntVec twist_power_apply(const SystemDescriptor& sys, int64_t n, const IntVec& v);

enum class LetterKind { Reflection, Twist, TwistInverse };

struct WordLetter {
    LetterKind kind = LetterKind::Twist;
    std::size_t vertex = 0; /* Reflection letters: index into vertex_order */
};

struct WordValue {
    IntMat matrix;
    int64_t t_exponent = 0; /* signed number of twist letters in the word */
};

/* Evaluate a word as a composition, leftmost letter outermost. */
WordValue eval_word(const SystemDescriptor& sys, const std::vector<WordLetter>& word);

/* t r_alpha t^{-1} = r_{t(alpha)} on sampled real roots, the action of t
 * on the basis (t swaps e_{1*} to e_1, shifts e_1 by -delta, fixes arm
 * vectors), and insensitivity of t to the sign of delta. */
CheckReport verify_conjugation_identities(const SystemDescriptor& sys,
                                          uint64_t seed = 0, int samples = 100);

/* t^(-m) = cox^ell with m = chi * ell, an integer for every valid triple;
 * also the closed form for t^n applied to lattice vectors. */
CheckReport verify_power_identity(const SystemDescriptor& sys);

/* Closed form of the Coxeter transformation on every basis vector and on
 * delta.  Arms of length one contribute a copy of delta to the images of
 * e_{1*} and e_1 in place of a missing arm vertex. */
CheckReport verify_coxeter_action_table(const SystemDescriptor& sys);

/* Matrix-level consequences of the presentation of the extended braid
 * group: commuting and braid relations for vertex pairs with pairing 0
 * and -1, the auxiliary commutation relations through rho_1 = r_1 r_{1*},
 * the conjugation of reflection generators by the twist, and failure of
 * both classical relations for the pair (1*, 1) with pairing +2. */
CheckReport verify_artin_relations(const SystemDescriptor& sys);

/* Action of the twist on functionals (row vectors) x: x -> x * T^{-1};
 * equals x + <delta, x> w, where <delta, x> = x_0 - x_1 and w is the row
 * (1, 1, 0, ..., 0).  Checked on the full dual basis, with adjointness. */
CheckReport verify_dual_twist(const SystemDescriptor& sys);

} // namespace grs
