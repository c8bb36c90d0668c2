#pragma once

/*
 * Hurwitz-type braid moves on tuples of real roots factorizing the
 * Coxeter transformation, canonical forms for tuples modulo entrywise
 * signs and the global twist, and breadth-first enumeration of the braid
 * orbit in that quotient.  The orbit count is compared against the closed
 * product formula for the degree of the associated covering.
 */

#include "grs/exactlin.hpp"
#include "grs/report.hpp"
#include "grs/system.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace grs {

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct NoTwistAnchor : std::invalid_argument {
    explicit NoTwistAnchor(const std::string& what) : std::invalid_argument(what) {}
};

struct NonIntegral : std::logic_error {
    explicit NonIntegral(const std::string& what) : std::logic_error(what) {}
};

struct InvariantViolation : std::logic_error {
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

struct RootTuple {
    std::vector<IntVec> entries;
    bool operator==(const RootTuple& o) const = default;
};

/* The basis tuple: simple roots in vertex order.  Its left-to-right
 * reflection product is the Coxeter transformation. */
RootTuple base_tuple(const SystemDescriptor& sys);

/* Positions i are 1-based, 1 <= i <= mu-1 (IndexOutOfRange otherwise).
 * direction +1 replaces (..., x_i, x_{i+1}, ...) by
 * (..., x_{i+1}, r_{x_{i+1}}(x_i), ...); direction -1 is its inverse,
 * (..., r_{x_i}(x_{i+1}), x_i, ...).  Both preserve the product. */
RootTuple braid_move(const RootIndex& idx, const RootTuple& t, std::size_t i,
                     int direction);

/* Negate entry i (1-based, 1 <= i <= mu). */
RootTuple sign_move(const RootTuple& t, std::size_t i);

struct CanonicalForm {
    RootTuple rep;
    std::string key;
};

/* Canonical representative of the class of t modulo entrywise signs and
 * the simultaneous twist t^n.  Entries are sign-normalized to positive
 * roots; the twist exponent is fixed by the first entry on which the
 * delta-pairing is nonzero (NoTwistAnchor when there is none), bringing
 * that entry's delta-coordinate into [0, |pairing|). */
CanonicalForm canonicalize(const RootIndex& idx, const RootTuple& t);

/* Entries are real roots, the reflection product is the Coxeter
 * transformation and the entries form a lattice basis; InvariantViolation
 * otherwise. */
void validate_tuple(const RootIndex& idx, const RootTuple& t);

/* mu! a1^a1 a2^a2 a3^a3 / (a1! a2! a3! chi), evaluated exactly.
 * NonIntegral if the value is not an integer, OverflowError if it does
 * not fit in 64 bits. */
int64_t formula_deg_ll(const SystemDescriptor& sys);

struct OrbitCount {
    uint64_t e_count = 0;         /* canonical classes discovered */
    int64_t formula_value = 0;    /* closed formula for comparison */
    uint64_t states_expanded = 0; /* classes whose moves were explored */
    bool match = false;           /* e_count == formula_value, uncapped */
    bool capped = false;          /* enumeration stopped at state_cap */
};

/* Breadth-first search from the basis tuple under both directions of all
 * braid moves, in the quotient by signs and twist.  Every newly found
 * class is validated; the search stops once state_cap classes exist. */
OrbitCount enumerate_orbit(const RootIndex& idx, uint64_t state_cap = 10000000);

/* Well-definedness of the canonical form on orbits: random braid walks,
 * entrywise sign changes and global twists never change the key; braid
 * moves are invertible; walk endpoints stay valid factorizations. */
CheckReport verify_orbit_properties(const RootIndex& idx, uint64_t seed = 0);

} // namespace grs
