/*
 * Braid moves on factorization tuples, the canonical form modulo signs
 * and twist, orbit enumeration and the degree formula.
 */

#include "grs/hurwitz.hpp"
#include "grs/rng.hpp"
#include "grs/weyl.hpp"

#include <deque>
#include <limits>
#include <unordered_set>

namespace grs {

RootTuple base_tuple(const SystemDescriptor& sys) {
    RootTuple t;
    for (std::size_t v = 0; v < sys.mu; ++v)
        t.entries.push_back(simple_root(sys, v));
    return t;
}

RootTuple braid_move(const RootIndex& idx, const RootTuple& t, std::size_t i,
                     int direction) {
    const std::size_t mu = idx.system().mu;
    if (t.entries.size() != mu)
        throw std::invalid_argument("braid_move: tuple length mismatch");
    if (i < 1 || i >= mu)
        throw IndexOutOfRange("braid_move: position " + std::to_string(i) +
                              " not in [1, " + std::to_string(mu - 1) + "]");
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("braid_move: direction must be +1 or -1");
    RootTuple out = t;
    IntVec& a = out.entries[i - 1];
    IntVec& b = out.entries[i];
    if (direction == 1) {
        IntVec moved = reflect(idx.cartan(), b, a);
        a = b;
        b = moved;
    } else {
        IntVec moved = reflect(idx.cartan(), a, b);
        b = a;
        a = moved;
    }
    return out;
}

RootTuple sign_move(const RootTuple& t, std::size_t i) {
    if (i < 1 || i > t.entries.size())
        throw IndexOutOfRange("sign_move: position " + std::to_string(i) +
                              " not in [1, " + std::to_string(t.entries.size()) + "]");
    RootTuple out = t;
    out.entries[i - 1] = -out.entries[i - 1];
    return out;
}

static int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

CanonicalForm canonicalize(const RootIndex& idx, const RootTuple& t) {
    const SystemDescriptor& sys = idx.system();
    auto positive = [&](const IntVec& v) {
        return idx.is_positive_root(v) ? v : -v;
    };
    std::vector<IntVec> p;
    p.reserve(t.entries.size());
    for (const auto& e : t.entries) p.push_back(positive(e));

    std::size_t anchor = p.size();
    for (std::size_t j = 0; j < p.size(); ++j)
        if (chi_delta(p[j]) != 0) {
            anchor = j;
            break;
        }
    if (anchor == p.size())
        throw NoTwistAnchor("every entry pairs to zero with delta");

    /* Up to the sign of the anchor entry, (c, d) is its delta-pairing and
     * delta-coordinate; the twist exponent n shifts d by -n*c, so
     * n = floor(d/c) puts the coordinate into [0, c). */
    int64_t c = chi_delta(p[anchor]);
    int64_t d = p[anchor][0];
    if (c < 0) {
        c = checked_neg(c);
        d = checked_neg(d);
    }
    int64_t n = floor_div(d, c);
    CanonicalForm out;
    out.rep.entries.reserve(p.size());
    for (const auto& e : p) {
        IntVec shifted = n == 0 ? e : twist_power_apply(sys, n, e);
        out.rep.entries.push_back(positive(shifted));
    }
    for (std::size_t j = 0; j < out.rep.entries.size(); ++j) {
        if (j) out.key.push_back('|');
        out.key += encode_vec(out.rep.entries[j]);
    }
    return out;
}

static void validate_against(const RootIndex& idx, const IntMat& cox,
                             const RootTuple& t) {
    const SystemDescriptor& sys = idx.system();
    if (t.entries.size() != sys.mu)
        throw InvariantViolation("tuple has " + std::to_string(t.entries.size()) +
                                 " entries, expected " + std::to_string(sys.mu));
    for (const auto& e : t.entries)
        if (!idx.is_real_root(e))
            throw InvariantViolation("entry (" + encode_vec(e) +
                                     ") is not a real root");
    IntMat prod = IntMat::identity(sys.mu);
    IntMat coords(sys.mu);
    for (std::size_t j = 0; j < sys.mu; ++j) {
        prod = mat_mul(prod, reflection_in(idx.cartan(), t.entries[j]));
        for (std::size_t i = 0; i < sys.mu; ++i)
            coords.set(i, j, t.entries[j][i]);
    }
    if (prod != cox)
        throw InvariantViolation("reflection product is not the Coxeter "
                                 "transformation");
    int64_t det = coords.det();
    if (det != 1 && det != -1)
        throw InvariantViolation("entries span a sublattice of index " +
                                 std::to_string(det < 0 ? -det : det));
}

void validate_tuple(const RootIndex& idx, const RootTuple& t) {
    validate_against(idx, coxeter_matrix(idx.system()).matrix, t);
}

int64_t formula_deg_ll(const SystemDescriptor& sys) {
    /* Exact fraction in 128 bits with reduction after every step; the
     * interleaved divisions keep intermediates far below the 128-bit
     * bound for every triple whose value fits in 64 bits. */
    __int128 num = 1;
    __int128 den = 1;
    static constexpr __int128 kMax =
        (static_cast<__int128>(std::numeric_limits<int64_t>::max()) << 64) |
        static_cast<uint64_t>(-1);
    auto mul = [](__int128& x, int64_t f) {
        if (x > kMax / f)
            throw OverflowError("degree formula exceeds 128 bits");
        x *= f;
    };
    auto reduce = [&]() {
        __int128 a = num < 0 ? -num : num;
        __int128 b = den;
        while (b != 0) {
            __int128 r = a % b;
            a = b;
            b = r;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
    };
    for (int64_t k = 2; k <= static_cast<int64_t>(sys.mu); ++k) mul(num, k);
    /* Pair each factor of a^a with a factor of a! and reduce in between,
     * so the running fraction never strays far above the exact value. */
    for (int64_t ai : sys.a) {
        for (int64_t k = 1; k <= ai; ++k) {
            mul(num, ai);
            mul(den, k);
            reduce();
        }
    }
    mul(num, sys.chi.den);
    mul(den, sys.chi.num);
    reduce();
    if (den != 1)
        throw NonIntegral("degree formula yields a non-integer");
    if (num > std::numeric_limits<int64_t>::max())
        throw OverflowError("degree formula exceeds 64 bits");
    return static_cast<int64_t>(num);
}

OrbitCount enumerate_orbit(const RootIndex& idx, uint64_t state_cap) {
    const std::size_t mu = idx.system().mu;
    IntMat cox = coxeter_matrix(idx.system()).matrix;

    OrbitCount out;
    out.formula_value = formula_deg_ll(idx.system());

    CanonicalForm start = canonicalize(idx, base_tuple(idx.system()));
    validate_against(idx, cox, start.rep);
    std::unordered_set<std::string> seen{start.key};
    std::deque<RootTuple> queue{start.rep};
    out.e_count = 1;

    while (!queue.empty() && !out.capped) {
        RootTuple cur = queue.front();
        queue.pop_front();
        ++out.states_expanded;
        for (std::size_t i = 1; i < mu && !out.capped; ++i)
            for (int dir : {1, -1}) {
                CanonicalForm next = canonicalize(idx, braid_move(idx, cur, i, dir));
                if (!seen.insert(next.key).second) continue;
                validate_against(idx, cox, next.rep);
                queue.push_back(next.rep);
                ++out.e_count;
                if (out.e_count >= state_cap) {
                    out.capped = true;
                    break;
                }
            }
    }
    out.match = !out.capped &&
                out.formula_value >= 0 &&
                out.e_count == static_cast<uint64_t>(out.formula_value);
    return out;
}

CheckReport verify_orbit_properties(const RootIndex& idx, uint64_t seed) {
    CheckReport rep("orbit-properties");
    const SystemDescriptor& sys = idx.system();
    const std::size_t mu = sys.mu;
    SplitMix64 rng(seed);
    RootTuple base = base_tuple(sys);

    bool inverses = true;
    for (std::size_t i = 1; i < mu; ++i) {
        inverses = inverses &&
                   braid_move(idx, braid_move(idx, base, i, 1), i, -1) == base &&
                   braid_move(idx, braid_move(idx, base, i, -1), i, 1) == base;
    }
    rep.add("braid-moves-are-invertible", inverses);

    bool signs_involute = true;
    for (std::size_t i = 1; i <= mu; ++i)
        signs_involute = signs_involute && sign_move(sign_move(base, i), i) == base;
    rep.add("sign-moves-are-involutions", signs_involute);

    auto random_walk = [&](RootTuple t, int steps) {
        for (int s = 0; s < steps; ++s) {
            std::size_t i = 1 + static_cast<std::size_t>(
                                    rng.next() % static_cast<uint64_t>(mu - 1));
            int dir = (rng.next() & 1) ? 1 : -1;
            t = braid_move(idx, t, i, dir);
        }
        return t;
    };

    bool walks_valid = true;
    bool keys_invariant = true;
    bool idempotent = true;
    bool quotient_action = true;
    std::string why;
    for (int s = 0; s < 100; ++s) {
        RootTuple x = random_walk(base, 12);
        try {
            validate_tuple(idx, x);
        } catch (const InvariantViolation& e) {
            walks_valid = false;
            why = e.what();
        }

        /* Scramble within the same class: entrywise signs plus one global
         * twist power. */
        RootTuple y = x;
        for (std::size_t i = 1; i <= mu; ++i)
            if (rng.next() & 1) y = sign_move(y, i);
        int64_t k = rng.next_in(-5, 5);
        for (auto& e : y.entries) e = twist_power_apply(sys, k, e);

        CanonicalForm cx = canonicalize(idx, x);
        CanonicalForm cy = canonicalize(idx, y);
        keys_invariant = keys_invariant && cx.key == cy.key;
        idempotent = idempotent && canonicalize(idx, cx.rep).key == cx.key;

        std::size_t i = 1 + static_cast<std::size_t>(
                                rng.next() % static_cast<uint64_t>(mu - 1));
        int dir = (rng.next() & 1) ? 1 : -1;
        quotient_action = quotient_action &&
                          canonicalize(idx, braid_move(idx, x, i, dir)).key ==
                              canonicalize(idx, braid_move(idx, y, i, dir)).key;
    }
    rep.add("random-walks-stay-valid-factorizations", walks_valid, why);
    rep.add("canonical-key-ignores-signs-and-twist", keys_invariant);
    rep.add("canonicalize-is-idempotent", idempotent);
    rep.add("braid-moves-descend-to-the-quotient", quotient_action);
    return rep;
}

} // namespace grs
