/*
 * Descriptor construction, the symmetric pairing, the triangular Euler
 * form and its recovery from the defining equations, finite root
 * enumeration and root membership queries.
 */

#include "grs/system.hpp"
#include "grs/weyl.hpp"

#include <deque>
#include <numeric>

namespace grs {

std::string VertexId::name() const {
    switch (kind) {
        case VertexKind::Star: return "1*";
        case VertexKind::One: return "1";
        case VertexKind::Arm:
            return "(" + std::to_string(arm) + "," + std::to_string(pos) + ")";
    }
    return "?";
}

std::size_t SystemDescriptor::arm_index(int i, int j) const {
    if (i < 1 || i > 3 || j < 1 || j >= a[static_cast<std::size_t>(i) - 1])
        throw std::out_of_range("arm_index: no vertex (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    std::size_t off = 2;
    for (int k = 1; k < i; ++k) off += static_cast<std::size_t>(a[static_cast<std::size_t>(k) - 1] - 1);
    return off + static_cast<std::size_t>(j) - 1;
}

static std::string triple_str(int64_t a1, int64_t a2, int64_t a3) {
    return "(" + std::to_string(a1) + ", " + std::to_string(a2) + ", " +
           std::to_string(a3) + ")";
}

SystemDescriptor build_system(int64_t a1, int64_t a2, int64_t a3) {
    const std::array<int64_t, 3> a{a1, a2, a3};
    for (std::size_t i = 0; i < 3; ++i) {
        if (a[i] < 1)
            throw NotAffineAde("a" + std::to_string(i + 1) + " >= 1 fails for " +
                               triple_str(a1, a2, a3));
    }
    Rat chi = Rat(1, a1) + Rat(1, a2) + Rat(1, a3) - Rat(1);
    if (!chi.is_positive())
        throw NotAffineAde("1/a1 + 1/a2 + 1/a3 - 1 = " + to_string(chi) + " for " +
                           triple_str(a1, a2, a3) + "; must be positive");

    SystemDescriptor sys;
    sys.a = a;
    sys.mu = static_cast<std::size_t>(a1 + a2 + a3 - 1);
    sys.chi = chi;
    sys.ell = std::lcm(std::lcm(a1, a2), a3);
    sys.vertex_order.push_back({VertexKind::Star, 0, 0});
    sys.vertex_order.push_back({VertexKind::One, 0, 0});
    for (int i = 1; i <= 3; ++i)
        for (int64_t j = 1; j < a[static_cast<std::size_t>(i) - 1]; ++j)
            sys.vertex_order.push_back({VertexKind::Arm, i, static_cast<int>(j)});
    return sys;
}

IntMat cartan_form(const SystemDescriptor& sys) {
    const std::size_t n = sys.mu;
    IntMat m(n);
    auto set_sym = [&](std::size_t i, std::size_t j, int64_t v) {
        m.set(i, j, v);
        m.set(j, i, v);
    };
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 2);
    set_sym(SystemDescriptor::star_index, SystemDescriptor::one_index, 2);
    for (int i = 1; i <= 3; ++i) {
        const int64_t ai = sys.a[static_cast<std::size_t>(i) - 1];
        if (ai < 2) continue;
        set_sym(SystemDescriptor::star_index, sys.arm_index(i, 1), -1);
        set_sym(SystemDescriptor::one_index, sys.arm_index(i, 1), -1);
        for (int j = 1; j + 1 < ai; ++j)
            set_sym(sys.arm_index(i, j), sys.arm_index(i, j + 1), -1);
    }
    return m;
}

IntVec delta(const SystemDescriptor& sys) {
    IntVec d(sys.mu);
    d[SystemDescriptor::star_index] = 1;
    d[SystemDescriptor::one_index] = -1;
    return d;
}

IntVec simple_root(const SystemDescriptor& sys, std::size_t vertex) {
    if (vertex >= sys.mu)
        throw std::out_of_range("simple_root: vertex index " + std::to_string(vertex));
    return IntVec::unit(sys.mu, vertex);
}

int64_t bilinear(const IntMat& form, const IntVec& u, const IntVec& v) {
    if (u.dim() != form.n() || v.dim() != form.n())
        throw std::invalid_argument("bilinear: dimension mismatch");
    int64_t s = 0;
    for (std::size_t i = 0; i < form.n(); ++i) {
        if (u[i] == 0) continue;
        int64_t row = 0;
        for (std::size_t j = 0; j < form.n(); ++j)
            row = checked_add(row, checked_mul(form.at(i, j), v[j]));
        s = checked_add(s, checked_mul(u[i], row));
    }
    return s;
}

IntVec reflect(const IntMat& form, const IntVec& alpha, const IntVec& v) {
    return v - alpha.scaled(bilinear(form, alpha, v));
}

IntMat euler_form_triangular(const SystemDescriptor& sys) {
    IntMat pairing = cartan_form(sys);
    IntMat c(sys.mu);
    for (std::size_t i = 0; i < sys.mu; ++i) {
        c.set(i, i, 1);
        for (std::size_t j = i + 1; j < sys.mu; ++j)
            c.set(i, j, pairing.at(i, j));
    }
    return c;
}

static std::vector<LinearConstraint> symmetrization_constraints(const IntMat& pairing) {
    const std::size_t n = pairing.n();
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            LinearConstraint c;
            if (i == j) {
                c.terms.push_back({i * n + i, 2});
            } else {
                c.terms.push_back({i * n + j, 1});
                c.terms.push_back({j * n + i, 1});
            }
            c.rhs = pairing.at(i, j);
            cs.push_back(std::move(c));
        }
    return cs;
}

static std::vector<LinearConstraint> duality_constraints(const IntMat& cox) {
    const std::size_t n = cox.n();
    std::vector<LinearConstraint> cs;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LinearConstraint c;
            for (std::size_t k = 0; k < n; ++k)
                if (cox.at(k, j) != 0) c.terms.push_back({i * n + k, cox.at(k, j)});
            c.terms.push_back({j * n + i, 1});
            c.rhs = 0;
            cs.push_back(std::move(c));
        }
    return cs;
}

IntMat euler_form_from_axioms(const SystemDescriptor& sys) {
    IntMat pairing = cartan_form(sys);
    IntMat cox = coxeter_matrix(sys).matrix;
    auto cs = symmetrization_constraints(pairing);
    auto dual = duality_constraints(cox);
    cs.insert(cs.end(), dual.begin(), dual.end());
    BilinearSolution sol = solve_bilinear_system(sys.mu, cs);
    if (sol.status == SolveStatus::NoSolution)
        throw InternalInconsistency("Euler-form equations have no integral solution");
    if (sol.status == SolveStatus::NonUnique)
        throw InternalInconsistency("Euler-form equations leave " +
                                    std::to_string(sol.freedom) + " degrees of freedom");
    return sol.matrix;
}

int64_t chi_delta(const IntVec& v) {
    return checked_add(v[0], v[1]);
}

IntVec finite_part(const SystemDescriptor& sys, const IntVec& v) {
    return v - delta(sys).scaled(v[0]);
}

std::string encode_vec(const IntVec& v) {
    std::string s;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(v[i]);
    }
    return s;
}

std::vector<IntVec> finite_real_roots(const SystemDescriptor& sys) {
    IntMat form = cartan_form(sys);
    std::vector<IntVec> simples;
    for (std::size_t v = 1; v < sys.mu; ++v)
        simples.push_back(simple_root(sys, v));

    std::vector<IntVec> roots;
    std::unordered_set<std::string> seen;
    std::deque<IntVec> queue;
    auto push = [&](const IntVec& v) {
        if (seen.insert(encode_vec(v)).second) {
            roots.push_back(v);
            queue.push_back(v);
        }
    };
    for (const auto& s : simples) push(s);
    while (!queue.empty()) {
        IntVec v = queue.front();
        queue.pop_front();
        for (const auto& s : simples) push(reflect(form, s, v));
    }
    return roots;
}

RootIndex::RootIndex(const SystemDescriptor& sys)
    : sys_(sys), cartan_(cartan_form(sys)), finite_(finite_real_roots(sys)) {
    for (const auto& r : finite_) finite_keys_.insert(encode_vec(r));
}

bool RootIndex::is_real_root(const IntVec& v) const {
    if (v.dim() != sys_.mu)
        throw std::invalid_argument("is_real_root: dimension mismatch");
    return finite_keys_.count(encode_vec(finite_part(sys_, v))) != 0;
}

bool RootIndex::is_positive_root(const IntVec& v) const {
    if (!is_real_root(v))
        throw NotARoot("not a real root: (" + encode_vec(v) + ")");
    if (v[0] != 0) return v[0] > 0;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v[i] < 0) return false;
    return true;
}

CheckReport verify_euler_uniqueness(const SystemDescriptor& sys) {
    CheckReport rep("euler-uniqueness");
    IntMat pairing = cartan_form(sys);
    IntMat tri = euler_form_triangular(sys);
    IntMat cox = coxeter_matrix(sys).matrix;

    rep.add("triangular-symmetrizes-to-pairing", tri + tri.transpose() == pairing);
    rep.add("triangular-satisfies-duality",
            mat_mul(tri, cox) == -tri.transpose());

    auto cs = symmetrization_constraints(pairing);
    auto dual = duality_constraints(cox);
    std::vector<LinearConstraint> both = cs;
    both.insert(both.end(), dual.begin(), dual.end());
    BilinearSolution full = solve_bilinear_system(sys.mu, both);
    rep.add("axioms-have-unique-integral-solution", full.status == SolveStatus::Unique);
    rep.add("axioms-reproduce-triangular-form",
            full.status == SolveStatus::Unique && full.matrix == tri);

    BilinearSolution part = solve_bilinear_system(sys.mu, cs);
    std::size_t expected = sys.mu * (sys.mu - 1) / 2;
    bool under = part.status == SolveStatus::NonUnique && part.freedom == expected;
    rep.add("symmetrization-alone-underdetermines", under,
            "expected freedom " + std::to_string(expected));
    return rep;
}

} // namespace grs
