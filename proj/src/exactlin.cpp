/*
 * Checked 64-bit arithmetic, exact vectors/matrices, Bareiss determinant,
 * unimodular inversion and the fraction-free linear solver.
 */

#include "grs/exactlin.hpp"

#include <algorithm>
#include <numeric>

namespace grs {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("integer overflow in addition");
    return r;
}

int64_t checked_sub(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw OverflowError("integer overflow in subtraction");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("integer overflow in multiplication");
    return r;
}

int64_t checked_neg(int64_t a) {
    return checked_sub(0, a);
}

/* Exact division helper: the Bareiss recurrences only ever divide when the
 * quotient is known to be integral, so a nonzero remainder means the caller
 * is broken, not the input. */
static int64_t exact_div(int64_t a, int64_t b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("exact_div: division is not exact");
    return a / b;
}

IntVec IntVec::unit(std::size_t dim, std::size_t i) {
    IntVec v(dim);
    v[i] = 1;
    return v;
}

IntVec IntVec::operator+(const IntVec& o) const {
    IntVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = checked_add(e_[i], o[i]);
    return r;
}

IntVec IntVec::operator-(const IntVec& o) const {
    IntVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = checked_sub(e_[i], o[i]);
    return r;
}

IntVec IntVec::operator-() const {
    IntVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = checked_neg(e_[i]);
    return r;
}

IntVec IntVec::scaled(int64_t c) const {
    IntVec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) r[i] = checked_mul(e_[i], c);
    return r;
}

bool IntVec::is_zero() const {
    return std::all_of(e_.begin(), e_.end(), [](int64_t x) { return x == 0; });
}

IntMat IntMat::identity(std::size_t n) {
    IntMat m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

IntMat IntMat::from_rows(std::initializer_list<std::initializer_list<int64_t>> rows) {
    IntMat m(rows.size());
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != m.n())
            throw std::invalid_argument("from_rows: matrix must be square");
        std::size_t j = 0;
        for (int64_t v : row) m.set(i, j++, v);
        ++i;
    }
    return m;
}

IntMat IntMat::transpose() const {
    IntMat r(n_);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r.set(j, i, at(i, j));
    return r;
}

IntVec IntMat::apply(const IntVec& v) const {
    if (v.dim() != n_)
        throw std::invalid_argument("apply: dimension mismatch");
    IntVec r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        int64_t s = 0;
        for (std::size_t j = 0; j < n_; ++j)
            s = checked_add(s, checked_mul(at(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

IntMat IntMat::operator+(const IntMat& o) const {
    if (o.n_ != n_)
        throw std::invalid_argument("operator+: dimension mismatch");
    IntMat r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_add(e_[i], o.e_[i]);
    return r;
}

IntMat IntMat::operator-() const {
    IntMat r(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = checked_neg(e_[i]);
    return r;
}

/* Bareiss fraction-free elimination.  Row swaps flip the sign; every
 * division in the update is exact, so the result is the exact integer
 * determinant. */
int64_t IntMat::det() const {
    if (n_ == 0) return 1;
    IntMat w = *this;
    int64_t sign = 1;
    int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n_; ++k) {
        if (w.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n_ && w.at(p, k) == 0) ++p;
            if (p == n_) return 0;
            for (std::size_t j = 0; j < n_; ++j) {
                int64_t t = w.at(k, j);
                w.set(k, j, w.at(p, j));
                w.set(p, j, t);
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n_; ++i) {
            for (std::size_t j = k + 1; j < n_; ++j) {
                int64_t num = checked_sub(checked_mul(w.at(i, j), w.at(k, k)),
                                          checked_mul(w.at(i, k), w.at(k, j)));
                w.set(i, j, exact_div(num, prev));
            }
            w.set(i, k, 0);
        }
        prev = w.at(k, k);
    }
    return checked_mul(sign, w.at(n_ - 1, n_ - 1));
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    std::size_t n = a.n();
    IntMat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int64_t s = 0;
            for (std::size_t k = 0; k < n; ++k)
                s = checked_add(s, checked_mul(a.at(i, k), b.at(k, j)));
            r.set(i, j, s);
        }
    return r;
}

IntMat mat_inverse_unimodular(const IntMat& m) {
    int64_t d = m.det();
    if (d != 1 && d != -1)
        throw NotUnimodular("matrix determinant is " + std::to_string(d) +
                            ", expected +1 or -1");
    std::size_t n = m.n();
    /* Adjugate via cofactor determinants would be O(n^5); instead run
     * Gauss-Jordan over rationals.  Entries stay small for the lattice
     * maps this is used on. */
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m.at(i, j));
        w[i][n + i] = Rat(1);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && w[p][k].num == 0) ++p;
        if (p == n)
            throw NotUnimodular("matrix is singular");
        std::swap(w[k], w[p]);
        Rat piv = w[k][k];
        for (std::size_t j = 0; j < 2 * n; ++j) w[k][j] = w[k][j] / piv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || w[i][k].num == 0) continue;
            Rat f = w[i][k];
            for (std::size_t j = 0; j < 2 * n; ++j)
                w[i][j] = w[i][j] - f * w[k][j];
        }
    }
    IntMat inv(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (!w[i][n + j].is_integer())
                throw NotUnimodular("inverse is not integral");
            inv.set(i, j, w[i][n + j].num);
        }
    if (mat_mul(m, inv) != IntMat::identity(n))
        throw std::logic_error("mat_inverse_unimodular: verification failed");
    return inv;
}

IntMat mat_pow(const IntMat& m, int64_t e) {
    IntMat base = e < 0 ? mat_inverse_unimodular(m) : m;
    uint64_t k = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
    IntMat r = IntMat::identity(m.n());
    IntMat p = base;
    while (k > 0) {
        if (k & 1) r = mat_mul(r, p);
        k >>= 1;
        if (k > 0) p = mat_mul(p, p);
    }
    return r;
}

Rat::Rat(int64_t n, int64_t d) {
    if (d == 0)
        throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = checked_neg(n);
        d = checked_neg(d);
    }
    int64_t g = std::gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
}

Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
}

Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0)
        throw std::domain_error("rational division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}

std::string to_string(const Rat& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

/* Fraction-free echelon reduction of the dense constraint system.  Each
 * constraint is one row over n*n unknowns plus a right-hand side.  The
 * Bareiss update keeps rows integral; after reduction an all-zero row with
 * nonzero rhs certifies inconsistency, and the pivot count gives the rank. */
BilinearSolution solve_bilinear_system(std::size_t n,
                                       const std::vector<LinearConstraint>& constraints) {
    const std::size_t cols = n * n;
    std::vector<std::vector<int64_t>> rows;
    rows.reserve(constraints.size());
    for (const auto& c : constraints) {
        std::vector<int64_t> row(cols + 1, 0);
        for (const auto& [idx, coeff] : c.terms) {
            if (idx >= cols)
                throw std::out_of_range("constraint references unknown outside matrix");
            row[idx] = checked_add(row[idx], coeff);
        }
        row[cols] = c.rhs;
        rows.push_back(std::move(row));
    }

    std::vector<std::size_t> pivot_col;
    int64_t prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        /* Pick the pivot with smallest absolute value to keep the
         * fraction-free intermediates from growing. */
        std::size_t best = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i) {
            if (rows[i][c] == 0) continue;
            if (best == rows.size() ||
                std::abs(rows[i][c]) < std::abs(rows[best][c]))
                best = i;
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        /* The update must touch every row below the pivot, including rows
         * with a zero in the pivot column: it rescales them by the pivot,
         * and that rescaling is what keeps later divisions exact. */
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            for (std::size_t j = c + 1; j <= cols; ++j) {
                int64_t num = checked_sub(checked_mul(rows[i][j], rows[r][c]),
                                          checked_mul(rows[i][c], rows[r][j]));
                rows[i][j] = exact_div(num, prev);
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        pivot_col.push_back(c);
        ++r;
    }

    BilinearSolution out;
    for (std::size_t i = r; i < rows.size(); ++i) {
        bool zero = std::all_of(rows[i].begin(), rows[i].end() - 1,
                                [](int64_t x) { return x == 0; });
        if (zero && rows[i][cols] != 0) {
            out.status = SolveStatus::NoSolution;
            return out;
        }
    }
    if (r < cols) {
        out.status = SolveStatus::NonUnique;
        out.freedom = cols - r;
        return out;
    }

    /* Full rank: back-substitute over rationals, then certify that every
     * entry is an integer. */
    std::vector<Rat> x(cols);
    for (std::size_t k = r; k-- > 0;) {
        std::size_t c = pivot_col[k];
        Rat acc(rows[k][cols]);
        for (std::size_t j = c + 1; j < cols; ++j)
            if (rows[k][j] != 0) acc = acc - Rat(rows[k][j]) * x[j];
        x[c] = acc / Rat(rows[k][c]);
    }
    IntMat m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = x[i * n + j];
            if (!v.is_integer()) {
                out.status = SolveStatus::NoSolution;
                return out;
            }
            m.set(i, j, v.num);
        }
    out.status = SolveStatus::Unique;
    out.matrix = m;
    return out;
}

} // namespace grs
