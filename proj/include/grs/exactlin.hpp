#pragma once

/*
 * Exact integer and rational linear algebra on checked 64-bit integers.
 *
 * Every arithmetic operation is exact.  Signed overflow of the 64-bit
 * representation is detected and reported as an OverflowError, never
 * wrapped silently.  Determinants and the linear solver use fraction-free
 * (Bareiss) elimination, so all intermediate values stay in the integers
 * and divisions are exact; the solver certifies integrality of the result.
 *
 * All values have plain value semantics and no interior mutation, so they
 * are safe to share between threads.
 */

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grs {

struct OverflowError : std::runtime_error {
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

struct NotUnimodular : std::runtime_error {
    explicit NotUnimodular(const std::string& what) : std::runtime_error(what) {}
};

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_sub(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);
int64_t checked_neg(int64_t a);

/* Column vector of fixed dimension. */
class IntVec {
public:
    IntVec() = default;
    explicit IntVec(std::size_t dim) : e_(dim, 0) {}
    IntVec(std::initializer_list<int64_t> xs) : e_(xs) {}
    static IntVec unit(std::size_t dim, std::size_t i);

    std::size_t dim() const { return e_.size(); }
    int64_t operator[](std::size_t i) const { return e_[i]; }
    int64_t& operator[](std::size_t i) { return e_[i]; }

    IntVec operator+(const IntVec& o) const;
    IntVec operator-(const IntVec& o) const;
    IntVec operator-() const;
    IntVec scaled(int64_t c) const;
    bool is_zero() const;
    bool operator==(const IntVec& o) const = default;

private:
    std::vector<int64_t> e_;
};

/* Square matrix, row-major storage. */
class IntMat {
public:
    IntMat() = default;
    explicit IntMat(std::size_t n) : n_(n), e_(n * n, 0) {}
    static IntMat identity(std::size_t n);
    static IntMat from_rows(std::initializer_list<std::initializer_list<int64_t>> rows);

    std::size_t n() const { return n_; }
    int64_t at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, int64_t v) { e_[i * n_ + j] = v; }

    IntMat transpose() const;
    IntVec apply(const IntVec& v) const;
    IntMat operator+(const IntMat& o) const;
    IntMat operator-() const;
    int64_t det() const;
    bool operator==(const IntMat& o) const = default;

private:
    std::size_t n_ = 0;
    std::vector<int64_t> e_;
};

IntMat mat_mul(const IntMat& a, const IntMat& b);

/* Exact integer inverse; requires det = +-1, else NotUnimodular. */
IntMat mat_inverse_unimodular(const IntMat& m);

/* m^e with e allowed negative when m is unimodular. */
IntMat mat_pow(const IntMat& m, int64_t e);

/* Rational number in lowest terms with positive denominator. */
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d);

    bool is_integer() const { return den == 1; }
    bool is_positive() const { return num > 0; }
    bool operator==(const Rat& o) const = default;
};

Rat operator+(const Rat& a, const Rat& b);
Rat operator-(const Rat& a, const Rat& b);
Rat operator*(const Rat& a, const Rat& b);
Rat operator/(const Rat& a, const Rat& b);
std::string to_string(const Rat& r);

/* One integer-linear equation over the entries of an unknown n x n matrix,
 * the unknowns being numbered row-major: sum of coeff * x[index] = rhs. */
struct LinearConstraint {
    std::vector<std::pair<std::size_t, int64_t>> terms;
    int64_t rhs = 0;
};

enum class SolveStatus { Unique, NoSolution, NonUnique };

struct BilinearSolution {
    SolveStatus status = SolveStatus::NoSolution;
    IntMat matrix;           /* the unique solution when status == Unique */
    std::size_t freedom = 0; /* solution-space dimension when status == NonUnique */
};

/* Solve for the n*n unknown matrix entries by fraction-free elimination,
 * then certify that the unique solution is integral. */
BilinearSolution solve_bilinear_system(std::size_t n,
                                       const std::vector<LinearConstraint>& constraints);

} // namespace grs
