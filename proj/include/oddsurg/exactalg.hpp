#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace oddsurg::exactalg {

using Int = mpz_class;
using Rational = mpq_class;

// Reduced fraction with positive denominator. Throws std::invalid_argument
// when den == 0. All gmpxx arithmetic on canonical values stays canonical.
Rational make_rational(const Int& num, const Int& den);

// "p/q", or just "p" when q == 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// True iff q is in Z + 1/2.
bool is_half_integer(const Rational& q);

// Dense row-major integer matrix with arbitrary-precision entries.
// The symmetric tag is declarative: it is only set through
// declare_symmetric(), which verifies the entries first.
class IntMatrix {
  public:
    IntMatrix() = default;  // 0x0
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Int& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    bool is_symmetric() const;
    bool symmetric_tag() const { return symmetric_; }
    void declare_symmetric();  // throws std::invalid_argument if entries disagree

    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix& a, const IntMatrix& b);

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    bool symmetric_ = false;
    std::vector<Int> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);

std::string to_string(const IntMatrix& m);

// U * M * V = D with D diagonal, nonnegative, and d1 | d2 | ... ;
// U and V unimodular. Total on every integer matrix, including empty ones.
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};

SmithForm smith_normal_form(const IntMatrix& m);

// Exact determinant by fraction-free (Bareiss) elimination.
// Throws std::invalid_argument on non-square input. det of the 0x0 matrix is 1.
Int determinant(const IntMatrix& m);

// Signature of a symmetric matrix: (#positive) - (#negative) eigenvalues,
// computed exactly by congruence diagonalization over the rationals.
// Zero eigenvalues contribute nothing. Throws std::invalid_argument on
// asymmetric input.
long signature(const IntMatrix& s);

// Exact solution a of S a = c, if one exists over Q. When S is singular but
// the system is consistent, free variables are set to zero. Returns nullopt
// when c is outside the rational column space.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& s,
                                                    const std::vector<Int>& c);

}  // namespace oddsurg::exactalg
