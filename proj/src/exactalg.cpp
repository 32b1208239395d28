#include "oddsurg/exactalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace oddsurg::exactalg {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

bool is_integer(const Rational& q) {
    return q.get_den() == 1;
}

bool is_half_integer(const Rational& q) {
    return q.get_den() == 2;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c)
            throw std::invalid_argument("from_rows: ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

void IntMatrix::declare_symmetric() {
    if (!is_symmetric())
        throw std::invalid_argument("declare_symmetric: entries are not symmetric");
    symmetric_ = true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix p(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                p.at(i, j) += aik * b.at(k, j);
        }
    return p;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
    if (a.cols() != v.size())
        throw std::invalid_argument("matrix-vector product: dimension mismatch");
    std::vector<Int> r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a.at(i, j) * v[j];
    return r;
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j)
            out << (j ? "," : "") << m.at(i, j).get_str();
        out << ']';
    }
    out << ']';
    return out.str();
}

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] += f * row[src]
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

// Smallest absolute nonzero entry of the lower-right block starting at s.
bool min_abs_nonzero(const IntMatrix& m, std::size_t s, std::size_t& pi, std::size_t& pj) {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < m.rows(); ++i)
        for (std::size_t j = s; j < m.cols(); ++j) {
            const Int& e = m.at(i, j);
            if (e == 0) continue;
            Int a = abs(e);
            if (!found || a < best) {
                found = true;
                best = a;
                pi = i;
                pj = j;
            }
        }
    return found;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
    SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& D = f.D;
    const std::size_t nmin = std::min(m.rows(), m.cols());

    for (std::size_t s = 0; s < nmin; ++s) {
        std::size_t pi = s, pj = s;
        if (!min_abs_nonzero(D, s, pi, pj)) break;  // rest of the matrix is zero

        for (;;) {
            if (pi != s) {
                swap_rows(D, s, pi);
                swap_rows(f.U, s, pi);
            }
            if (pj != s) {
                swap_cols(D, s, pj);
                swap_cols(f.V, s, pj);
            }

            // Division with truncated quotient leaves remainders strictly
            // smaller than the pivot, so re-picking the minimum terminates.
            bool dirty = false;
            for (std::size_t i = s + 1; i < D.rows(); ++i) {
                if (D.at(i, s) == 0) continue;
                Int q = D.at(i, s) / D.at(s, s);
                if (q != 0) {
                    add_row(D, i, s, -q);
                    add_row(f.U, i, s, -q);
                }
                if (D.at(i, s) != 0) dirty = true;
            }
            for (std::size_t j = s + 1; j < D.cols(); ++j) {
                if (D.at(s, j) == 0) continue;
                Int q = D.at(s, j) / D.at(s, s);
                if (q != 0) {
                    add_col(D, j, s, -q);
                    add_col(f.V, j, s, -q);
                }
                if (D.at(s, j) != 0) dirty = true;
            }
            if (dirty) {
                min_abs_nonzero(D, s, pi, pj);
                continue;
            }

            // Pivot is lone; enforce that it divides the remaining block.
            bool divides_all = true;
            for (std::size_t i = s + 1; i < D.rows() && divides_all; ++i)
                for (std::size_t j = s + 1; j < D.cols(); ++j)
                    if (D.at(i, j) % D.at(s, s) != 0) {
                        add_row(D, s, i, 1);
                        add_row(f.U, s, i, 1);
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
            min_abs_nonzero(D, s, pi, pj);
        }

        if (D.at(s, s) < 0) {
            negate_row(D, s);
            negate_row(f.U, s);
        }
    }
    return f;
}

Int determinant(const IntMatrix& m) {
    if (!m.square()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t piv = k;
            while (piv < n && a.at(piv, k) == 0) ++piv;
            if (piv == n) return 0;
            swap_rows(a, k, piv);
            sign = -sign;
        }
        // Bareiss: all divisions below are exact.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    return sign < 0 ? Int(-a.at(n - 1, n - 1)) : a.at(n - 1, n - 1);
}

namespace {

using RatMat = std::vector<std::vector<Rational>>;

void rat_swap_rows(RatMat& a, std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
}

void rat_swap_sym(RatMat& a, std::size_t i, std::size_t j) {
    rat_swap_rows(a, i, j);
    for (auto& row : a) std::swap(row[i], row[j]);
}

// row[dst] += f * row[src], then col[dst] += f * col[src]
void rat_add_sym(RatMat& a, std::size_t dst, std::size_t src, const Rational& f) {
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += f * a[src][j];
    for (std::size_t i = 0; i < n; ++i) a[i][dst] += f * a[i][src];
}

}  // namespace

long signature(const IntMatrix& s) {
    if (!s.square() || !s.is_symmetric())
        throw std::invalid_argument("signature: symmetric matrix required");
    const std::size_t n = s.rows();
    RatMat a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(s.at(i, j));

    long sig = 0;
    for (std::size_t i = 0; i < n; ++i) {
        // Prefer the smallest nonzero diagonal entry as pivot.
        std::size_t best = n;
        for (std::size_t j = i; j < n; ++j) {
            if (a[j][j] == 0) continue;
            if (best == n || abs(a[j][j]) < abs(a[best][best])) best = j;
        }
        if (best == n) {
            // Zero diagonal: pull in an off-diagonal entry, if any, with the
            // symmetric row+column addition trick (a[j][j] becomes 2*a[j][k]).
            std::size_t bj = n, bk = n;
            for (std::size_t j = i; j < n; ++j)
                for (std::size_t k = j + 1; k < n; ++k) {
                    if (a[j][k] == 0) continue;
                    if (bj == n || abs(a[j][k]) < abs(a[bj][bk])) {
                        bj = j;
                        bk = k;
                    }
                }
            if (bj == n) break;  // remaining block is all zero
            rat_add_sym(a, bj, bk, Rational(1));
            best = bj;
        }
        if (best != i) rat_swap_sym(a, i, best);

        const Rational d = a[i][i];
        sig += sgn(d);
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j][i] == 0) continue;
            Rational f = -a[j][i] / d;
            rat_add_sym(a, j, i, f);
        }
    }
    return sig;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& s,
                                                    const std::vector<Int>& c) {
    if (!s.square()) throw std::invalid_argument("solve_rational: square matrix required");
    if (c.size() != s.rows())
        throw std::invalid_argument("solve_rational: dimension mismatch");
    const std::size_t n = s.rows();

    RatMat aug(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(s.at(i, j));
        aug[i][n] = Rational(c[i]);
    }

    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = row; r < n; ++r) {
            if (aug[r][col] == 0) continue;
            if (piv == n || abs(aug[r][col]) < abs(aug[piv][col])) piv = r;
        }
        if (piv == n) continue;
        rat_swap_rows(aug, row, piv);

        const Rational p = aug[row][col];
        for (std::size_t j = col; j <= n; ++j) aug[row][j] /= p;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            const Rational f = aug[r][col];
            for (std::size_t j = col; j <= n; ++j) aug[r][j] -= f * aug[row][j];
        }
        pivots.emplace_back(row, col);
        ++row;
    }

    for (std::size_t r = row; r < n; ++r)
        if (aug[r][n] != 0) return std::nullopt;

    std::vector<Rational> x(n, Rational(0));
    for (const auto& [r, col] : pivots) x[col] = aug[r][n];
    return x;
}

}  // namespace oddsurg::exactalg
