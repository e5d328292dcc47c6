#include "hda/integer_matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace hda {

using Rational = boost::multiprecision::cpp_rational;

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_rows(std::initializer_list<std::initializer_list<long long>> rows)
{
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntegerMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("from_rows: ragged rows");
        }
        std::size_t j = 0;
        for (long long v : row) {
            m(i, j++) = v;
        }
        ++i;
    }
    return m;
}

IntegerMatrix IntegerMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns)
{
    IntegerMatrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("from_columns: column length mismatch");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntegerMatrix IntegerMatrix::transpose() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

std::vector<Integer> IntegerMatrix::column(std::size_t c) const
{
    std::vector<Integer> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

IntegerMatrix IntegerMatrix::columns_from(std::size_t first) const
{
    IntegerMatrix out(rows_, first >= cols_ ? 0 : cols_ - first);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < out.cols(); ++c) {
            out(r, c) = (*this)(r, first + c);
        }
    }
    return out;
}

IntegerMatrix IntegerMatrix::hconcat(const IntegerMatrix& right) const
{
    if (rows_ != right.rows_) {
        throw std::invalid_argument("hconcat: row count mismatch");
    }
    IntegerMatrix out(rows_, cols_ + right.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(r, c) = (*this)(r, c);
        }
        for (std::size_t c = 0; c < right.cols_; ++c) {
            out(r, cols_ + c) = right(r, c);
        }
    }
    return out;
}

std::string IntegerMatrix::to_string() const
{
    std::string out = "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        out += r > 0 ? ", [" : "[";
        for (std::size_t c = 0; c < cols_; ++c) {
            out += (c > 0 ? "," : "") + (*this)(r, c).str();
        }
        out += "]";
    }
    return out + "]";
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matrix product: inner dimensions differ");
    }
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(r, k) == 0) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += a(r, k) * b(k, c);
            }
        }
    }
    return out;
}

Integer determinant(const IntegerMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("determinant: matrix is not square");
    }
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) {
                ++swap;
            }
            if (swap == n) {
                return 0;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(swap, c));
            }
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::swap(m(a, c), m(b, c));
    }
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b)
{
    if (a == b) {
        return;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::swap(m(r, a), m(r, b));
    }
}

// row_target -= q * row_source
void add_row_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& q)
{
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(source, c) != 0) {
            m(target, c) -= q * m(source, c);
        }
    }
}

// col_target -= q * col_source
void add_col_multiple(IntegerMatrix& m, std::size_t target, std::size_t source, const Integer& q)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (m(r, source) != 0) {
            m(r, target) -= q * m(r, source);
        }
    }
}

} // namespace

std::vector<Integer> SmithDecomposition::invariant_factors() const
{
    std::vector<Integer> out;
    for (std::size_t t = 0; t < rank; ++t) {
        out.push_back(D(t, t));
    }
    return out;
}

SmithDecomposition smith_normal_form(const IntegerMatrix& m)
{
    SmithDecomposition s{IntegerMatrix::identity(m.rows()), m, IntegerMatrix::identity(m.cols()), 0};
    auto& A = s.D;
    auto& U = s.U;
    auto& V = s.V;
    const std::size_t rows = A.rows();
    const std::size_t cols = A.cols();

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        bool found = false;
        std::size_t pr = t;
        std::size_t pc = t;
        for (std::size_t r = t; r < rows && !(found && abs(A(pr, pc)) == 1); ++r) {
            for (std::size_t c = t; c < cols; ++c) {
                if (A(r, c) != 0 && (!found || abs(A(r, c)) < abs(A(pr, pc)))) {
                    found = true;
                    pr = r;
                    pc = c;
                    if (abs(A(r, c)) == 1) {
                        break;
                    }
                }
            }
        }
        if (!found) {
            break;
        }
        swap_rows(A, t, pr);
        swap_rows(U, t, pr);
        swap_cols(A, t, pc);
        swap_cols(V, t, pc);

        while (true) {
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (A(r, t) != 0) {
                    const Integer q = floor_div(A(r, t), A(t, t));
                    add_row_multiple(A, r, t, q);
                    add_row_multiple(U, r, t, q);
                    clean = clean && A(r, t) == 0;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (A(t, c) != 0) {
                    const Integer q = floor_div(A(t, c), A(t, t));
                    add_col_multiple(A, c, t, q);
                    add_col_multiple(V, c, t, q);
                    clean = clean && A(t, c) == 0;
                }
            }
            if (!clean) {
                // A remainder is now smaller than the pivot; promote it.
                std::size_t br = t;
                std::size_t bc = t;
                for (std::size_t r = t + 1; r < rows; ++r) {
                    if (A(r, t) != 0 && abs(A(r, t)) < abs(A(br, bc))) {
                        br = r;
                        bc = t;
                    }
                }
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (A(t, c) != 0 && abs(A(t, c)) < abs(A(br, bc))) {
                        br = t;
                        bc = c;
                    }
                }
                swap_rows(A, t, br);
                swap_rows(U, t, br);
                swap_cols(A, t, bc);
                swap_cols(V, t, bc);
                continue;
            }
            // Divisibility: fold any offending row into the pivot row and retry.
            bool divides = true;
            for (std::size_t r = t + 1; r < rows && divides && abs(A(t, t)) != 1; ++r) {
                for (std::size_t c = t + 1; c < cols; ++c) {
                    if (A(r, c) % A(t, t) != 0) {
                        add_row_multiple(A, t, r, Integer(-1));
                        add_row_multiple(U, t, r, Integer(-1));
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (A(t, t) < 0) {
            for (std::size_t c = 0; c < cols; ++c) {
                A(t, c) = -A(t, c);
            }
            for (std::size_t c = 0; c < U.cols(); ++c) {
                U(t, c) = -U(t, c);
            }
        }
        s.rank = t + 1;
    }
    return s;
}

namespace {

// Row-style Hermite normal form, zero rows dropped.
IntegerMatrix row_hermite(IntegerMatrix A)
{
    const std::size_t rows = A.rows();
    const std::size_t cols = A.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i) {
                if (A(i, c) != 0 && (best == rows || abs(A(i, c)) < abs(A(best, c)))) {
                    best = i;
                }
            }
            if (best == rows) {
                break;
            }
            swap_rows(A, r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (A(i, c) != 0) {
                    add_row_multiple(A, i, r, A(i, c) / A(r, c));
                    clean = clean && A(i, c) == 0;
                }
            }
            if (clean) {
                break;
            }
        }
        if (A(r, c) == 0) {
            continue;
        }
        if (A(r, c) < 0) {
            for (std::size_t j = 0; j < cols; ++j) {
                A(r, j) = -A(r, j);
            }
        }
        for (std::size_t i = 0; i < r; ++i) {
            if (A(i, c) != 0) {
                add_row_multiple(A, i, r, floor_div(A(i, c), A(r, c)));
            }
        }
        ++r;
    }
    IntegerMatrix out(r, cols);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            out(i, j) = A(i, j);
        }
    }
    return out;
}

} // namespace

IntegerMatrix hermite_normal_form(const IntegerMatrix& m)
{
    auto rows = row_hermite(m.transpose());
    if (rows.rows() == 0) {
        return IntegerMatrix(m.rows(), 0);
    }
    return rows.transpose();
}

IntegerMatrix rational_span_basis(const IntegerMatrix& m)
{
    // Reduced row echelon form of the transpose over Q.
    const std::size_t rows = m.cols();
    const std::size_t cols = m.rows();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            a[i][j] = Rational(m(j, i));
        }
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[r], a[pivot]);
        const Rational lead = a[r][c];
        for (auto& v : a[r]) {
            v /= lead;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != r && a[i][c] != 0) {
                const Rational f = a[i][c];
                for (std::size_t j = 0; j < cols; ++j) {
                    a[i][j] -= f * a[r][j];
                }
            }
        }
        ++r;
    }
    IntegerMatrix out(cols, r);
    for (std::size_t i = 0; i < r; ++i) {
        Integer lcm = 1;
        for (const auto& v : a[i]) {
            lcm = boost::multiprecision::lcm(lcm, Integer(boost::multiprecision::denominator(v)));
        }
        Integer g = 0;
        std::vector<Integer> scaled(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            const Rational v = a[i][j] * Rational(lcm);
            scaled[j] = boost::multiprecision::numerator(v);
            g = boost::multiprecision::gcd(g, scaled[j]);
        }
        for (std::size_t j = 0; j < cols; ++j) {
            out(j, i) = g == 0 ? scaled[j] : Integer(scaled[j] / g);
        }
    }
    return out;
}

} // namespace hda
