#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace hda {

using Integer = boost::multiprecision::cpp_int;

// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntegerMatrix identity(std::size_t n);
    static IntegerMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
    // rows x k matrix from k columns of equal length.
    static IntegerMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] IntegerMatrix transpose() const;
    [[nodiscard]] std::vector<Integer> column(std::size_t c) const;
    // Columns [first, cols()).
    [[nodiscard]] IntegerMatrix columns_from(std::size_t first) const;
    // Side-by-side concatenation; row counts must agree.
    [[nodiscard]] IntegerMatrix hconcat(const IntegerMatrix& right) const;

    [[nodiscard]] std::string to_string() const;

    bool operator==(const IntegerMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntegerMatrix& m);

/// U * M * V = D with U, V unimodular and D diagonal, its nonzero entries
/// positive and forming a divisibility chain d_1 | d_2 | ... .
struct SmithDecomposition {
    IntegerMatrix U;
    IntegerMatrix D;
    IntegerMatrix V;
    std::size_t rank = 0;

    // The nonzero diagonal entries d_1, ..., d_rank.
    [[nodiscard]] std::vector<Integer> invariant_factors() const;
};

SmithDecomposition smith_normal_form(const IntegerMatrix& m);

/// Canonical basis of the lattice spanned by the columns of m: column-style
/// Hermite normal form. Column c has its first nonzero entry (positive) in row
/// p_c with p_0 < p_1 < ..., and every earlier column's entry in row p_c lies
/// in [0, that pivot). Zero columns are dropped.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// Canonical basis of the rational span of the columns of m: reduced
/// echelon form with every column scaled to a primitive integer vector with a
/// positive leading entry.
IntegerMatrix rational_span_basis(const IntegerMatrix& m);

} // namespace hda
