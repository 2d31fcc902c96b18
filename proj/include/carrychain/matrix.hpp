#pragma once

#include "carrychain/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace carrychain {

/// Dense row-major matrix of exact rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static Matrix identity(std::size_t n);
    static Matrix diagonal(std::span<const Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const Rational> row(std::size_t i) const {
        return {entries_.data() + i * cols_, cols_};
    }

    Matrix transpose() const;
    Matrix scaled(const Rational& factor) const;

    /// Row vector times matrix: returns v^T A.
    std::vector<Rational> left_multiply(std::span<const Rational> v) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

/// All binary operations throw std::invalid_argument on a dimension mismatch.
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

/// One differing entry between two matrices of equal shape.
struct EntryDiff {
    std::size_t row = 0;
    std::size_t col = 0;
    Rational expected;
    Rational actual;
};
/// Row-major list of differing entries; throws std::invalid_argument on a shape mismatch.
std::vector<EntryDiff> diff(const Matrix& expected, const Matrix& actual);

std::string to_string(const Matrix& m);

}  // namespace carrychain
