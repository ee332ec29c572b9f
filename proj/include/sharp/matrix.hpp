#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include "sharp/error.hpp"
#include "sharp/scalar.hpp"

namespace sharp {

enum class Mode { exact, floating };

std::string_view to_string(Mode mode);

/// Comparison thresholds for floating-mode predicates. Exact mode ignores them.
struct Tolerance {
    double rel = 1e-9;
    double rank_threshold_factor = 1e-10;

    /// Throws InvalidArgument unless both fields are positive.
    void validate() const;
};

/// Dense row-major complex matrix in one of two arithmetics. Every entry of a
/// given matrix shares the matrix mode.
class Matrix {
public:
    using ExactData = std::vector<Gaussian>;
    using FloatData = std::vector<Complex>;

    Matrix() : data_(ExactData{}) {}

    static Matrix zero(std::size_t rows, std::size_t cols, Mode mode);
    static Matrix identity(std::size_t n, Mode mode);
    static Matrix exact(std::size_t rows, std::size_t cols, ExactData entries);
    static Matrix floating(std::size_t rows, std::size_t cols, FloatData entries);
    static Matrix exact(std::initializer_list<std::initializer_list<Gaussian>> rows);
    static Matrix floating(std::initializer_list<std::initializer_list<Complex>> rows);
    /// diag(d_0, ..., d_{n-1}) in exact mode.
    static Matrix diagonal(const std::vector<Gaussian>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }
    Mode mode() const { return std::holds_alternative<ExactData>(data_) ? Mode::exact : Mode::floating; }

    const ExactData& exact_data() const;
    const FloatData& float_data() const;

    const Gaussian& exact_at(std::size_t i, std::size_t j) const { return exact_data()[i * cols_ + j]; }
    const Complex& float_at(std::size_t i, std::size_t j) const { return float_data()[i * cols_ + j]; }
    /// Entry as a double-precision complex, whatever the mode.
    Complex value(std::size_t i, std::size_t j) const;
    Scalar at(std::size_t i, std::size_t j) const;

    void set(std::size_t i, std::size_t j, const Gaussian& v);
    void set(std::size_t i, std::size_t j, const Complex& v);

    Matrix to_float() const;
    /// Exact conversion of a floating matrix uses the binary value of each double.
    Matrix to_exact() const;
    Matrix with_mode(Mode mode) const { return mode == Mode::exact ? to_exact() : to_float(); }

    Matrix adjoint() const;
    Matrix transpose() const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    double frobenius_norm() const;
    Scalar trace() const;
    bool is_zero() const;

    std::string debug_string() const;

    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Gaussian& s, const Matrix& m);
    friend Matrix operator*(const Complex& s, const Matrix& m);
    /// Structural equality: same mode, shape and bit-identical entries.
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Matrix(std::size_t rows, std::size_t cols, std::variant<ExactData, FloatData> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::variant<ExactData, FloatData> data_;
};

// Assembly helpers.
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix block_diag(const std::vector<Matrix>& blocks);
Matrix blocks2x2(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);
Matrix power(const Matrix& m, unsigned k);

/// Promote both operands to floating mode if their modes differ.
void unify_modes(Matrix& a, Matrix& b);

void require_square(const Matrix& m, const char* what);
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

/// Row-reduced echelon form of an exact matrix with its pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Echelon echelon(const Matrix& m);

std::size_t rank(const Matrix& m, const Tolerance& tol = {});
bool is_projector(const Matrix& m, const Tolerance& tol = {});
bool approx_eq(const Matrix& x, const Matrix& y, const Tolerance& tol = {});
/// X·Y ≈ Y·X.
bool commutes(const Matrix& x, const Matrix& y, const Tolerance& tol = {});
/// Exact mode: Gauss-Jordan. Float mode: partial pivoting. Throws Singular.
Matrix inverse(const Matrix& m, const Tolerance& tol = {});
bool is_nonsingular(const Matrix& m, const Tolerance& tol = {});

}  // namespace sharp
