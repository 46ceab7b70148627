#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "locus/polynomial.hpp"

namespace locus {

/// Dense matrix over an exact field; rows of equal length.
class ScalarMatrix {
public:
    ScalarMatrix(std::size_t rows, std::size_t cols, const Field& f)
        : field_(f), rows_(rows), cols_(cols), a_(rows, std::vector<Scalar>(cols, Scalar::zero(f))) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Scalar& at(std::size_t r, std::size_t c) { return a_[r][c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return a_[r][c]; }
    const Field& field() const { return field_; }

    /// In-place reduced row echelon form; returns pivot column per pivot row.
    std::vector<std::size_t> rref();

    std::size_t rank() const;

    /// Is v in the row span?
    bool row_space_contains(const std::vector<Scalar>& v) const;

    /// One solution of A x = b, if any.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

    /// Basis of the right kernel.
    std::vector<std::vector<Scalar>> kernel() const;

    Scalar determinant() const; // square only

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<std::vector<Scalar>> a_;
};

/// Determinant of a square matrix over a commutative ring, by Laplace
/// expansion with subset memoization; `reduce` normalizes entries after each
/// ring operation (normal-form arithmetic in quotient rings).
Polynomial poly_determinant(const std::vector<std::vector<Polynomial>>& m,
                            const std::function<Polynomial(const Polynomial&)>& reduce);

/// All k x k minors (as polynomials) of an arbitrary matrix.
std::vector<Polynomial> poly_minors(const std::vector<std::vector<Polynomial>>& m, std::size_t k,
                                    const std::function<Polynomial(const Polynomial&)>& reduce);

} // namespace locus
