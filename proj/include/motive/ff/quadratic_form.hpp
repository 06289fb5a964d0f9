#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "motive/ff/prime_field.hpp"

namespace motive::ff {

/// Row-major position of the pair (i, j), i <= j, among n(n+1)/2 cells.
int pair_index(int n, int i, int j);
inline int pair_count(int n) { return n * (n + 1) / 2; }

/// Square matrix over F_q stored row-major.
struct MatrixFq {
    int n = 0;
    std::vector<std::uint32_t> entries;

    std::uint32_t at(int row, int col) const { return entries[static_cast<std::size_t>(row * n + col)]; }
    std::uint32_t &at(int row, int col) { return entries[static_cast<std::size_t>(row * n + col)]; }
};

/// Rank by Gaussian elimination; the first nonzero entry at or below the
/// current row is taken as pivot.
int matrix_rank(const PrimeField &field, MatrixFq m);

/// Quadratic form sum_{i<=j} c_ij x_i x_j on F_q^n.
class QuadraticFormFq {
public:
    QuadraticFormFq(std::shared_ptr<const PrimeField> field, int n);
    /// Entries are reduced mod q; size must be n(n+1)/2.
    QuadraticFormFq(std::shared_ptr<const PrimeField> field, int n, std::vector<std::uint32_t> coeffs);

    const PrimeField &field() const noexcept { return *field_; }
    const std::shared_ptr<const PrimeField> &field_ptr() const noexcept { return field_; }
    int dimension() const noexcept { return n_; }
    const std::vector<std::uint32_t> &coefficients() const noexcept { return coeffs_; }

    std::uint32_t coefficient(int i, int j) const;
    void set_coefficient(int i, int j, std::uint32_t value);

    std::uint32_t evaluate(std::span<const std::uint32_t> v) const;

    /// Symmetric B with B_ii = c_ii, B_ij = c_ij / 2, so Q(v) = v^T B v.
    MatrixFq polar_matrix() const;

    friend bool operator==(const QuadraticFormFq &a, const QuadraticFormFq &b) {
        return a.field_->q() == b.field_->q() && a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::shared_ptr<const PrimeField> field_;
    int n_;
    std::vector<std::uint32_t> coeffs_;
};

/// n - dim rad(Q): the rank of the polar matrix (char != 2).
int gram_rank(const QuadraticFormFq &form);

/// The form v -> Q(g v).
QuadraticFormFq pullback(const QuadraticFormFq &form, const MatrixFq &g);

/// x_1 x_2 + ... + x_{2r-1} x_{2r} for n = 2r, with an extra x_0^2 in front
/// for n = 2r+1 (0-based: x_0^2 + x_1 x_2 + ...).
QuadraticFormFq split_form(int n, std::uint32_t q);

} // namespace motive::ff
