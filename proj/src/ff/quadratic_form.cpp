#include "motive/ff/quadratic_form.hpp"

#include <stdexcept>
#include <utility>

namespace motive::ff {

int pair_index(int n, int i, int j) {
    if (i > j) {
        std::swap(i, j);
    }
    // Rows 0..i-1 hold n, n-1, ..., n-i+1 cells.
    return i * n - i * (i - 1) / 2 + (j - i);
}

int matrix_rank(const PrimeField &field, MatrixFq m) {
    const int n = m.n;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row) {
            if (m.at(row, col) != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) {
            continue;
        }
        if (pivot != rank) {
            for (int c = col; c < n; ++c) {
                std::swap(m.at(pivot, c), m.at(rank, c));
            }
        }
        const std::uint32_t inv = field.inv(m.at(rank, col));
        for (int row = rank + 1; row < n; ++row) {
            const std::uint32_t f = field.mul(m.at(row, col), inv);
            if (f == 0) {
                continue;
            }
            for (int c = col; c < n; ++c) {
                m.at(row, c) = field.sub(m.at(row, c), field.mul(f, m.at(rank, c)));
            }
        }
        ++rank;
    }
    return rank;
}

QuadraticFormFq::QuadraticFormFq(std::shared_ptr<const PrimeField> field, int n)
    : field_(std::move(field)), n_(n), coeffs_(static_cast<std::size_t>(pair_count(n)), 0) {
    if (!field_ || n < 0) {
        throw std::invalid_argument("QuadraticFormFq: need a field and n >= 0");
    }
}

QuadraticFormFq::QuadraticFormFq(std::shared_ptr<const PrimeField> field, int n, std::vector<std::uint32_t> coeffs)
    : field_(std::move(field)), n_(n), coeffs_(std::move(coeffs)) {
    if (!field_ || n < 0) {
        throw std::invalid_argument("QuadraticFormFq: need a field and n >= 0");
    }
    if (coeffs_.size() != static_cast<std::size_t>(pair_count(n))) {
        throw std::invalid_argument("QuadraticFormFq: expected n(n+1)/2 coefficients");
    }
    for (auto &c : coeffs_) {
        c %= field_->q();
    }
}

std::uint32_t QuadraticFormFq::coefficient(int i, int j) const {
    return coeffs_[static_cast<std::size_t>(pair_index(n_, i, j))];
}

void QuadraticFormFq::set_coefficient(int i, int j, std::uint32_t value) {
    coeffs_[static_cast<std::size_t>(pair_index(n_, i, j))] = value % field_->q();
}

std::uint32_t QuadraticFormFq::evaluate(std::span<const std::uint32_t> v) const {
    if (static_cast<int>(v.size()) != n_) {
        throw std::invalid_argument("QuadraticFormFq::evaluate: dimension mismatch");
    }
    const PrimeField &f = *field_;
    std::uint32_t acc = 0;
    for (int i = 0; i < n_; ++i) {
        for (int j = i; j < n_; ++j) {
            acc = f.add(acc, f.mul(coefficient(i, j), f.mul(v[i], v[j])));
        }
    }
    return acc;
}

MatrixFq QuadraticFormFq::polar_matrix() const {
    MatrixFq b{n_, std::vector<std::uint32_t>(static_cast<std::size_t>(n_ * n_), 0)};
    for (int i = 0; i < n_; ++i) {
        b.at(i, i) = coefficient(i, i);
        for (int j = i + 1; j < n_; ++j) {
            const std::uint32_t h = field_->mul(coefficient(i, j), field_->half());
            b.at(i, j) = h;
            b.at(j, i) = h;
        }
    }
    return b;
}

int gram_rank(const QuadraticFormFq &form) { return matrix_rank(form.field(), form.polar_matrix()); }

QuadraticFormFq pullback(const QuadraticFormFq &form, const MatrixFq &g) {
    const int n = form.dimension();
    if (g.n != n) {
        throw std::invalid_argument("pullback: matrix size mismatch");
    }
    const PrimeField &f = form.field();
    QuadraticFormFq out(form.field_ptr(), n);
    // Q(g v) = sum_{a<=b} c_ab (g v)_a (g v)_b; collect the v_i v_j terms.
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::uint32_t acc = 0;
            for (int a = 0; a < n; ++a) {
                for (int b = a; b < n; ++b) {
                    const std::uint32_t c = form.coefficient(a, b);
                    if (c == 0) {
                        continue;
                    }
                    std::uint32_t t = f.mul(g.at(a, i), g.at(b, j));
                    if (i != j) {
                        t = f.add(t, f.mul(g.at(a, j), g.at(b, i)));
                    }
                    acc = f.add(acc, f.mul(c, t));
                }
            }
            out.set_coefficient(i, j, acc);
        }
    }
    return out;
}

QuadraticFormFq split_form(int n, std::uint32_t q) {
    QuadraticFormFq form(std::make_shared<const PrimeField>(q), n);
    int first = 0;
    if (n % 2 == 1) {
        form.set_coefficient(0, 0, 1);
        first = 1;
    }
    for (int i = first; i + 1 < n; i += 2) {
        form.set_coefficient(i, i + 1, 1);
    }
    return form;
}

} // namespace motive::ff
