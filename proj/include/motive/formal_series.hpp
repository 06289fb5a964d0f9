#pragma once

#include <cstddef>
#include <vector>

#include "motive/motive_class.hpp"

namespace motive {

/// Power series in x with MotiveClass coefficients, known through x^order.
class FormalSeries {
public:
    /// The zero series of the given order.
    explicit FormalSeries(int order);
    /// Coefficients are padded with zeros (or cut) to order + 1 entries.
    FormalSeries(std::vector<MotiveClass> coefficients, int order);

    /// c0 + c1 x of the given order.
    static FormalSeries linear(const MotiveClass &c0, const MotiveClass &c1, int order);

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<MotiveClass> &coefficients() const noexcept { return coeffs_; }
    /// Zero past the stored order is not implied: asking beyond it throws.
    const MotiveClass &operator[](int k) const;

    FormalSeries operator-() const;
    friend FormalSeries operator+(const FormalSeries &a, const FormalSeries &b);
    friend FormalSeries operator-(const FormalSeries &a, const FormalSeries &b);
    /// Cauchy product truncated at the smaller order.
    friend FormalSeries operator*(const FormalSeries &a, const FormalSeries &b);
    friend bool operator==(const FormalSeries &a, const FormalSeries &b);

    /// Formal inverse; throws NotInvertibleConstant unless the constant
    /// coefficient is an invertible class.
    FormalSeries reciprocal() const;

    /// x -> c x: coefficient k picks up c^k.
    FormalSeries scale_variable(const MotiveClass &c) const;

    FormalSeries truncated(int order) const;

private:
    std::vector<MotiveClass> coeffs_;
};

} // namespace motive
