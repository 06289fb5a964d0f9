#include "motive/formal_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "motive/errors.hpp"

namespace motive {

FormalSeries::FormalSeries(int order) {
    if (order < 0) {
        throw std::invalid_argument("FormalSeries: order must be non-negative");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

FormalSeries::FormalSeries(std::vector<MotiveClass> coefficients, int order) : coeffs_(std::move(coefficients)) {
    if (order < 0) {
        throw std::invalid_argument("FormalSeries: order must be non-negative");
    }
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

FormalSeries FormalSeries::linear(const MotiveClass &c0, const MotiveClass &c1, int order) {
    FormalSeries s(order);
    s.coeffs_[0] = c0;
    if (order >= 1) {
        s.coeffs_[1] = c1;
    }
    return s;
}

const MotiveClass &FormalSeries::operator[](int k) const {
    if (k < 0 || k > order()) {
        throw std::out_of_range("FormalSeries: coefficient index beyond the known order");
    }
    return coeffs_[static_cast<std::size_t>(k)];
}

FormalSeries FormalSeries::operator-() const {
    FormalSeries r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

FormalSeries operator+(const FormalSeries &a, const FormalSeries &b) {
    const int n = std::min(a.order(), b.order());
    FormalSeries r(n);
    for (int k = 0; k <= n; ++k) {
        r.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
    }
    return r;
}

FormalSeries operator-(const FormalSeries &a, const FormalSeries &b) { return a + (-b); }

FormalSeries operator*(const FormalSeries &a, const FormalSeries &b) {
    const int n = std::min(a.order(), b.order());
    FormalSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (int j = 0; i + j <= n; ++j) {
            if (!b.coeffs_[j].is_zero()) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    return r;
}

bool operator==(const FormalSeries &a, const FormalSeries &b) {
    return a.order() == b.order() && std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin());
}

FormalSeries FormalSeries::reciprocal() const {
    if (!coeffs_[0].is_invertible()) {
        throw NotInvertibleConstant("constant coefficient " + coeffs_[0].to_string() + " is not a unit");
    }
    const MotiveClass inv0 = coeffs_[0].inverse();
    FormalSeries r(order());
    r.coeffs_[0] = inv0;
    for (int n = 1; n <= order(); ++n) {
        MotiveClass acc;
        for (int k = 1; k <= n; ++k) {
            if (!coeffs_[k].is_zero()) {
                acc += coeffs_[k] * r.coeffs_[n - k];
            }
        }
        r.coeffs_[n] = -(acc * inv0);
    }
    return r;
}

FormalSeries FormalSeries::scale_variable(const MotiveClass &c) const {
    FormalSeries r(order());
    MotiveClass power(1);
    for (int k = 0; k <= order(); ++k) {
        r.coeffs_[k] = coeffs_[k] * power;
        power *= c;
    }
    return r;
}

FormalSeries FormalSeries::truncated(int order) const {
    if (order > this->order()) {
        throw std::invalid_argument("FormalSeries: cannot raise the known order");
    }
    return FormalSeries(std::vector<MotiveClass>(coeffs_.begin(), coeffs_.begin() + order + 1), order);
}

} // namespace motive
