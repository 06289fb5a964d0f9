#include "motive/completed_series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace motive {

namespace {

LaurentPolynomial drop_at_or_below(const LaurentPolynomial &p, int floor_exponent) {
    LaurentPolynomial::TermMap kept;
    for (const auto &[e, c] : p.terms()) {
        if (e > floor_exponent) {
            kept.emplace(e, c);
        }
    }
    return LaurentPolynomial(std::move(kept));
}

// Multiply a pure L^{-1}-series by 1/(L^d - 1) = sum_{k>=1} L^{-kd},
// keeping exponents > floor_exponent.
LaurentPolynomial times_inverse_factor_at_infinity(const LaurentPolynomial &s, int d, int floor_exponent) {
    LaurentPolynomial out;
    for (const auto &[e, c] : s.terms()) {
        for (int k = e - d; k > floor_exponent; k -= d) {
            out += LaurentPolynomial::monomial(k, c);
        }
    }
    return out;
}

// Same around zero: 1/(L^d - 1) = -sum_{k>=0} L^{kd}, keeping exponents < bound.
LaurentPolynomial times_inverse_factor_at_zero(const LaurentPolynomial &s, int d, int bound) {
    LaurentPolynomial out;
    for (const auto &[e, c] : s.terms()) {
        for (int k = e; k < bound; k += d) {
            out -= LaurentPolynomial::monomial(k, c);
        }
    }
    return out;
}

} // namespace

CompletedSeries::CompletedSeries(LaurentPolynomial known, int depth)
    : known_(drop_at_or_below(known, -depth)), depth_(depth) {}

mpz_class CompletedSeries::coefficient(int exponent) const {
    if (exponent <= -depth_) {
        throw std::out_of_range("coefficient below the known depth");
    }
    return known_.coefficient(exponent);
}

CompletedSeries operator+(const CompletedSeries &a, const CompletedSeries &b) {
    return CompletedSeries(a.known_ + b.known_, std::min(a.depth_, b.depth_));
}

CompletedSeries operator-(const CompletedSeries &a, const CompletedSeries &b) {
    return CompletedSeries(a.known_ - b.known_, std::min(a.depth_, b.depth_));
}

CompletedSeries operator*(const CompletedSeries &a, const CompletedSeries &b) {
    // Unknown tails: a.depth - top(b) and b.depth - top(a). A zero factor
    // contributes no bound from its own side.
    constexpr int unbounded = std::numeric_limits<int>::max();
    const int from_a = b.known_.is_zero() ? unbounded : a.depth_ - b.known_.degree();
    const int from_b = a.known_.is_zero() ? unbounded : b.depth_ - a.known_.degree();
    int depth = std::min(from_a, from_b);
    if (depth == unbounded) {
        depth = std::min(a.depth_, b.depth_);
    }
    return CompletedSeries(a.known_ * b.known_, depth);
}

std::string CompletedSeries::to_string() const {
    const std::string tail = "O(L^" + std::to_string(-depth_) + ")";
    if (known_.is_zero()) {
        return tail;
    }
    std::string head = known_.to_string();
    return head + " + " + tail;
}

CompletedSeries expand_at_infinity(const MotiveClass &a, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("expand_at_infinity: depth must be >= 1");
    }
    const LaurentPolynomial &num = a.numerator();
    if (num.is_zero()) {
        return CompletedSeries(LaurentPolynomial(), depth);
    }
    // The inverse-denominator series is needed down to -depth - top(num)
    // so that every coefficient above -depth of the product is exact.
    const int floor_exponent = -depth - num.degree();
    LaurentPolynomial inv(1);
    for (const auto &[d, m] : a.denominator()) {
        for (int i = 0; i < m; ++i) {
            inv = times_inverse_factor_at_infinity(inv, d, floor_exponent);
        }
    }
    return CompletedSeries(num * inv, depth);
}

LaurentPolynomial laurent_expand_at_zero(const MotiveClass &a, int order) {
    const LaurentPolynomial &num = a.numerator();
    if (num.is_zero()) {
        return {};
    }
    const int bound = order - num.low_degree();
    LaurentPolynomial inv(1);
    for (const auto &[d, m] : a.denominator()) {
        for (int i = 0; i < m; ++i) {
            inv = times_inverse_factor_at_zero(inv, d, bound);
        }
    }
    return (num * inv).truncated_below(order);
}

} // namespace motive
