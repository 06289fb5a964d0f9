#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "motive/laurent_polynomial.hpp"
#include "motive/motive_class.hpp"

namespace motive {

/// Truncated Laurent series in L^{-1}: an element of the dimensional
/// completion known modulo the filtration step F^depth. Every stored exponent
/// is > -depth; terms at or below -depth are unknown.
class CompletedSeries {
public:
    CompletedSeries(LaurentPolynomial known, int depth);

    const LaurentPolynomial &known() const noexcept { return known_; }
    int depth() const noexcept { return depth_; }
    mpz_class coefficient(int exponent) const;

    friend CompletedSeries operator+(const CompletedSeries &a, const CompletedSeries &b);
    friend CompletedSeries operator-(const CompletedSeries &a, const CompletedSeries &b);
    /// The product is known down to the weaker of depth(a) - top(b) and
    /// depth(b) - top(a), where top is the highest known exponent.
    friend CompletedSeries operator*(const CompletedSeries &a, const CompletedSeries &b);
    friend bool operator==(const CompletedSeries &a, const CompletedSeries &b) {
        return a.depth_ == b.depth_ && a.known_ == b.known_;
    }

    /// "L^-3 + L^-5 + O(L^-7)".
    std::string to_string() const;

private:
    LaurentPolynomial known_;
    int depth_;
};

/// Expansion of a class at L = infinity: each 1/(L^d - 1) becomes
/// L^{-d} * sum_k L^{-kd}. Requires depth >= 1.
CompletedSeries expand_at_infinity(const MotiveClass &a, int depth);

/// Power series of a class around L = 0, keeping exponents < order. The
/// factors L^d - 1 are units there (value -1), so no poles can appear beyond
/// those carried by negative exponents of the numerator.
LaurentPolynomial laurent_expand_at_zero(const MotiveClass &a, int order);

} // namespace motive
