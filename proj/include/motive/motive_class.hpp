#pragma once

#include <map>
#include <string>

#include <gmpxx.h>

#include "motive/laurent_polynomial.hpp"

namespace motive {

/// A rational class  numerator / prod_d (L^d - 1)^{m_d}.
///
/// This is the subring of the dimensional completion generated by the
/// Laurent polynomials and the inverses of the factors L^d - 1, which holds
/// every class the catalog works with. The denominator stays factored and is
/// reduced only by trial exact division, so the representation is not
/// unique; equality is decided by cross-multiplication.
class MotiveClass {
public:
    /// d -> multiplicity m, both >= 1.
    using Denominator = std::map<int, int>;

    MotiveClass() = default;
    MotiveClass(long constant); // NOLINT
    MotiveClass(LaurentPolynomial numerator); // NOLINT
    MotiveClass(LaurentPolynomial numerator, Denominator denominator);

    /// 1 / (L^d - 1)^m.
    static MotiveClass inverse_factor(int d, int m = 1);

    const LaurentPolynomial &numerator() const noexcept { return numerator_; }
    const Denominator &denominator() const noexcept { return denominator_; }
    bool is_zero() const noexcept { return numerator_.is_zero(); }
    bool is_polynomial() const noexcept { return denominator_.empty(); }

    /// The expanded product of the denominator factors.
    LaurentPolynomial denominator_polynomial() const;

    MotiveClass operator-() const;
    MotiveClass &operator+=(const MotiveClass &other);
    MotiveClass &operator-=(const MotiveClass &other);
    MotiveClass &operator*=(const MotiveClass &other);

    friend MotiveClass operator+(MotiveClass a, const MotiveClass &b) { return a += b; }
    friend MotiveClass operator-(MotiveClass a, const MotiveClass &b) { return a -= b; }
    friend MotiveClass operator*(MotiveClass a, const MotiveClass &b) { return a *= b; }
    friend bool operator==(const MotiveClass &a, const MotiveClass &b);

    MotiveClass pow(unsigned k) const;

    /// Throws NotInvertible unless the numerator is +-L^k times a product of
    /// factors L^d - 1.
    MotiveClass inverse() const;
    bool is_invertible() const;

    /// Exact value at L = at. Throws PoleAtPoint or ZeroBase.
    mpq_class evaluate(const mpq_class &at) const;

    /// Factored display, e.g. "L^-1 * (L^2-1)^-1".
    std::string to_string() const;

private:
    void normalize();

    LaurentPolynomial numerator_;
    Denominator denominator_;
};

inline MotiveClass invert(const MotiveClass &a) { return a.inverse(); }

} // namespace motive
