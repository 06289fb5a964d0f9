#pragma once

#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace motive {

/// Integer Laurent polynomial in the Lefschetz class L.
///
/// Terms are kept in an exponent -> coefficient map with no zero entries, so
/// structural equality is mathematical equality.
class LaurentPolynomial {
public:
    using TermMap = std::map<int, mpz_class>;

    LaurentPolynomial() = default;
    LaurentPolynomial(long constant); // NOLINT: implicit from integers is intended
    explicit LaurentPolynomial(TermMap terms);

    static LaurentPolynomial monomial(int exponent, const mpz_class &coeff = 1);
    /// L itself.
    static LaurentPolynomial lefschetz() { return monomial(1); }
    /// L^d - 1.
    static LaurentPolynomial cyclotomic_factor(int d);

    const TermMap &terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    /// Highest / lowest exponent. Must not be called on zero.
    int degree() const;
    int low_degree() const;

    mpz_class coefficient(int exponent) const;

    LaurentPolynomial operator-() const;
    LaurentPolynomial &operator+=(const LaurentPolynomial &other);
    LaurentPolynomial &operator-=(const LaurentPolynomial &other);
    LaurentPolynomial &operator*=(const LaurentPolynomial &other);

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial &b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial &b) { return a -= b; }
    friend LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b);
    friend bool operator==(const LaurentPolynomial &a, const LaurentPolynomial &b) { return a.terms_ == b.terms_; }

    /// Multiply by L^k.
    LaurentPolynomial shifted(int k) const;
    LaurentPolynomial pow(unsigned k) const;

    /// Quotient q with q * divisor == *this; throws NotDivisible otherwise.
    LaurentPolynomial exact_divide(const LaurentPolynomial &divisor) const;
    /// Like exact_divide but reports failure through the optional.
    std::optional<LaurentPolynomial> try_divide(const LaurentPolynomial &divisor) const;

    /// Keep only terms with exponent < bound.
    LaurentPolynomial truncated_below(int bound) const;

    /// Throws ZeroBase when at == 0 and a negative exponent is present.
    mpq_class evaluate(const mpq_class &at) const;

    /// Descending powers, e.g. "L^3 - 2*L + 1".
    std::string to_string() const;

private:
    void insert_term(int exponent, const mpz_class &coeff);

    TermMap terms_;
};

/// Formats a single "c*L^e" term without a leading sign; helper shared by displays.
std::string format_monomial(const mpz_class &abs_coeff, int exponent);

} // namespace motive
