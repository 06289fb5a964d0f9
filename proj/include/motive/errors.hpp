#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace motive {

// Raised by LaurentPolynomial::exact_divide when the divisor leaves a remainder.
class NotDivisible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The numerator of a class is not +-L^k times a product of (L^d - 1) factors.
class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A denominator factor (L^d - 1) vanishes at the evaluation point.
class PoleAtPoint : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Evaluation at L = 0 of a class carrying negative powers of L.
class ZeroBase : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Formal series reciprocal with a non-unit constant coefficient.
class NotInvertibleConstant : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// BSO is only available in odd dimension.
class EvenDimension : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// An enumeration would visit more objects than the configured budget allows.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const mpz_class &required, const mpz_class &budget)
        : std::runtime_error("enumeration of " + required.get_str() +
                             " objects exceeds budget " + budget.get_str()),
          required_(required), budget_(budget) {}

    const mpz_class &required() const noexcept { return required_; }
    const mpz_class &budget() const noexcept { return budget_; }

private:
    mpz_class required_;
    mpz_class budget_;
};

} // namespace motive
