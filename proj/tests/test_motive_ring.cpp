#include <random>

#include <gtest/gtest.h>

#include "motive/completed_series.hpp"
#include "motive/errors.hpp"
#include "motive/laurent_polynomial.hpp"
#include "motive/motive_class.hpp"
#include "motive/serialization.hpp"

using motive::CompletedSeries;
using motive::LaurentPolynomial;
using motive::MotiveClass;

namespace {

LaurentPolynomial L(int e, long c = 1) { return LaurentPolynomial::monomial(e, c); }
const LaurentPolynomial one(1);

MotiveClass random_class(std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> exp(-3, 4), coeff(-5, 5), terms(1, 4), dist_d(1, 4), mult(0, 2);
    LaurentPolynomial num;
    for (int i = terms(rng); i > 0; --i) {
        num += L(exp(rng), coeff(rng));
    }
    MotiveClass::Denominator den;
    for (int i = 0; i < 2; ++i) {
        den[dist_d(rng)] += mult(rng);
    }
    return MotiveClass(num, den);
}

} // namespace

TEST(LaurentPolynomial, CanonicalFormDropsZeros) {
    LaurentPolynomial p = L(2) + L(-1, 3) - L(2);
    EXPECT_EQ(p, L(-1, 3));
    EXPECT_EQ(p.terms().size(), 1U);
    EXPECT_TRUE((L(1) - L(1)).is_zero());
}

TEST(LaurentPolynomial, Arithmetic) {
    EXPECT_EQ((L(1) - one) * (L(1) + one), L(2) - one);
    EXPECT_EQ((L(3) - L(2)).exact_divide(L(1) - one), L(2));
    EXPECT_THROW((L(2) + one).exact_divide(L(1) - one), motive::NotDivisible);
    EXPECT_EQ((L(-2) - L(-3)).exact_divide(L(1) - one), L(-3));
    EXPECT_EQ((L(2, 2) - L(0, 2)).exact_divide(LaurentPolynomial(2)), L(2) - one);
    EXPECT_THROW((L(2) - one).exact_divide(LaurentPolynomial(2)), motive::NotDivisible);
    EXPECT_THROW(one.exact_divide(LaurentPolynomial()), motive::NotDivisible);
}

TEST(LaurentPolynomial, DivisionRecoversProducts) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> exp(-4, 6), coeff(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        LaurentPolynomial a, b;
        for (int i = 0; i < 4; ++i) {
            a += L(exp(rng), coeff(rng));
            b += L(exp(rng), coeff(rng));
        }
        if (b.is_zero()) {
            continue;
        }
        EXPECT_EQ((a * b).exact_divide(b), a);
    }
}

TEST(LaurentPolynomial, EvaluateAndFormat) {
    EXPECT_EQ((L(3) - L(2)).evaluate(3), 18);
    EXPECT_EQ((L(-1) + L(1)).evaluate(mpq_class(1, 2)), mpq_class(5, 2));
    EXPECT_EQ(L(2, 7).evaluate(0), 0);
    EXPECT_EQ((L(0, 4) + L(1)).evaluate(0), 4);
    EXPECT_THROW(L(-1).evaluate(0), motive::ZeroBase);
    EXPECT_EQ((L(3) - L(2)).to_string(), "L^3 - L^2");
    EXPECT_EQ((L(1, -2) + one).to_string(), "-2*L + 1");
    EXPECT_EQ(L(-3).to_string(), "L^-3");
    EXPECT_EQ(LaurentPolynomial().to_string(), "0");
}

TEST(MotiveClass, NormalizationCancelsFactors) {
    MotiveClass c(L(1) - one, {{1, 1}});
    EXPECT_TRUE(c.is_polynomial());
    EXPECT_EQ(c, MotiveClass(1));
    MotiveClass d(L(2) - one, {{1, 2}});
    EXPECT_EQ(d.numerator(), L(1) + one);
    EXPECT_EQ(d.denominator(), (MotiveClass::Denominator{{1, 1}}));
}

TEST(MotiveClass, Invert) {
    const MotiveClass inv = invert(MotiveClass(L(3) - L(2)));
    EXPECT_EQ(inv.numerator(), L(-2));
    EXPECT_EQ(inv.denominator(), (MotiveClass::Denominator{{1, 1}}));
    EXPECT_THROW(invert(MotiveClass(L(1) + one)), motive::NotInvertible);
    EXPECT_THROW(invert(MotiveClass(0)), motive::NotInvertible);
    EXPECT_THROW(invert(MotiveClass(LaurentPolynomial(2))), motive::NotInvertible);

    // L(L^2-1)(L^4-1) - mixed block sizes, negative sign.
    const MotiveClass c = -MotiveClass(L(1) * (L(2) - one) * (L(4) - one));
    EXPECT_EQ(c * invert(c), MotiveClass(1));
    // Inverse of an already fractional class.
    const MotiveClass f((L(3) - one) * L(-2), {{2, 1}});
    EXPECT_EQ(f * invert(f), MotiveClass(1));
}

TEST(MotiveClass, Evaluate) {
    EXPECT_EQ(MotiveClass(L(3) - L(2)).evaluate(3), 18);
    EXPECT_EQ(MotiveClass(L(1) + one).evaluate(1), 2);
    EXPECT_THROW(MotiveClass::inverse_factor(1).evaluate(1), motive::PoleAtPoint);
    EXPECT_THROW(MotiveClass::inverse_factor(2).evaluate(-1), motive::PoleAtPoint);
    EXPECT_EQ(MotiveClass::inverse_factor(1).evaluate(-1), mpq_class(-1, 2));
    EXPECT_EQ(MotiveClass::inverse_factor(1).evaluate(0), -1);
    EXPECT_THROW(MotiveClass(L(-1), {{1, 1}}).evaluate(0), motive::ZeroBase);
}

TEST(MotiveClass, Display) {
    EXPECT_EQ(invert(MotiveClass(L(3) - L(1))).to_string(), "L^-1 * (L^2-1)^-1");
    EXPECT_EQ(MotiveClass::inverse_factor(1).to_string(), "(L-1)^-1");
    EXPECT_EQ(MotiveClass(L(1), {{2, 1}}).to_string(), "L * (L^2-1)^-1");
    EXPECT_EQ(MotiveClass(L(3) + L(1, 2), {{2, 1}, {3, 2}}).to_string(), "L * (L^2 + 2) * (L^2-1)^-1 * (L^3-1)^-2");
    EXPECT_EQ(MotiveClass(L(3) - L(2)).to_string(), "L^3 - L^2");
}

TEST(MotiveClassProperty, RingAxioms) {
    std::mt19937_64 rng(20240501);
    for (int trial = 0; trial < 300; ++trial) {
        const MotiveClass a = random_class(rng), b = random_class(rng), c = random_class(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ(a * b, b * a);
        ASSERT_TRUE((a + (-a)).is_zero());
        ASSERT_EQ(a - b, -(b - a));
    }
}

TEST(MotiveClassProperty, EvaluationIsAHomomorphism) {
    std::mt19937_64 rng(99);
    const mpq_class points[] = {mpq_class(3), mpq_class(-2), mpq_class(2, 5), mpq_class(-7, 3)};
    for (int trial = 0; trial < 200; ++trial) {
        const MotiveClass a = random_class(rng), b = random_class(rng);
        for (const auto &q : points) {
            ASSERT_EQ((a + b).evaluate(q), a.evaluate(q) + b.evaluate(q));
            ASSERT_EQ((a * b).evaluate(q), a.evaluate(q) * b.evaluate(q));
        }
    }
}

TEST(MotiveClassProperty, InverseOfUnits) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> d(1, 6), e(-4, 4), sign(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPolynomial num = L(e(rng), sign(rng) ? 1 : -1);
        for (int i = 0; i < 3; ++i) {
            num *= LaurentPolynomial::cyclotomic_factor(d(rng));
        }
        const int den = d(rng);
        if (num.try_divide(LaurentPolynomial::cyclotomic_factor(den))) {
            // Cancellation can leave a factor such as L + 1, which the
            // invertibility test does not recognise.
            continue;
        }
        const MotiveClass a(num, {{den, 1}});
        ASSERT_TRUE(a.is_invertible());
        ASSERT_EQ(a * invert(a), MotiveClass(1));
    }
}

TEST(CompletedSeries, ExpandAtInfinity) {
    const MotiveClass bo3 = invert(MotiveClass(L(3) - L(1)));
    const CompletedSeries s = expand_at_infinity(bo3, 9);
    EXPECT_EQ(s.known(), L(-3) + L(-5) + L(-7));
    EXPECT_EQ(s.to_string(), "L^-3 + L^-5 + L^-7 + O(L^-9)");

    EXPECT_EQ(expand_at_infinity(MotiveClass(L(2) - one), 3).known(), L(2) - one);
    EXPECT_EQ(expand_at_infinity(MotiveClass::inverse_factor(1), 4).known(), L(-1) + L(-2) + L(-3));
    EXPECT_THROW(expand_at_infinity(bo3, 0), std::invalid_argument);
}

TEST(CompletedSeries, DepthPropagation) {
    const CompletedSeries a(L(-1) + L(-2), 4);  // top -1
    const CompletedSeries b(L(1) + one, 6);     // top 1
    const CompletedSeries p = a * b;
    // min(4 - 1, 6 - (-1)) = 3
    EXPECT_EQ(p.depth(), 3);
    EXPECT_EQ(p.known(), one + L(-1, 2) + L(-2));
    EXPECT_EQ((a + b).depth(), 4);
    EXPECT_THROW((void)a.coefficient(-4), std::out_of_range);
}

TEST(CompletedSeriesProperty, ExpansionTimesDenominatorRecoversNumerator) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const MotiveClass a = random_class(rng);
        if (a.is_zero()) {
            continue;
        }
        const int depth = 12;
        const CompletedSeries s = expand_at_infinity(a, depth);
        const LaurentPolynomial den = a.denominator_polynomial();
        const LaurentPolynomial back = s.known() * den;
        // Agreement holds above -depth + deg(den).
        const int cutoff = -depth + den.degree();
        const LaurentPolynomial residual = back - a.numerator();
        for (const auto &[exp, coeff] : residual.terms()) {
            ASSERT_LE(exp, cutoff) << "trial " << trial;
        }
    }
}

TEST(CompletedSeries, ExpandAtZero) {
    EXPECT_EQ(laurent_expand_at_zero(MotiveClass::inverse_factor(1), 3), -(one + L(1) + L(2)));
    EXPECT_EQ(laurent_expand_at_zero(MotiveClass::inverse_factor(2), 5), -(one + L(2) + L(4)));
    EXPECT_EQ(laurent_expand_at_zero(MotiveClass(L(3) - L(2)), 10), L(3) - L(2));
    EXPECT_EQ(laurent_expand_at_zero(MotiveClass(L(-1), {{1, 1}}), 2), -(L(-1) + one + L(1)));
}

TEST(CompletedSeriesProperty, ExpansionAtZeroMatchesResidualDivision) {
    // a - truncated series must equal L^order * (something in the subring
    // with no pole at 0): (num - den * series) is divisible by L^order.
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const MotiveClass a = random_class(rng);
        if (a.is_zero()) {
            continue;
        }
        const int order = 8;
        const LaurentPolynomial series = laurent_expand_at_zero(a, order);
        const LaurentPolynomial residual = a.numerator() - a.denominator_polynomial() * series;
        if (!residual.is_zero()) {
            ASSERT_GE(residual.low_degree(), order) << "trial " << trial;
        }
    }
}

TEST(Serialization, LayoutAndRoundTrip) {
    const MotiveClass c(L(-1) - L(2, 3), {{2, 1}, {1, 2}});
    const auto j = motive::to_json(c);
    EXPECT_EQ(j["terms"][0][0], 2);
    EXPECT_EQ(j["terms"][0][1], c.numerator().coefficient(2).get_str());
    EXPECT_EQ(j["denominator"][0][0], 1);
    EXPECT_EQ(motive::motive_from_json(j), c);
    EXPECT_EQ(nlohmann::json::parse(j.dump()).dump(), j.dump());

    // Coefficients larger than 64 bits survive as strings.
    mpz_class big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    const LaurentPolynomial p = LaurentPolynomial::monomial(5, big);
    EXPECT_EQ(motive::laurent_from_json(motive::to_json(p)), p);
    EXPECT_EQ(motive::to_json(p)["terms"][0][1], "1" + std::string(40, '0'));
}
