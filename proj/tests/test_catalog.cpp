#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "motive/catalog.hpp"
#include "motive/errors.hpp"
#include "oracles.hpp"

using motive::LaurentPolynomial;
using motive::MotiveClass;
namespace cat = motive::catalog;

namespace {

LaurentPolynomial L(int e, long c = 1) { return LaurentPolynomial::monomial(e, c); }
const LaurentPolynomial one(1);

} // namespace

TEST(Gaussian, Integers) {
    EXPECT_TRUE(cat::gaussian_integer(0).is_zero());
    EXPECT_EQ(cat::gaussian_integer(1), one);
    EXPECT_EQ(cat::gaussian_integer(3), one + L(1) + L(2));
    EXPECT_THROW(cat::gaussian_integer(-1), std::invalid_argument);
}

TEST(Gaussian, Binomials) {
    EXPECT_EQ(cat::gaussian_binomial(5, 0), one);
    EXPECT_EQ(cat::gaussian_binomial(2, 1), one + L(1));
    EXPECT_EQ(cat::gaussian_binomial(4, 2), one + L(1) + L(2, 2) + L(3) + L(4));
    EXPECT_TRUE(cat::gaussian_binomial(3, 4).is_zero());
    EXPECT_TRUE(cat::gaussian_binomial(3, -1).is_zero());
    // Independent route: quotient of factorials.
    for (int n = 0; n <= 12; ++n) {
        for (int r = 0; r <= n; ++r) {
            const auto via_factorials = cat::gaussian_factorial(n).exact_divide(cat::gaussian_factorial(r) *
                                                                                cat::gaussian_factorial(n - r));
            ASSERT_EQ(cat::gaussian_binomial(n, r), via_factorials) << n << "," << r;
            ASSERT_EQ(cat::gaussian_binomial(n, r), cat::gaussian_binomial(n, n - r));
        }
    }
}

TEST(Gaussian, BinomialCountsSubspaces) {
    // 2-planes in F_3^4 counted by brute force: 130.
    const auto planes = oracle::subspace_count(4, 2, 3);
    EXPECT_EQ(planes, 130U);
    EXPECT_EQ(cat::gaussian_binomial(4, 2).evaluate(3), planes);
    EXPECT_EQ(cat::grassmannian(1, 3).evaluate(5), oracle::subspace_count(3, 1, 5));
}

TEST(Gaussian, InverseFactorial) {
    for (int n = 0; n <= 8; ++n) {
        ASSERT_EQ(cat::inverse_gaussian_factorial(n) * MotiveClass(cat::gaussian_factorial(n)), MotiveClass(1));
    }
    EXPECT_EQ(cat::inverse_gaussian_factorial(2), MotiveClass(L(1) - one, {{2, 1}}));
}

TEST(Groups, GeneralLinear) {
    EXPECT_EQ(cat::motive_gl(1), MotiveClass(L(1) - one));
    EXPECT_EQ(cat::motive_gl(2), MotiveClass((L(2) - one) * (L(2) - L(1))));
    EXPECT_EQ(cat::motive_gl(2).evaluate(3), oracle::gl_order(2, 3));
    EXPECT_EQ(cat::motive_gl(2).evaluate(3), 48);
    EXPECT_EQ(cat::motive_gl(3).evaluate(3), oracle::gl_order(3, 3));
}

TEST(Groups, SpecialOrthogonal) {
    EXPECT_EQ(cat::motive_so(1), MotiveClass(1));
    EXPECT_EQ(cat::motive_so(2), MotiveClass(L(1) - one));
    EXPECT_EQ(cat::motive_so(3), MotiveClass(L(1) * (L(2) - one)));
    EXPECT_EQ(cat::motive_so(4), MotiveClass((L(4) - one) * (L(2) - one)));
    EXPECT_EQ(cat::motive_so(3).evaluate(3), 24);
}

TEST(Quad, ClosedForms) {
    EXPECT_EQ(cat::motive_quad_full(0), MotiveClass(1));
    EXPECT_EQ(cat::motive_quad_full(1), MotiveClass(L(1) - one));
    EXPECT_EQ(cat::motive_quad_full(2), MotiveClass(L(3) - L(2)));
    EXPECT_EQ(cat::motive_quad_full(3), MotiveClass((L(3) - one) * (L(3) - L(2))));
}

TEST(Quad, RecurrenceMatchesClosedForm) {
    EXPECT_EQ(cat::motive_quad_full_recursive(0), MotiveClass(1));
    EXPECT_EQ(cat::motive_quad_full_recursive(2), MotiveClass(L(3) - (one + L(1)) * (L(1) - one) - one));
    for (int n = 0; n <= 30; ++n) {
        ASSERT_EQ(cat::motive_quad_full_recursive(n), cat::motive_quad_full(n)) << n;
    }
}

TEST(Quad, RecurrenceMemoIsThreadSafe) {
    std::vector<MotiveClass> results(4);
    {
        std::vector<std::jthread> threads;
        for (int t = 0; t < 4; ++t) {
            threads.emplace_back([&results, t] { results[t] = cat::motive_quad_full_recursive(20 + t); });
        }
    }
    for (int t = 0; t < 4; ++t) {
        EXPECT_EQ(results[t], cat::motive_quad_full(20 + t));
    }
}

TEST(Quad, Strata) {
    EXPECT_EQ(cat::motive_quad(4, 0), MotiveClass(1));
    EXPECT_EQ(cat::motive_quad(2, 1), MotiveClass(L(2) - one));
    EXPECT_EQ(cat::motive_quad(2, 1).evaluate(3), 8);
    EXPECT_EQ(cat::motive_quad(3, 2), MotiveClass((one + L(1) + L(2)) * (L(3) - L(2))));
    EXPECT_EQ(cat::motive_quad(3, 2).evaluate(3), 234);
    EXPECT_THROW(cat::motive_quad(2, 3), std::out_of_range);
    EXPECT_THROW(cat::motive_quad(2, -1), std::out_of_range);
}

TEST(Quad, StrataMatchDefinitionBasedCounts) {
    // Rank via the radical definition, not via a Gram matrix.
    for (auto [n, q] : {std::pair{2U, 3U}, {2U, 5U}, {3U, 3U}}) {
        const auto counts = oracle::rank_census(n, q);
        for (unsigned r = 0; r <= n; ++r) {
            ASSERT_EQ(cat::motive_quad(static_cast<int>(n), static_cast<int>(r)).evaluate(q), counts[r])
                << "q=" << q << " n=" << n << " r=" << r;
        }
    }
}

TEST(Quad, TotalDecomposition) {
    EXPECT_TRUE(cat::check_total_decomposition(0));
    EXPECT_TRUE(cat::check_total_decomposition(2));
    EXPECT_TRUE(cat::check_total_decomposition(12));
}

TEST(ClassifyingStack, Orthogonal) {
    EXPECT_EQ(cat::motive_bo(1), MotiveClass(1));
    EXPECT_EQ(cat::motive_bo(2), MotiveClass(L(1), {{2, 1}}));
    EXPECT_EQ(cat::motive_bo(3), invert(MotiveClass(L(1) * (L(2) - one))));
    EXPECT_EQ(cat::motive_bo(3).evaluate(3), mpq_class(1, 24));
    for (int n = 1; n <= 30; ++n) {
        ASSERT_EQ(cat::motive_bo(n), cat::motive_bo_quotient(n)) << n;
        ASSERT_EQ(cat::motive_bo(n) * cat::motive_gl(n), cat::motive_quad_full(n)) << n;
        if (n >= 3) {
            ASSERT_EQ(cat::motive_bo(n) * cat::motive_so(n), MotiveClass(1)) << n;
        }
    }
}

TEST(ClassifyingStack, SpecialOrthogonalOddOnly) {
    EXPECT_EQ(cat::motive_bso(3), invert(MotiveClass(L(1) * (L(2) - one))));
    EXPECT_EQ(cat::motive_bso(5), invert(MotiveClass(L(2) * (L(4) - one) * (L(4) - L(2)))));
    EXPECT_EQ(cat::motive_bso(7), cat::motive_bo(7));
    EXPECT_THROW(cat::motive_bso(4), motive::EvenDimension);
    EXPECT_THROW(cat::motive_bso(1), std::invalid_argument);
}

TEST(Names, ParseValidateLookup) {
    EXPECT_EQ(cat::parse_kind("quad-full"), cat::MotiveKind::QuadFull);
    EXPECT_THROW(cat::parse_kind("spin"), std::invalid_argument);

    cat::MotiveName stratum{cat::MotiveKind::QuadStratum, {3, 2}};
    EXPECT_EQ(cat::lookup(stratum), cat::motive_quad(3, 2));
    EXPECT_EQ(stratum.to_string(), "quad 3 2");

    EXPECT_THROW((cat::MotiveName{cat::MotiveKind::QuadStratum, {2, 3}}.validate()), std::invalid_argument);
    EXPECT_THROW((cat::MotiveName{cat::MotiveKind::GL, {1, 2}}.validate()), std::invalid_argument);
    EXPECT_THROW((cat::MotiveName{cat::MotiveKind::SO, {0}}.validate()), std::invalid_argument);
    EXPECT_THROW(cat::lookup({cat::MotiveKind::BSO, {4}}), motive::EvenDimension);
    EXPECT_EQ(cat::lookup({cat::MotiveKind::Grassmannian, {2, 4}}), MotiveClass(cat::gaussian_binomial(4, 2)));
    EXPECT_EQ(cat::lookup({cat::MotiveKind::AffineSpace, {6}}), MotiveClass(L(6)));
}
