#pragma once

#include <string>
#include <vector>

#include "motive/laurent_polynomial.hpp"
#include "motive/motive_class.hpp"

namespace motive::catalog {

// Gaussian combinatorics in L.
LaurentPolynomial gaussian_integer(int n);
LaurentPolynomial gaussian_factorial(int n);
/// 0 when r < 0 or r > n. Built as prod_i (L^{n-r+i} - 1)/(L^i - 1) rather
/// than as a quotient of factorials.
LaurentPolynomial gaussian_binomial(int n, int r);
/// 1/[n]_L! = (L-1)^n / prod_{k<=n} (L^k - 1). Built directly: [k]_L for
/// k >= 2 is a unit of the subring but does not pass the numerator shape
/// test of MotiveClass::inverse.
MotiveClass inverse_gaussian_factorial(int n);
/// [Gr(r, n)], the class of r-planes in n-space.
LaurentPolynomial grassmannian(int r, int n);
/// L^n.
LaurentPolynomial affine_space(int n);

/// prod_{i=0}^{n-1} (L^n - L^i), n >= 1.
MotiveClass motive_gl(int n);

/// Split special orthogonal group. For n >= 3 the semisimple closed forms
///   [SO_{2r+1}] = L^r prod_{i<r} (L^{2r} - L^{2i}),
///   [SO_{2r}]   = L^{-r} prod_{i<r} (L^{2r} - L^{2i});
/// below that, SO_1 = 1 and SO_2 = L - 1 (split torus) by convention.
MotiveClass motive_so(int n);

/// Nondegenerate forms on n-space:
///   n = 2r+1: prod_{i=0}^{r} (L^{2r+1} - L^{2i})
///   n = 2r:   prod_{i=1}^{r} (L^{2r+1} - L^{2i})
MotiveClass motive_quad_full(int n);

/// Same class obtained by solving
///   Q_n = L^{C(n+1,2)} - sum_{r<n} [n choose n-r]_L Q_r
/// with a memo table shared across calls (guarded, fills are idempotent).
MotiveClass motive_quad_full_recursive(int n);

/// Rank-r stratum: [Gr(n-r, n)] * [Quad_{r,r}]. Throws std::out_of_range
/// unless 0 <= r <= n.
MotiveClass motive_quad(int n, int r);

/// L^{C(n+1,2)} == sum_r [Quad_{n,r}] in exact arithmetic.
bool check_total_decomposition(int n);

/// Classifying stack of O(Q), Q nondegenerate on n-space, n >= 1:
///   n = 2r+1: L^{-r} prod_{i<r} (L^{2r} - L^{2i})^{-1}
///   n = 2r:   L^{r}  prod_{i<r} (L^{2r} - L^{2i})^{-1}
MotiveClass motive_bo(int n);

/// [Quad_{n,n}] / [GL_n]; must agree with motive_bo.
MotiveClass motive_bo_quotient(int n);

/// [BSO(Q)] = [SO_n]^{-1} for odd n >= 3; EvenDimension for even n.
MotiveClass motive_bso(int n);

enum class MotiveKind {
    GaussianInt,
    GaussianFactorial,
    GaussianBinomial,
    Grassmannian,
    GL,
    SO,
    QuadStratum,
    QuadFull,
    BO,
    BSO,
    AffineSpace,
};

/// A named catalog entry. Parameter conventions:
///   GaussianBinomial (n, r), Grassmannian (r, n), QuadStratum (n, r),
///   every other kind takes one dimension.
struct MotiveName {
    MotiveKind kind;
    std::vector<int> params;

    /// Throws std::invalid_argument on arity or range violations.
    void validate() const;
    std::string to_string() const;
};

/// Accepts the CLI spellings: gaussian-int, gaussian-factorial,
/// gaussian-binomial, grassmannian, gl, so, quad, quad-full, bo, bso, affine.
MotiveKind parse_kind(const std::string &word);
std::string kind_name(MotiveKind kind);

MotiveClass lookup(const MotiveName &name);

} // namespace motive::catalog
