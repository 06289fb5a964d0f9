#include "motive/catalog.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "motive/errors.hpp"

namespace motive::catalog {

namespace {

void require(bool ok, const std::string &what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

LaurentPolynomial L(int e) { return LaurentPolynomial::monomial(e); }

// prod_{i in [lo, hi]} (L^top - L^(step*i + offset))
LaurentPolynomial power_difference_product(int top, int lo, int hi, int step, int offset) {
    LaurentPolynomial p(1);
    for (int i = lo; i <= hi; ++i) {
        p *= L(top) - L(step * i + offset);
    }
    return p;
}

} // namespace

LaurentPolynomial gaussian_integer(int n) {
    require(n >= 0, "gaussian_integer: n must be non-negative");
    LaurentPolynomial p;
    for (int i = 0; i < n; ++i) {
        p += L(i);
    }
    return p;
}

LaurentPolynomial gaussian_factorial(int n) {
    require(n >= 0, "gaussian_factorial: n must be non-negative");
    LaurentPolynomial p(1);
    for (int k = 2; k <= n; ++k) {
        p *= gaussian_integer(k);
    }
    return p;
}

LaurentPolynomial gaussian_binomial(int n, int r) {
    require(n >= 0, "gaussian_binomial: n must be non-negative");
    if (r < 0 || r > n) {
        return {};
    }
    // After step i the running value is [n-r+i choose i]_L, so every
    // division is exact.
    if (r > n - r) {
        r = n - r;
    }
    LaurentPolynomial p(1);
    for (int i = 1; i <= r; ++i) {
        p = (p * LaurentPolynomial::cyclotomic_factor(n - r + i))
                .exact_divide(LaurentPolynomial::cyclotomic_factor(i));
    }
    return p;
}

MotiveClass inverse_gaussian_factorial(int n) {
    require(n >= 0, "inverse_gaussian_factorial: n must be non-negative");
    MotiveClass::Denominator den;
    for (int k = 1; k <= n; ++k) {
        den[k] = 1;
    }
    return MotiveClass(LaurentPolynomial::cyclotomic_factor(1).pow(static_cast<unsigned>(n)), std::move(den));
}

LaurentPolynomial grassmannian(int r, int n) { return gaussian_binomial(n, r); }

LaurentPolynomial affine_space(int n) {
    require(n >= 0, "affine_space: n must be non-negative");
    return L(n);
}

MotiveClass motive_gl(int n) {
    require(n >= 1, "motive_gl: n must be >= 1");
    return power_difference_product(n, 0, n - 1, 1, 0);
}

MotiveClass motive_so(int n) {
    require(n >= 1, "motive_so: n must be >= 1");
    if (n == 1) {
        return 1;
    }
    if (n == 2) {
        return L(1) - LaurentPolynomial(1);
    }
    const int r = n / 2;
    const LaurentPolynomial core = power_difference_product(2 * r, 0, r - 1, 2, 0);
    return core.shifted(n % 2 == 1 ? r : -r);
}

MotiveClass motive_quad_full(int n) {
    require(n >= 0, "motive_quad_full: n must be non-negative");
    const int r = n / 2;
    if (n % 2 == 1) {
        return power_difference_product(2 * r + 1, 0, r, 2, 0);
    }
    return power_difference_product(2 * r + 1, 1, r, 2, 0);
}

MotiveClass motive_quad_full_recursive(int n) {
    require(n >= 0, "motive_quad_full_recursive: n must be non-negative");
    static std::mutex mutex;
    static std::vector<LaurentPolynomial> memo;

    std::lock_guard lock(mutex);
    while (static_cast<int>(memo.size()) <= n) {
        const int m = static_cast<int>(memo.size());
        LaurentPolynomial q = L(m * (m + 1) / 2);
        for (int r = 0; r < m; ++r) {
            q -= gaussian_binomial(m, m - r) * memo[r];
        }
        memo.push_back(std::move(q));
    }
    return memo[n];
}

MotiveClass motive_quad(int n, int r) {
    if (n < 0 || r < 0 || r > n) {
        throw std::out_of_range("motive_quad: need 0 <= r <= n");
    }
    return MotiveClass(grassmannian(n - r, n)) * motive_quad_full(r);
}

bool check_total_decomposition(int n) {
    require(n >= 0, "check_total_decomposition: n must be non-negative");
    MotiveClass sum;
    for (int r = 0; r <= n; ++r) {
        sum += motive_quad(n, r);
    }
    return sum == MotiveClass(L(n * (n + 1) / 2));
}

MotiveClass motive_bo(int n) {
    require(n >= 1, "motive_bo: n must be >= 1");
    const int r = n / 2;
    const LaurentPolynomial product = power_difference_product(2 * r, 0, r - 1, 2, 0);
    const MotiveClass prefactor = L(n % 2 == 1 ? -r : r);
    return prefactor * invert(MotiveClass(product));
}

MotiveClass motive_bo_quotient(int n) {
    require(n >= 1, "motive_bo_quotient: n must be >= 1");
    return motive_quad_full(n) * invert(motive_gl(n));
}

MotiveClass motive_bso(int n) {
    require(n >= 1, "motive_bso: n must be >= 1");
    if (n % 2 == 0) {
        throw EvenDimension("BSO is only computed in odd dimension");
    }
    require(n >= 3, "motive_bso: n must be >= 3");
    return invert(motive_so(n));
}

namespace {

const std::map<std::string, MotiveKind> &kind_table() {
    static const std::map<std::string, MotiveKind> table{
        {"gaussian-int", MotiveKind::GaussianInt},
        {"gaussian-factorial", MotiveKind::GaussianFactorial},
        {"gaussian-binomial", MotiveKind::GaussianBinomial},
        {"grassmannian", MotiveKind::Grassmannian},
        {"gl", MotiveKind::GL},
        {"so", MotiveKind::SO},
        {"quad", MotiveKind::QuadStratum},
        {"quad-full", MotiveKind::QuadFull},
        {"bo", MotiveKind::BO},
        {"bso", MotiveKind::BSO},
        {"affine", MotiveKind::AffineSpace},
    };
    return table;
}

std::size_t arity(MotiveKind kind) {
    switch (kind) {
    case MotiveKind::GaussianBinomial:
    case MotiveKind::Grassmannian:
    case MotiveKind::QuadStratum:
        return 2;
    default:
        return 1;
    }
}

} // namespace

MotiveKind parse_kind(const std::string &word) {
    const auto &table = kind_table();
    auto it = table.find(word);
    if (it == table.end()) {
        throw std::invalid_argument("unknown motive kind '" + word + "'");
    }
    return it->second;
}

std::string kind_name(MotiveKind kind) {
    for (const auto &[name, k] : kind_table()) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

void MotiveName::validate() const {
    require(params.size() == arity(kind),
            kind_name(kind) + " takes " + std::to_string(arity(kind)) + " parameter(s)");
    for (int p : params) {
        require(p >= 0, "parameters must be non-negative");
    }
    switch (kind) {
    case MotiveKind::QuadStratum:
        require(params[1] <= params[0], "quad: need 0 <= r <= n");
        break;
    case MotiveKind::Grassmannian:
        require(params[0] <= params[1], "grassmannian: need 0 <= r <= n");
        break;
    case MotiveKind::GL:
    case MotiveKind::SO:
    case MotiveKind::BO:
        require(params[0] >= 1, kind_name(kind) + ": dimension must be >= 1");
        break;
    case MotiveKind::BSO:
        require(params[0] >= 3 && params[0] % 2 == 1, "bso: dimension must be odd and >= 3");
        break;
    default:
        break;
    }
}

std::string MotiveName::to_string() const {
    std::string s = kind_name(kind);
    for (int p : params) {
        s += ' ' + std::to_string(p);
    }
    return s;
}

MotiveClass lookup(const MotiveName &name) {
    if (name.kind == MotiveKind::BSO && name.params.size() == 1 && name.params[0] % 2 == 0) {
        throw EvenDimension("BSO is only computed in odd dimension");
    }
    name.validate();
    const auto &p = name.params;
    switch (name.kind) {
    case MotiveKind::GaussianInt:
        return gaussian_integer(p[0]);
    case MotiveKind::GaussianFactorial:
        return gaussian_factorial(p[0]);
    case MotiveKind::GaussianBinomial:
        return gaussian_binomial(p[0], p[1]);
    case MotiveKind::Grassmannian:
        return grassmannian(p[0], p[1]);
    case MotiveKind::GL:
        return motive_gl(p[0]);
    case MotiveKind::SO:
        return motive_so(p[0]);
    case MotiveKind::QuadStratum:
        return motive_quad(p[0], p[1]);
    case MotiveKind::QuadFull:
        return motive_quad_full(p[0]);
    case MotiveKind::BO:
        return motive_bo(p[0]);
    case MotiveKind::BSO:
        return motive_bso(p[0]);
    case MotiveKind::AffineSpace:
        return affine_space(p[0]);
    }
    throw std::logic_error("unhandled motive kind");
}

} // namespace motive::catalog
