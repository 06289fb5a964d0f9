#include "motive/qseries.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "motive/catalog.hpp"
#include "motive/completed_series.hpp"

namespace motive::qseries {

namespace {

LaurentPolynomial L(int e) { return LaurentPolynomial::monomial(e); }

void require_order(int order) {
    if (order < 0) {
        throw std::invalid_argument("series order must be non-negative");
    }
}

void require_l_order(int l_order) {
    if (l_order < 1) {
        throw std::invalid_argument("L-truncation must be >= 1");
    }
}

// Power series in x whose coefficients are integer polynomials in L taken
// modulo L^M. Used for partial infinite products.
using PolySeries = std::vector<LaurentPolynomial>;

PolySeries multiply_mod(const PolySeries &a, const PolySeries &b, int order, int l_order) {
    PolySeries r(static_cast<std::size_t>(order) + 1);
    for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= order; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= order; ++j) {
            if (!b[j].is_zero()) {
                r[i + j] += a[i] * b[j];
            }
        }
    }
    for (auto &c : r) {
        c = c.truncated_below(l_order);
    }
    return r;
}

std::optional<Mismatch> first_exact_mismatch(const FormalSeries &lhs, const FormalSeries &rhs) {
    const int n = std::min(lhs.order(), rhs.order());
    for (int k = 0; k <= n; ++k) {
        if (!(lhs[k] == rhs[k])) {
            return Mismatch{k, lhs[k].to_string(), rhs[k].to_string()};
        }
    }
    return std::nullopt;
}

std::optional<Mismatch> first_mismatch_at_zero(const FormalSeries &lhs, const PolySeries &rhs, int l_order) {
    const int n = std::min(lhs.order(), static_cast<int>(rhs.size()) - 1);
    for (int k = 0; k <= n; ++k) {
        const LaurentPolynomial expanded = laurent_expand_at_zero(lhs[k], l_order);
        if (!(expanded == rhs[static_cast<std::size_t>(k)])) {
            return Mismatch{k, expanded.to_string(), rhs[static_cast<std::size_t>(k)].to_string()};
        }
    }
    return std::nullopt;
}

IdentityReport make_report(std::string identity, int order, std::optional<int> l_order) {
    IdentityReport r;
    r.identity = std::move(identity);
    r.order_x = order;
    r.order_L = l_order;
    return r;
}

void record(IdentityReport &report, std::optional<Mismatch> failure) {
    if (failure && !report.first_failure) {
        report.first_failure = std::move(failure);
    }
    report.pass = !report.first_failure.has_value();
}

// prod_{i=lo}^{hi} (1 + sign (1-L) x L^i)
PolySeries linear_partial_product(int lo, int hi, int sign, int order, int l_order) {
    PolySeries acc{LaurentPolynomial(1)};
    for (int i = lo; i <= hi; ++i) {
        LaurentPolynomial lin = L(i) - L(i + 1);
        if (sign < 0) {
            lin = -lin;
        }
        acc = multiply_mod(acc, PolySeries{LaurentPolynomial(1), lin}, order, l_order);
    }
    acc.resize(static_cast<std::size_t>(order) + 1);
    return acc;
}

} // namespace

FormalSeries q_exponential(int order) {
    require_order(order);
    std::vector<MotiveClass> c;
    for (int n = 0; n <= order; ++n) {
        c.push_back(catalog::inverse_gaussian_factorial(n));
    }
    return FormalSeries(std::move(c), order);
}

FormalSeries gfun_G(int order) {
    require_order(order);
    std::vector<MotiveClass> c;
    for (int n = 0; n <= order; ++n) {
        c.push_back(catalog::motive_quad_full_recursive(n) * catalog::inverse_gaussian_factorial(n));
    }
    return FormalSeries(std::move(c), order);
}

FormalSeries gfun_P(int order, Parity parity) {
    require_order(order);
    std::vector<MotiveClass> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0;; ++k) {
        const int n = parity == Parity::Even ? 2 * k : 2 * k + 1;
        if (n > order) {
            break;
        }
        LaurentPolynomial prod(1);
        for (int i = parity == Parity::Even ? 1 : 0; i <= k; ++i) {
            prod *= L(2 * k + 1) - L(2 * i);
        }
        c[static_cast<std::size_t>(n)] = MotiveClass(prod) * catalog::inverse_gaussian_factorial(n);
    }
    return FormalSeries(std::move(c), order);
}

MotiveClass substitution_constant() { return invert(MotiveClass(LaurentPolynomial(1) - L(1))); }

FormalSeries alternating_theta_sum(int order) {
    require_order(order);
    std::vector<MotiveClass> c(static_cast<std::size_t>(order) + 1);
    for (int k = 0; 2 * k <= order; ++k) {
        // prod_{j<=k} (1 - L^{2j}) = (-1)^k prod_{j<=k} (L^{2j} - 1)
        MotiveClass::Denominator den;
        for (int j = 1; j <= k; ++j) {
            den[2 * j] += 1;
        }
        c[static_cast<std::size_t>(2 * k)] = MotiveClass(L(k * (k + 1)), std::move(den));
    }
    return FormalSeries(std::move(c), order);
}

FormalSeries euler_sum(int order) {
    require_order(order);
    std::vector<MotiveClass> c;
    for (int n = 0; n <= order; ++n) {
        c.push_back(MotiveClass(L(n * (n + 1) / 2)) * catalog::inverse_gaussian_factorial(n));
    }
    return FormalSeries(std::move(c), order);
}

nlohmann::json to_json(const IdentityReport &report) {
    nlohmann::json j;
    j["identity"] = report.identity;
    j["order_x"] = report.order_x;
    j["order_L"] = report.order_L ? nlohmann::json(*report.order_L) : nlohmann::json(nullptr);
    j["pass"] = report.pass;
    if (report.first_failure) {
        j["first_failure"] = {{"index", report.first_failure->index},
                              {"lhs", report.first_failure->lhs},
                              {"rhs", report.first_failure->rhs}};
    } else {
        j["first_failure"] = nullptr;
    }
    if (!report.notes.empty()) {
        j["notes"] = report.notes;
    }
    return j;
}

IdentityReport check_recurrence_solution(int order) {
    auto report = make_report("recurrence-solution", order, std::nullopt);
    record(report, first_exact_mismatch(gfun_G(order), gfun_P(order, Parity::Even) + gfun_P(order, Parity::Odd)));
    return report;
}

IdentityReport check_p_substitution(int order) {
    auto report = make_report("p-substitution", order, std::nullopt);
    const MotiveClass c = substitution_constant();
    const FormalSeries p_even = gfun_P(order, Parity::Even).scale_variable(c);
    const FormalSeries p_odd = gfun_P(order, Parity::Odd).scale_variable(c);
    const FormalSeries theta = alternating_theta_sum(order);
    const FormalSeries x_theta = FormalSeries::linear(0, 1, order) * theta;

    record(report, first_exact_mismatch(p_even + p_odd, theta - x_theta));

    auto note = [&](const std::string &label, const std::optional<Mismatch> &m) {
        report.notes.push_back(label + (m ? ": differs at x^" + std::to_string(m->index) + " (" + m->lhs +
                                                " vs " + m->rhs + ")"
                                          : ": matches"));
    };
    note("p_even vs theta", first_exact_mismatch(p_even, theta));
    note("p_odd vs -x*theta (odd powers)", first_exact_mismatch(p_odd, -x_theta));
    note("p_odd vs -theta (even powers as displayed)", first_exact_mismatch(p_odd, -theta));
    return report;
}

IdentityReport check_g_closed_form(int order, int l_order) {
    require_l_order(l_order);
    auto report = make_report("g-closed-form", order, l_order);
    const FormalSeries g = gfun_G(order).scale_variable(substitution_constant());
    const FormalSeries one_minus_x = FormalSeries::linear(1, -1, order);
    record(report, first_exact_mismatch(g, one_minus_x * alternating_theta_sum(order)));

    PolySeries product{LaurentPolynomial(1), LaurentPolynomial(-1)};
    const int last = (l_order + 1) / 2;
    for (int k = 1; k <= last; ++k) {
        product = multiply_mod(product, PolySeries{LaurentPolynomial(1), LaurentPolynomial(), -L(2 * k)}, order,
                               l_order);
    }
    product.resize(static_cast<std::size_t>(order) + 1);
    record(report, first_mismatch_at_zero(g, product, l_order));
    return report;
}

IdentityReport check_exp_product(int order, int l_order) {
    require_l_order(l_order);
    auto report = make_report("exp-product", order, l_order);
    const FormalSeries lhs = q_exponential(order).reciprocal();
    record(report, first_mismatch_at_zero(lhs, linear_partial_product(0, l_order, -1, order, l_order), l_order));
    return report;
}

IdentityReport check_euler_identity(int order, int l_order) {
    require_l_order(l_order);
    auto report = make_report("euler-identity", order, l_order);

    // Rational side written as L^{C(n+1,2)} (1-L)^n / prod_{k<=n} (1 - L^k).
    std::vector<MotiveClass> rational;
    const LaurentPolynomial one_minus_l = LaurentPolynomial(1) - L(1);
    for (int n = 0; n <= order; ++n) {
        MotiveClass::Denominator den;
        for (int k = 1; k <= n; ++k) {
            den[k] = 1;
        }
        // (1 - L^k) = -(L^k - 1)
        LaurentPolynomial num = L(n * (n + 1) / 2) * one_minus_l.pow(static_cast<unsigned>(n));
        if (n % 2 == 1) {
            num = -num;
        }
        rational.emplace_back(std::move(num), std::move(den));
    }
    const FormalSeries sum_form(std::move(rational), order);

    record(report, first_mismatch_at_zero(sum_form, linear_partial_product(1, l_order, +1, order, l_order), l_order));
    record(report, first_exact_mismatch(sum_form, euler_sum(order)));
    record(report, first_exact_mismatch(gfun_G(order) * q_exponential(order), euler_sum(order)));
    return report;
}

} // namespace motive::qseries
