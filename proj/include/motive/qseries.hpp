#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "motive/formal_series.hpp"
#include "motive/motive_class.hpp"

namespace motive::qseries {

enum class Parity { Even, Odd };

/// sum_n x^n / [n]_L!
FormalSeries q_exponential(int order);

/// sum_n [Quad_{n,n}] x^n / [n]_L!, coefficients taken from the recurrence
/// solver so that comparisons against closed forms are not circular.
FormalSeries gfun_G(int order);

/// Even: x^{2k}/[2k]! * prod_{i=1}^{k} (L^{2k+1} - L^{2i}).
/// Odd:  x^{2k+1}/[2k+1]! * prod_{i=0}^{k} (L^{2k+1} - L^{2i}).
FormalSeries gfun_P(int order, Parity parity);

/// 1/(1 - L), the substitution constant x -> x/(1 - L).
MotiveClass substitution_constant();

/// sum_k (-1)^k x^{2k} L^{k(k+1)} / prod_{j=1}^{k} (1 - L^{2j}).
FormalSeries alternating_theta_sum(int order);

/// sum_n L^{C(n+1,2)} x^n / [n]_L!
FormalSeries euler_sum(int order);

struct Mismatch {
    int index = 0;
    std::string lhs;
    std::string rhs;
};

struct IdentityReport {
    std::string identity;
    int order_x = 0;
    std::optional<int> order_L;
    bool pass = false;
    std::optional<Mismatch> first_failure;
    std::vector<std::string> notes;
};

nlohmann::json to_json(const IdentityReport &report);

/// G == P_even + P_odd coefficientwise.
IdentityReport check_recurrence_solution(int order);

/// Substituted P-series against their closed forms. Passes on the sum
/// p_even + p_odd == (1 - x) * theta; per-parity findings go to notes.
IdentityReport check_p_substitution(int order);

/// g = G(x/(1-L)) against (1-x) * theta exactly, and against the partial
/// product (1-x) prod_{k<=ceil(M/2)} (1 - x^2 L^{2k}) modulo L^M.
IdentityReport check_g_closed_form(int order, int l_order);

/// 1/exp_L against prod_{i=0}^{M} (1 - (1-L) x L^i) modulo L^M.
IdentityReport check_exp_product(int order, int l_order);

/// prod_{i=1}^{M} (1 + (1-L) x L^i) against its rational sum modulo L^M, and
/// G * exp_L == euler_sum exactly.
IdentityReport check_euler_identity(int order, int l_order);

} // namespace motive::qseries
