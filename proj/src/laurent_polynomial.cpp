#include "motive/laurent_polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "motive/errors.hpp"

namespace motive {

LaurentPolynomial::LaurentPolynomial(long constant) {
    if (constant != 0) {
        terms_.emplace(0, constant);
    }
}

LaurentPolynomial::LaurentPolynomial(TermMap terms) {
    for (auto &[e, c] : terms) {
        if (c != 0) {
            terms_.emplace(e, std::move(c));
        }
    }
}

LaurentPolynomial LaurentPolynomial::monomial(int exponent, const mpz_class &coeff) {
    LaurentPolynomial p;
    p.insert_term(exponent, coeff);
    return p;
}

LaurentPolynomial LaurentPolynomial::cyclotomic_factor(int d) {
    if (d < 1) {
        throw std::invalid_argument("cyclotomic_factor: d must be positive");
    }
    return monomial(d) - LaurentPolynomial(1);
}

int LaurentPolynomial::degree() const {
    if (terms_.empty()) {
        throw std::logic_error("degree of the zero polynomial");
    }
    return terms_.rbegin()->first;
}

int LaurentPolynomial::low_degree() const {
    if (terms_.empty()) {
        throw std::logic_error("low degree of the zero polynomial");
    }
    return terms_.begin()->first;
}

mpz_class LaurentPolynomial::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void LaurentPolynomial::insert_term(int exponent, const mpz_class &coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exponent, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

LaurentPolynomial LaurentPolynomial::operator-() const {
    LaurentPolynomial r = *this;
    for (auto &[e, c] : r.terms_) {
        c = -c;
    }
    return r;
}

LaurentPolynomial &LaurentPolynomial::operator+=(const LaurentPolynomial &other) {
    for (const auto &[e, c] : other.terms_) {
        insert_term(e, c);
    }
    return *this;
}

LaurentPolynomial &LaurentPolynomial::operator-=(const LaurentPolynomial &other) {
    for (const auto &[e, c] : other.terms_) {
        insert_term(e, -c);
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial &a, const LaurentPolynomial &b) {
    LaurentPolynomial r;
    mpz_class prod;
    for (const auto &[ea, ca] : a.terms_) {
        for (const auto &[eb, cb] : b.terms_) {
            prod = ca * cb;
            r.insert_term(ea + eb, prod);
        }
    }
    return r;
}

LaurentPolynomial &LaurentPolynomial::operator*=(const LaurentPolynomial &other) {
    *this = *this * other;
    return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial r;
    for (const auto &[e, c] : terms_) {
        r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    }
    return r;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned k) const {
    LaurentPolynomial result(1);
    LaurentPolynomial base = *this;
    while (k != 0) {
        if (k & 1U) {
            result *= base;
        }
        k >>= 1U;
        if (k != 0) {
            base *= base;
        }
    }
    return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::try_divide(const LaurentPolynomial &divisor) const {
    if (divisor.is_zero()) {
        return std::nullopt;
    }
    if (is_zero()) {
        return LaurentPolynomial();
    }
    // Strip the L-adic valuations; both remainders then have nonzero
    // constant terms and divisibility reduces to long division in Z[L].
    const int shift = low_degree() - divisor.low_degree();
    LaurentPolynomial rem = shifted(-low_degree());
    const LaurentPolynomial den = divisor.shifted(-divisor.low_degree());
    const int den_deg = den.degree();
    const mpz_class &lead = den.terms_.rbegin()->second;

    LaurentPolynomial quotient;
    while (!rem.is_zero() && rem.degree() >= den_deg) {
        const int e = rem.degree();
        const mpz_class &c = rem.terms_.rbegin()->second;
        if (!mpz_divisible_p(c.get_mpz_t(), lead.get_mpz_t())) {
            return std::nullopt;
        }
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), c.get_mpz_t(), lead.get_mpz_t());
        const int qe = e - den_deg;
        for (const auto &[de, dc] : den.terms_) {
            rem.insert_term(de + qe, -qc * dc);
        }
        quotient.insert_term(qe, qc);
    }
    if (!rem.is_zero()) {
        return std::nullopt;
    }
    return quotient.shifted(shift);
}

LaurentPolynomial LaurentPolynomial::exact_divide(const LaurentPolynomial &divisor) const {
    auto q = try_divide(divisor);
    if (!q) {
        throw NotDivisible("(" + to_string() + ") is not divisible by (" + divisor.to_string() + ")");
    }
    return std::move(*q);
}

LaurentPolynomial LaurentPolynomial::truncated_below(int bound) const {
    LaurentPolynomial r;
    for (const auto &[e, c] : terms_) {
        if (e >= bound) {
            break;
        }
        r.terms_.emplace_hint(r.terms_.end(), e, c);
    }
    return r;
}

mpq_class LaurentPolynomial::evaluate(const mpq_class &at) const {
    if (is_zero()) {
        return 0;
    }
    if (at == 0) {
        if (low_degree() < 0) {
            throw ZeroBase("negative power of L evaluated at 0");
        }
        return mpq_class(coefficient(0));
    }
    // Horner from the top degree down to the lowest, then rescale.
    mpq_class acc = 0;
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        for (int k = prev; k > it->first; --k) {
            acc *= at;
        }
        acc += it->second;
        prev = it->first;
    }
    // acc now holds sum c_e * at^(e - low).
    const int low = low_degree();
    mpq_class scale = 1;
    const mpq_class base = low < 0 ? mpq_class(1) / at : at;
    for (int k = 0; k < (low < 0 ? -low : low); ++k) {
        scale *= base;
    }
    mpq_class r = acc * scale;
    r.canonicalize();
    return r;
}

std::string format_monomial(const mpz_class &abs_coeff, int exponent) {
    std::ostringstream os;
    if (exponent == 0) {
        os << abs_coeff.get_str();
        return os.str();
    }
    if (abs_coeff != 1) {
        os << abs_coeff.get_str() << '*';
    }
    os << 'L';
    if (exponent != 1) {
        os << '^' << exponent;
    }
    return os.str();
}

std::string LaurentPolynomial::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const bool negative = it->second < 0;
        if (first) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        mpz_class mag = abs(it->second);
        out += format_monomial(mag, it->first);
        first = false;
    }
    return out;
}

} // namespace motive
