#include "motive/motive_class.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "motive/errors.hpp"

namespace motive {

namespace {

LaurentPolynomial factor_power(int d, int m) {
    return LaurentPolynomial::cyclotomic_factor(d).pow(static_cast<unsigned>(m));
}

// Product of (L^d - 1)^(target_d - have_d) over the target denominator.
LaurentPolynomial lift_factor(const MotiveClass::Denominator &target, const MotiveClass::Denominator &have) {
    LaurentPolynomial r(1);
    for (const auto &[d, m] : target) {
        auto it = have.find(d);
        const int missing = m - (it == have.end() ? 0 : it->second);
        if (missing > 0) {
            r *= factor_power(d, missing);
        }
    }
    return r;
}

} // namespace

MotiveClass::MotiveClass(long constant) : numerator_(constant) {}

MotiveClass::MotiveClass(LaurentPolynomial numerator) : numerator_(std::move(numerator)) {}

MotiveClass::MotiveClass(LaurentPolynomial numerator, Denominator denominator)
    : numerator_(std::move(numerator)) {
    for (const auto &[d, m] : denominator) {
        if (d < 1 || m < 0) {
            throw std::invalid_argument("MotiveClass: denominator entries need d >= 1, m >= 0");
        }
        if (m > 0) {
            denominator_.emplace(d, m);
        }
    }
    normalize();
}

MotiveClass MotiveClass::inverse_factor(int d, int m) {
    return MotiveClass(LaurentPolynomial(1), Denominator{{d, m}});
}

LaurentPolynomial MotiveClass::denominator_polynomial() const {
    LaurentPolynomial r(1);
    for (const auto &[d, m] : denominator_) {
        r *= factor_power(d, m);
    }
    return r;
}

void MotiveClass::normalize() {
    if (numerator_.is_zero()) {
        denominator_.clear();
        return;
    }
    for (auto it = denominator_.begin(); it != denominator_.end();) {
        const LaurentPolynomial f = LaurentPolynomial::cyclotomic_factor(it->first);
        while (it->second > 0) {
            auto q = numerator_.try_divide(f);
            if (!q) {
                break;
            }
            numerator_ = std::move(*q);
            --it->second;
        }
        it = it->second == 0 ? denominator_.erase(it) : std::next(it);
    }
}

MotiveClass MotiveClass::operator-() const {
    MotiveClass r = *this;
    r.numerator_ = -r.numerator_;
    return r;
}

MotiveClass &MotiveClass::operator+=(const MotiveClass &other) {
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = other;
    }
    Denominator common = denominator_;
    for (const auto &[d, m] : other.denominator_) {
        int &slot = common[d];
        slot = std::max(slot, m);
    }
    numerator_ = numerator_ * lift_factor(common, denominator_) +
                 other.numerator_ * lift_factor(common, other.denominator_);
    denominator_ = std::move(common);
    normalize();
    return *this;
}

MotiveClass &MotiveClass::operator-=(const MotiveClass &other) {
    return *this += -other;
}

MotiveClass &MotiveClass::operator*=(const MotiveClass &other) {
    numerator_ *= other.numerator_;
    for (const auto &[d, m] : other.denominator_) {
        denominator_[d] += m;
    }
    normalize();
    return *this;
}

bool operator==(const MotiveClass &a, const MotiveClass &b) {
    if (a.denominator_ == b.denominator_) {
        return a.numerator_ == b.numerator_;
    }
    MotiveClass::Denominator common = a.denominator_;
    for (const auto &[d, m] : b.denominator_) {
        int &slot = common[d];
        slot = std::max(slot, m);
    }
    return a.numerator_ * lift_factor(common, a.denominator_) ==
           b.numerator_ * lift_factor(common, b.denominator_);
}

MotiveClass MotiveClass::pow(unsigned k) const {
    MotiveClass result(1);
    for (unsigned i = 0; i < k; ++i) {
        result *= *this;
    }
    return result;
}

namespace {

struct FactoredNumerator {
    mpz_class sign;
    int shift = 0;
    MotiveClass::Denominator factors;
};

// Peel +-L^k and factors (L^d - 1), always trying the largest admissible d
// first: the largest cyclotomic block present is the first one that divides.
std::optional<FactoredNumerator> factor_numerator(const LaurentPolynomial &num) {
    if (num.is_zero()) {
        return std::nullopt;
    }
    FactoredNumerator out;
    out.shift = num.low_degree();
    LaurentPolynomial rest = num.shifted(-out.shift);
    while (rest.degree() > 0) {
        bool divided = false;
        for (int d = rest.degree(); d >= 1; --d) {
            if (auto q = rest.try_divide(LaurentPolynomial::cyclotomic_factor(d))) {
                rest = std::move(*q);
                ++out.factors[d];
                divided = true;
                break;
            }
        }
        if (!divided) {
            return std::nullopt;
        }
    }
    const mpz_class c = rest.coefficient(0);
    if (c != 1 && c != -1) {
        return std::nullopt;
    }
    out.sign = c;
    return out;
}

} // namespace

bool MotiveClass::is_invertible() const {
    return factor_numerator(numerator_).has_value();
}

MotiveClass MotiveClass::inverse() const {
    auto f = factor_numerator(numerator_);
    if (!f) {
        throw NotInvertible("class " + to_string() + " is not invertible in the motive subring");
    }
    MotiveClass r;
    r.numerator_ = denominator_polynomial() * LaurentPolynomial::monomial(-f->shift, f->sign);
    r.denominator_ = std::move(f->factors);
    r.normalize();
    return r;
}

mpq_class MotiveClass::evaluate(const mpq_class &at) const {
    mpq_class den = 1;
    for (const auto &[d, m] : denominator_) {
        mpq_class power = 1;
        for (int k = 0; k < d; ++k) {
            power *= at;
        }
        const mpq_class factor = power - 1;
        if (factor == 0) {
            throw PoleAtPoint("factor (L^" + std::to_string(d) + "-1) vanishes at L = " + at.get_str());
        }
        for (int k = 0; k < m; ++k) {
            den *= factor;
        }
    }
    mpq_class r = numerator_.evaluate(at) / den;
    r.canonicalize();
    return r;
}

std::string MotiveClass::to_string() const {
    if (denominator_.empty()) {
        return numerator_.to_string();
    }
    std::vector<std::string> parts;
    if (numerator_.is_monomial()) {
        const int e = numerator_.low_degree();
        const mpz_class c = numerator_.coefficient(e);
        if (c != 1 || e != 0) {
            parts.push_back((c < 0 ? "-" : "") + format_monomial(abs(c), e));
        }
    } else {
        const int low = numerator_.low_degree();
        if (low != 0) {
            parts.push_back(format_monomial(1, low));
        }
        parts.push_back("(" + numerator_.shifted(-low).to_string() + ")");
    }
    for (const auto &[d, m] : denominator_) {
        std::string f = "(";
        f += d == 1 ? "L" : "L^" + std::to_string(d);
        f += "-1)^-" + std::to_string(m);
        parts.push_back(std::move(f));
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out += " * ";
        }
        out += parts[i];
    }
    return out;
}

} // namespace motive
