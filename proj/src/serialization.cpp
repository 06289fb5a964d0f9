#include "motive/serialization.hpp"

#include <stdexcept>

namespace motive {

using nlohmann::json;

json to_json(const LaurentPolynomial &p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        terms.push_back(json::array({it->first, it->second.get_str()}));
    }
    return json{{"terms", std::move(terms)}};
}

LaurentPolynomial laurent_from_json(const json &j) {
    LaurentPolynomial::TermMap terms;
    for (const auto &t : j.at("terms")) {
        if (!t.is_array() || t.size() != 2) {
            throw std::invalid_argument("term must be [exponent, \"coefficient\"]");
        }
        mpz_class c;
        if (c.set_str(t[1].get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad coefficient string");
        }
        auto [it, inserted] = terms.emplace(t[0].get<int>(), c);
        if (!inserted) {
            throw std::invalid_argument("duplicate exponent in terms");
        }
    }
    return LaurentPolynomial(std::move(terms));
}

json to_json(const MotiveClass &c) {
    json j = to_json(c.numerator());
    json den = json::array();
    for (const auto &[d, m] : c.denominator()) {
        den.push_back(json::array({d, m}));
    }
    j["denominator"] = std::move(den);
    return j;
}

MotiveClass motive_from_json(const json &j) {
    MotiveClass::Denominator den;
    if (j.contains("denominator")) {
        for (const auto &f : j.at("denominator")) {
            den[f.at(0).get<int>()] += f.at(1).get<int>();
        }
    }
    return MotiveClass(laurent_from_json(j), std::move(den));
}

json to_json(const CompletedSeries &s) {
    json j = to_json(s.known());
    j["depth"] = s.depth();
    return j;
}

} // namespace motive
