#include "motive/ff/prime_field.hpp"

#include <stdexcept>
#include <string>

namespace motive::ff {

bool is_prime(std::uint32_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

PrimeField::PrimeField(std::uint32_t q) : q_(q), half_((q + 1) / 2) {
    if (q < 3 || !is_prime(q)) {
        throw std::invalid_argument("field size " + std::to_string(q) + " is not an odd prime");
    }
    if (q > (1U << 20)) {
        throw std::invalid_argument("field size too large for table-driven arithmetic");
    }
    inverse_.assign(q, 0);
    inverse_[1] = 1;
    // inv(a) = -(q / a) * inv(q mod a)
    for (std::uint32_t a = 2; a < q; ++a) {
        inverse_[a] = mul(q - q / a, inverse_[q % a]);
    }
}

} // namespace motive::ff
