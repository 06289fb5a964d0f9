#pragma once

#include <cstdint>
#include <vector>

namespace motive::ff {

bool is_prime(std::uint32_t n);

/// Z/q for an odd prime q, with a precomputed inverse table.
class PrimeField {
public:
    /// Throws std::invalid_argument unless q is an odd prime.
    explicit PrimeField(std::uint32_t q);

    std::uint32_t q() const noexcept { return q_; }
    /// (q + 1) / 2, the element 1/2.
    std::uint32_t half() const noexcept { return half_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + q_ - b) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : q_ - a; }
    /// a must be nonzero.
    std::uint32_t inv(std::uint32_t a) const noexcept { return inverse_[a]; }
    std::uint32_t reduce(std::int64_t a) const noexcept {
        const auto m = static_cast<std::int64_t>(q_);
        return static_cast<std::uint32_t>(((a % m) + m) % m);
    }

private:
    std::uint32_t q_;
    std::uint32_t half_;
    std::vector<std::uint32_t> inverse_;
};

} // namespace motive::ff
