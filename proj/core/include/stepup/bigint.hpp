#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace stepup {

/// Just enough unsigned big-integer arithmetic for rendering powers of two:
/// construction from u64 or as 2^e, equality, and decimal conversion.
class BigUInt {
  public:
    BigUInt() : limbs_{0} {}
    static BigUInt from_u64(std::uint64_t v);
    static BigUInt pow2(std::uint64_t exponent);

    bool operator==(const BigUInt&) const = default;

    /// Decimal digit count (exact).
    std::size_t decimal_digits() const;

    std::string to_decimal() const;

  private:
    std::vector<std::uint64_t> limbs_; // little-endian, no trailing zero limbs except value 0
};

} // namespace stepup
