#include "stepup/bigint.hpp"

#include <algorithm>

namespace stepup {

BigUInt BigUInt::from_u64(std::uint64_t v) {
    BigUInt out;
    out.limbs_ = {v};
    return out;
}

BigUInt BigUInt::pow2(std::uint64_t exponent) {
    BigUInt out;
    out.limbs_.assign(exponent / 64 + 1, 0);
    out.limbs_.back() = std::uint64_t{1} << (exponent % 64);
    return out;
}

std::size_t BigUInt::decimal_digits() const {
    return to_decimal().size();
}

std::string BigUInt::to_decimal() const {
    // repeated divmod by 10^19, the largest power of ten in a u64
    constexpr std::uint64_t kChunk = 10'000'000'000'000'000'000ull;
    std::vector<std::uint64_t> work = limbs_;
    std::string out;
    auto is_zero = [&] {
        return std::all_of(work.begin(), work.end(), [](std::uint64_t w) { return w == 0; });
    };
    if (is_zero()) return "0";
    std::vector<std::uint64_t> chunks;
    while (!is_zero()) {
        unsigned __int128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            const unsigned __int128 cur = (rem << 64) | work[i];
            work[i] = static_cast<std::uint64_t>(cur / kChunk);
            rem = cur % kChunk;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        chunks.push_back(static_cast<std::uint64_t>(rem));
    }
    out = std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        out += std::string(19 - part.size(), '0') + part;
    }
    return out;
}

} // namespace stepup
