#include "stepup/tvertex.hpp"

#include <bit>
#include <string>

namespace stepup {

TVertex::TVertex(std::uint64_t rank, int n) : word_(rank), n_(n) {
    if (n < 1) throw DomainError("TVertex: n must be positive, got " + std::to_string(n));
    if (n > kMaxComponents)
        throw TooLarge("TVertex: n = " + std::to_string(n) + " exceeds packed-word capacity of 64");
    if (n < 64 && rank >> n)
        throw DomainError("TVertex: rank " + std::to_string(rank) + " out of range for n = " +
                          std::to_string(n));
}

TVertex TVertex::from_bits(const std::vector<int>& bits) {
    if (bits.empty()) throw DomainError("TVertex: empty component list");
    if (bits.size() > static_cast<std::size_t>(kMaxComponents))
        throw TooLarge("TVertex: too many components");
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1)
            throw DomainError("TVertex: component " + std::to_string(i + 1) + " is not 0/1");
        if (bits[i]) word |= std::uint64_t{1} << i;
    }
    return TVertex(word, static_cast<int>(bits.size()));
}

int TVertex::bit(int i) const {
    if (i < 1 || i > n_) throw DomainError("TVertex: component index out of range");
    return static_cast<int>((word_ >> (i - 1)) & 1);
}

std::vector<int> TVertex::bits() const {
    std::vector<int> out(n_);
    for (int i = 1; i <= n_; ++i) out[i - 1] = bit(i);
    return out;
}

std::uint64_t rank(const TVertex& v) { return v.rank(); }

int delta(const TVertex& a, const TVertex& b) {
    if (a.n() != b.n())
        throw LengthMismatch("delta: component counts differ (" + std::to_string(a.n()) + " vs " +
                             std::to_string(b.n()) + ")");
    const std::uint64_t x = a.rank() ^ b.rank();
    if (x == 0) throw EqualVertices("delta: undefined on equal vertices");
    return std::bit_width(x); // highest differing component, 1-based
}

Ordering compare(const TVertex& a, const TVertex& b) {
    if (a.n() != b.n())
        throw LengthMismatch("compare: component counts differ");
    if (a.rank() == b.rank()) return Ordering::EQ;
    return a.rank() < b.rank() ? Ordering::LT : Ordering::GT;
}

std::vector<TVertex> enumerate_T(int n, int max_n) {
    if (n < 1) throw DomainError("enumerate_T: n must be positive");
    if (n > max_n || n > kMaxComponents)
        throw TooLarge("enumerate_T: n = " + std::to_string(n) + " exceeds limit " +
                       std::to_string(std::min(max_n, kMaxComponents)));
    std::vector<TVertex> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n); ++r) out.emplace_back(r, n);
    return out;
}

} // namespace stepup
