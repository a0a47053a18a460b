#pragma once

#include <cstdint>
#include <vector>

#include "stepup/errors.hpp"

namespace stepup {

/// Hard cap on the number of components: vertices are packed into one
/// machine word.
inline constexpr int kMaxComponents = 64;

/// Default guard for enumerate_T (memory bound, not a semantic limit).
inline constexpr int kDefaultEnumerateMax = 20;

enum class Ordering { LT, EQ, GT };

/// A vertex of the step-up ground set: a binary string (g_1,...,g_n) with
/// 1-based components. Component g_i sits at bit i-1 of a packed word, so
/// the packed value is exactly rank() = sum g_i * 2^(i-1). The total order
/// on vertices is the numeric order of ranks, and delta() is the highest
/// set bit of the XOR of two packed words.
class TVertex {
  public:
    /// Build from a rank in [0, 2^n). Throws DomainError on out-of-range
    /// rank, TooLarge for n > 64.
    TVertex(std::uint64_t rank, int n);

    /// Build from explicit components, bits[0] = g_1.
    static TVertex from_bits(const std::vector<int>& bits);

    int n() const { return n_; }
    std::uint64_t rank() const { return word_; }

    /// Component g_i, i in 1..n.
    int bit(int i) const;

    /// All components, index 0 holding g_1.
    std::vector<int> bits() const;

    bool operator==(const TVertex& other) const {
        return n_ == other.n_ && word_ == other.word_;
    }
    bool operator!=(const TVertex& other) const { return !(*this == other); }

  private:
    std::uint64_t word_;
    int n_;
};

/// rank(e) = sum g_i * 2^(i-1); strictly monotone with respect to the
/// vertex order.
std::uint64_t rank(const TVertex& v);

/// Largest component index at which two distinct vertices differ (1..n).
/// Symmetric. Throws EqualVertices on equal inputs, LengthMismatch when the
/// component counts disagree.
int delta(const TVertex& a, const TVertex& b);

/// Three-way comparison in the step-up order: LT iff at position
/// d = delta(a,b) vertex a carries 0 and b carries 1, which coincides with
/// comparing ranks. Throws LengthMismatch.
Ordering compare(const TVertex& a, const TVertex& b);

/// All 2^n vertices in strictly increasing order. Throws TooLarge when n
/// exceeds max_n.
std::vector<TVertex> enumerate_T(int n, int max_n = kDefaultEnumerateMax);

} // namespace stepup
