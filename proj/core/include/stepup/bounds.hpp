#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "stepup/errors.hpp"

namespace stepup {

/// Default cap on numeric rendering of tower values, in decimal digits.
inline constexpr std::uint64_t kDefaultDigitBudget = 1'000'000;

/// An iterated exponential 2^(2^(...^(base_exponent))) with `height` twos.
/// Height 0 is the bare base. Numeric evaluation is attempted only while
/// the decimal size stays within a digit budget; past that the symbolic
/// rendering is the authoritative form.
struct TowerExpr {
    int height = 0;
    double base_exponent = 0;
    bool base_integral = false;

    bool operator==(const TowerExpr&) const = default;

    /// Canonical text: "10", "2^10", "2^(2^10)", "2^1.07177...". Re-parsing
    /// reproduces the expression exactly.
    std::string render() const;

    static TowerExpr parse(std::string_view text);

    /// Exact decimal value when the tower is integral and fits the budget.
    std::optional<std::string> numeric_decimal(std::uint64_t digit_budget = kDefaultDigitBudget) const;
};

/// A lower-bound statement "r_k(s,...,s) >= bound" with 2 or 3 colours.
struct RamseyStatement {
    int uniformity = 0;
    int colors = 2;
    long long clique_size = 0;
    TowerExpr lower_bound;

    /// e.g. "r_4(7) >= 2^10 = 1024" (numeric part only when it fits the
    /// digit budget).
    std::string render(std::uint64_t digit_budget = kDefaultDigitBudget) const;
};

/// One application of the step-up lemma: from r_k(l) >= n_bound to
/// r_{k+1}(2l + k - 4) >= 2^(n_bound). Throws BadUniformity for k < 3.
RamseyStatement step_up(int k, long long l, const TowerExpr& n_bound);

/// r_3(l,l,l) >= 2^(l^(c*log2 log2 l)). Throws DomainError unless l >= 5
/// and 0 < c <= 1/80.
RamseyStatement theorem1_bound(int l, double c);

/// Iterate the step-up from the three-colour base case up to uniformity k,
/// tracking the clique-size recurrence s -> 2s + j - 4 at each uniformity j.
/// The resulting tower height exceeds the base statement's by exactly k - 3.
RamseyStatement theorem3_bound(int k, int l, double c);

} // namespace stepup
