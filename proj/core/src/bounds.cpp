#include "stepup/bounds.hpp"

#include <charconv>
#include <cmath>

#include "stepup/bigint.hpp"

namespace stepup {

namespace {

std::string render_base(double value, bool integral) {
    if (integral && value >= 0 && value < 9.007199254740992e15) {
        return std::to_string(static_cast<std::uint64_t>(value));
    }
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

std::string TowerExpr::render() const {
    std::string out = render_base(base_exponent, base_integral);
    for (int level = 0; level < height; ++level) {
        if (out.find('^') != std::string::npos)
            out = "2^(" + out + ")";
        else
            out = "2^" + out;
    }
    return out;
}

TowerExpr TowerExpr::parse(std::string_view text) {
    if (text.empty()) throw ParseError("tower: empty expression");
    if (text.rfind("2^", 0) == 0) {
        std::string_view rest = text.substr(2);
        if (!rest.empty() && rest.front() == '(') {
            if (rest.back() != ')') throw ParseError("tower: unbalanced parentheses");
            TowerExpr inner = parse(rest.substr(1, rest.size() - 2));
            ++inner.height;
            return inner;
        }
        TowerExpr inner = parse(rest);
        if (inner.height != 0) throw ParseError("tower: nested tower must be parenthesised");
        ++inner.height;
        return inner;
    }
    TowerExpr out;
    double v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ParseError("tower: bad numeric base '" + std::string(text) + "'");
    out.base_exponent = v;
    out.base_integral = text.find_first_of(".eE") == std::string_view::npos;
    return out;
}

std::optional<std::string> TowerExpr::numeric_decimal(std::uint64_t digit_budget) const {
    if (!base_integral || base_exponent < 0) return std::nullopt;
    if (height == 0) {
        if (base_exponent >= 9.007199254740992e15) return std::nullopt;
        return std::to_string(static_cast<std::uint64_t>(base_exponent));
    }
    // collapse the inner height-1 tower to a plain exponent if it fits
    if (base_exponent >= 9.007199254740992e15) return std::nullopt;
    std::uint64_t exponent = static_cast<std::uint64_t>(base_exponent);
    for (int level = 1; level < height; ++level) {
        if (exponent >= 63) {
            // the next level already exceeds u64; the final value cannot
            // stay within any sane digit budget either
            return std::nullopt;
        }
        exponent = std::uint64_t{1} << exponent;
    }
    const double digits_estimate = static_cast<double>(exponent) * 0.30102999566398120 + 1.0;
    if (digits_estimate > static_cast<double>(digit_budget)) return std::nullopt;
    return BigUInt::pow2(exponent).to_decimal();
}

std::string RamseyStatement::render(std::uint64_t digit_budget) const {
    std::string out = "r_" + std::to_string(uniformity) + "(";
    // two-colour statements use the customary single-argument shorthand
    const int args = colors == 2 ? 1 : colors;
    for (int i = 0; i < args; ++i) {
        if (i) out += ",";
        out += std::to_string(clique_size);
    }
    out += ") >= " + lower_bound.render();
    if (auto numeric = lower_bound.numeric_decimal(digit_budget);
        numeric && *numeric != lower_bound.render())
        out += " = " + *numeric;
    return out;
}

RamseyStatement step_up(int k, long long l, const TowerExpr& n_bound) {
    if (k < 3) throw BadUniformity("step_up: requires uniformity k >= 3, got " + std::to_string(k));
    RamseyStatement out;
    out.uniformity = k + 1;
    out.colors = 2;
    out.clique_size = 2 * l + k - 4;
    out.lower_bound = n_bound;
    ++out.lower_bound.height;
    return out;
}

RamseyStatement theorem1_bound(int l, double c) {
    if (l < 5) throw DomainError("theorem1_bound: requires l >= 5");
    if (!(c > 0 && c <= 1.0 / 80.0))
        throw DomainError("theorem1_bound: c must lie in (0, 1/80]");
    const double loglog_l = std::log2(std::log2(static_cast<double>(l)));
    RamseyStatement out;
    out.uniformity = 3;
    out.colors = 3;
    out.clique_size = l;
    out.lower_bound = TowerExpr{1, std::pow(static_cast<double>(l), c * loglog_l), false};
    return out;
}

RamseyStatement theorem3_bound(int k, int l, double c) {
    if (k < 3) throw BadUniformity("theorem3_bound: requires uniformity k >= 3");
    RamseyStatement statement = theorem1_bound(l, c);
    for (int j = 3; j < k; ++j) {
        // step-up applied verbatim at uniformity j, keeping three colours
        statement.clique_size = 2 * statement.clique_size + j - 4;
        statement.uniformity = j + 1;
        ++statement.lower_bound.height;
    }
    return statement;
}

} // namespace stepup
