#pragma once

#include <cstdint>
#include <numeric>
#include <string>

namespace corpora {

/// Exact non-negative rational. Metrics are kept as ratios internally so
/// that comparisons and reruns are bit-deterministic; rounding happens only
/// when a report is printed.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    constexpr Ratio() = default;
    Ratio(std::uint64_t n, std::uint64_t d) : num(n), den(d) { reduce(); }

    static Ratio zero() { return Ratio(); }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Percentage with two decimals, round-half-up; matches report tables.
    std::string percent_2dp() const;

    void reduce() {
        if (den == 0) den = 1;  // callers guard; keep the value finite
        const std::uint64_t g = std::gcd(num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return static_cast<unsigned __int128>(a.num) * b.den ==
               static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return !(a == b); }
    friend bool operator<(const Ratio& a, const Ratio& b) {
        return static_cast<unsigned __int128>(a.num) * b.den <
               static_cast<unsigned __int128>(b.num) * a.den;
    }
    friend bool operator>(const Ratio& a, const Ratio& b) { return b < a; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return !(b < a); }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return !(a < b); }
};

}  // namespace corpora
