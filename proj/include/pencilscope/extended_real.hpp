#pragma once

#include <compare>
#include <string>

namespace pencilscope {

/// A real number or the tagged +∞ used at spectrum points.
class ExtendedReal {
public:
    constexpr ExtendedReal() = default;
    constexpr explicit ExtendedReal(double v) : value_(v) {}

    static constexpr ExtendedReal infinity() {
        ExtendedReal e;
        e.infinite_ = true;
        return e;
    }

    constexpr bool is_infinite() const noexcept { return infinite_; }
    constexpr bool is_finite() const noexcept { return !infinite_; }
    /// Finite value; meaningless when infinite.
    constexpr double value() const noexcept { return value_; }
    /// Finite value, or the fallback for +∞.
    constexpr double value_or(double fallback) const noexcept { return infinite_ ? fallback : value_; }

    constexpr bool operator==(const ExtendedReal& o) const noexcept {
        return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
    }
    constexpr std::partial_ordering operator<=>(const ExtendedReal& o) const noexcept {
        if (infinite_ || o.infinite_) return infinite_ <=> o.infinite_;
        return value_ <=> o.value_;
    }

    /// %.17g, or the token `inf`.
    std::string to_string() const;

private:
    double value_ = 0.0;
    bool infinite_ = false;
};

}  // namespace pencilscope
