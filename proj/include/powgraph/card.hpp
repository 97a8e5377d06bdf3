#pragma once

#include <cstdint>
#include <compare>
#include <stdexcept>
#include <string>

namespace powgraph {

// Cardinality of a (possibly infinite) set: a nonnegative integer or aleph-null.
class Card {
public:
    constexpr Card() : finite_(true), value_(0) {}
    static constexpr Card fin(std::uint64_t n) {
        Card c;
        c.finite_ = true;
        c.value_ = n;
        return c;
    }
    static constexpr Card aleph0() {
        Card c;
        c.finite_ = false;
        c.value_ = 0;
        return c;
    }

    constexpr bool is_finite() const { return finite_; }
    constexpr std::uint64_t value() const {
        if (!finite_) throw std::logic_error("Card: aleph0 has no finite value");
        return value_;
    }

    friend constexpr bool operator==(const Card& a, const Card& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend constexpr bool operator<(const Card& a, const Card& b) {
        if (!a.finite_) return false;           // aleph0 < anything: no
        if (!b.finite_) return true;            // finite < aleph0
        return a.value_ < b.value_;
    }
    friend constexpr bool operator<=(const Card& a, const Card& b) { return a == b || a < b; }
    friend constexpr bool operator>(const Card& a, const Card& b) { return b < a; }
    friend constexpr bool operator>=(const Card& a, const Card& b) { return b <= a; }

    // aleph0 - n = aleph0; finite subtraction must not underflow.
    friend constexpr Card operator-(const Card& a, const Card& b) {
        if (!a.finite_) return aleph0();
        if (!b.finite_ || b.value_ > a.value_)
            throw std::logic_error("Card: subtraction underflow");
        return fin(a.value_ - b.value_);
    }

    std::string str() const { return finite_ ? std::to_string(value_) : "aleph0"; }

private:
    bool finite_;
    std::uint64_t value_;
};

}  // namespace powgraph
