#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <functional>

namespace evenhole {

// Fixed-width 128-bit vertex set. Graphs beyond 128 vertices are out of scope,
// so every set in the library is one of these (cheap to copy, trivially hashable).
struct Bits {
    std::uint64_t w0 = 0, w1 = 0;

    static constexpr int capacity = 128;

    static Bits below(int n) {
        assert(n >= 0 && n <= capacity);
        Bits b;
        if (n >= 64) {
            b.w0 = ~0ull;
            b.w1 = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else {
            b.w0 = (n == 64) ? ~0ull : ((1ull << n) - 1);
        }
        return b;
    }
    static Bits single(int i) {
        Bits b;
        b.set(i);
        return b;
    }

    bool test(int i) const {
        assert(i >= 0 && i < capacity);
        return ((i < 64 ? w0 >> i : w1 >> (i - 64)) & 1ull) != 0;
    }
    void set(int i) {
        assert(i >= 0 && i < capacity);
        (i < 64 ? w0 : w1) |= 1ull << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < capacity);
        (i < 64 ? w0 : w1) &= ~(1ull << (i & 63));
    }

    int count() const { return std::popcount(w0) + std::popcount(w1); }
    bool none() const { return w0 == 0 && w1 == 0; }
    bool any() const { return !none(); }

    // Lowest set bit, or -1.
    int first() const {
        if (w0) return std::countr_zero(w0);
        if (w1) return 64 + std::countr_zero(w1);
        return -1;
    }
    // Lowest set bit > i, or -1.
    int next(int i) const {
        ++i;
        if (i < 64) {
            std::uint64_t m = w0 & (~0ull << i);
            if (m) return std::countr_zero(m);
            if (w1) return 64 + std::countr_zero(w1);
            return -1;
        }
        if (i >= 128) return -1;
        std::uint64_t m = w1 & (~0ull << (i - 64));
        if (m) return 64 + std::countr_zero(m);
        return -1;
    }

    template <class F>
    void for_each(F&& f) const {
        std::uint64_t a = w0;
        while (a) {
            f(std::countr_zero(a));
            a &= a - 1;
        }
        a = w1;
        while (a) {
            f(64 + std::countr_zero(a));
            a &= a - 1;
        }
    }

    friend Bits operator&(Bits a, Bits b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
    friend Bits operator|(Bits a, Bits b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
    friend Bits operator^(Bits a, Bits b) { return {a.w0 ^ b.w0, a.w1 ^ b.w1}; }
    // a minus b
    friend Bits operator-(Bits a, Bits b) { return {a.w0 & ~b.w0, a.w1 & ~b.w1}; }
    Bits& operator&=(Bits b) { w0 &= b.w0; w1 &= b.w1; return *this; }
    Bits& operator|=(Bits b) { w0 |= b.w0; w1 |= b.w1; return *this; }
    Bits& operator-=(Bits b) { w0 &= ~b.w0; w1 &= ~b.w1; return *this; }

    bool intersects(Bits b) const { return (w0 & b.w0) || (w1 & b.w1); }
    bool is_subset_of(Bits b) const { return (w0 & ~b.w0) == 0 && (w1 & ~b.w1) == 0; }

    friend bool operator==(const Bits&, const Bits&) = default;
    friend bool operator<(Bits a, Bits b) {
        if (a.w1 != b.w1) return a.w1 < b.w1;
        return a.w0 < b.w0;
    }
};

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::uint64_t x = b.w0 * 0x9e3779b97f4a7c15ull;
        x ^= b.w1 + 0x9e3779b97f4a7c15ull + (x << 6) + (x >> 2);
        return static_cast<std::size_t>(x * 0xbf58476d1ce4e5b9ull);
    }
};

} // namespace evenhole
