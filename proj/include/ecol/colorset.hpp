#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace ecol {

// Set of color ids in [0, kCapacity).
class ColorSet {
public:
    static constexpr int kCapacity = 256;

    ColorSet() = default;
    static ColorSet of(const std::vector<int>& colors) {
        ColorSet s;
        for (int c : colors) s.insert(c);
        return s;
    }
    static ColorSet range(int n) {
        ColorSet s;
        for (int c = 0; c < n; ++c) s.insert(c);
        return s;
    }

    void insert(int c) { w_[c >> 6] |= 1ULL << (c & 63); }
    void erase(int c) { w_[c >> 6] &= ~(1ULL << (c & 63)); }
    bool contains(int c) const { return c >= 0 && c < kCapacity && ((w_[c >> 6] >> (c & 63)) & 1ULL); }

    int size() const {
        int n = 0;
        for (auto w : w_) n += std::popcount(w);
        return n;
    }
    bool empty() const { return (w_[0] | w_[1] | w_[2] | w_[3]) == 0; }

    // Smallest element at least `from`, or -1.
    int next(int from = 0) const {
        if (from >= kCapacity) return -1;
        int i = from >> 6;
        std::uint64_t w = w_[i] & (~0ULL << (from & 63));
        while (true) {
            if (w) return (i << 6) + std::countr_zero(w);
            if (++i == 4) return -1;
            w = w_[i];
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int c = next(0); c >= 0; c = next(c + 1)) out.push_back(c);
        return out;
    }

    ColorSet operator&(const ColorSet& o) const {
        ColorSet r;
        for (int i = 0; i < 4; ++i) r.w_[i] = w_[i] & o.w_[i];
        return r;
    }
    ColorSet operator|(const ColorSet& o) const {
        ColorSet r;
        for (int i = 0; i < 4; ++i) r.w_[i] = w_[i] | o.w_[i];
        return r;
    }
    ColorSet minus(const ColorSet& o) const {
        ColorSet r;
        for (int i = 0; i < 4; ++i) r.w_[i] = w_[i] & ~o.w_[i];
        return r;
    }
    bool operator==(const ColorSet&) const = default;
    auto operator<=>(const ColorSet&) const = default;

private:
    std::array<std::uint64_t, 4> w_{};
};

} // namespace ecol
