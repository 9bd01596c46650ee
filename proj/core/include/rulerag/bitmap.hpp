#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace rulerag {

// Fixed-length row bitmap packed into 64-bit words. Popcount is the only
// aggregation the miner ever needs, so the interface stays small.
class Bitmap {
public:
    Bitmap() = default;

    explicit Bitmap(std::size_t bits, bool fill = false)
        : bits_(bits), words_((bits + 63) / 64, fill ? ~std::uint64_t{0} : 0) {
        trim_tail();
    }

    std::size_t size() const { return bits_; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    Bitmap& operator&=(const Bitmap& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitmap& operator|=(const Bitmap& other) {
        check_same_size(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    friend Bitmap operator&(Bitmap lhs, const Bitmap& rhs) { lhs &= rhs; return lhs; }
    friend Bitmap operator|(Bitmap lhs, const Bitmap& rhs) { lhs |= rhs; return lhs; }

    Bitmap complement() const {
        Bitmap out = *this;
        for (auto& w : out.words_) w = ~w;
        out.trim_tail();
        return out;
    }

    // |a AND b| without materializing the intersection.
    static std::size_t and_count(const Bitmap& a, const Bitmap& b) {
        a.check_same_size(b);
        std::size_t c = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(a.words_[i] & b.words_[i]));
        return c;
    }

    bool operator==(const Bitmap&) const = default;

private:
    void trim_tail() {
        const std::size_t tail = bits_ & 63;
        if (tail != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << tail) - 1;
    }

    void check_same_size(const Bitmap& other) const {
        if (bits_ != other.bits_)
            throw std::invalid_argument("bitmap length mismatch");
    }

    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rulerag
