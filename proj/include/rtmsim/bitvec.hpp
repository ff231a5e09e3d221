#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rtmsim {

// A cache-line payload: exactly 64 bytes.
using RawLine = std::array<uint8_t, 64>;

inline constexpr size_t kLineBytes = 64;
inline constexpr size_t kLineBits = 512;

// Dynamically sized bit sequence packed into 64-bit words.
// Logical bit i of a byte stream maps LSB-first: bit (8*k + j) is bit j of
// byte k. Trailing bits of the last word are kept zero so that operator==
// and popcount work on the raw words.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static BitVec from_bytes(std::span<const uint8_t> bytes);
    static BitVec from_line(const RawLine& line) { return from_bytes(line); }
    std::vector<uint8_t> to_bytes() const;
    RawLine to_line() const;  // requires size() == 512

    size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }

    bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(size_t i, bool v) {
        uint64_t m = uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= m;
        else
            words_[i >> 6] &= ~m;
    }
    void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

    size_t popcount() const {
        size_t c = 0;
        for (uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    BitVec& operator^=(const BitVec& o);
    bool operator==(const BitVec&) const = default;

    std::vector<uint32_t> set_positions() const;

    template <typename F>
    void for_each_set(F&& f) const {
        for (size_t w = 0; w < words_.size(); ++w) {
            uint64_t x = words_[w];
            while (x) {
                f(static_cast<uint32_t>(w * 64 + std::countr_zero(x)));
                x &= x - 1;
            }
        }
    }

    std::span<const uint64_t> words() const { return words_; }

private:
    size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

// Sequential writer of MSB-first integer fields into a fixed-size BitVec.
class BitWriter {
public:
    explicit BitWriter(BitVec& bits) : bits_(bits) {}

    void put(uint64_t value, unsigned nbits) {
        for (unsigned b = nbits; b-- > 0;) bits_.set(pos_++, (value >> b) & 1);
    }
    size_t pos() const { return pos_; }

private:
    BitVec& bits_;
    size_t pos_ = 0;
};

// Sequential reader matching BitWriter's field layout.
class BitReader {
public:
    explicit BitReader(const BitVec& bits) : bits_(bits) {}

    uint64_t get(unsigned nbits) {
        uint64_t v = 0;
        for (unsigned b = 0; b < nbits; ++b) v = (v << 1) | uint64_t{bits_.get(pos_++)};
        return v;
    }
    size_t pos() const { return pos_; }
    size_t remaining() const { return bits_.size() - pos_; }

private:
    const BitVec& bits_;
    size_t pos_ = 0;
};

}  // namespace rtmsim
