#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ramsey {

// Fixed-length bit string with 0-based positions, packed LSB-first into
// 64-bit words. Position p lives in word p/64 at bit p%64, so for
// lengths <= 64 the first word equals the computational-basis index of
// the string.
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t size);

    // size <= 64; takes the low `size` bits of `index`.
    static Bits from_index(std::size_t size, std::uint64_t index);
    // '0'/'1' characters, position 0 first.
    static Bits from_string(const std::string& text);

    std::size_t size() const { return size_; }
    bool test(std::size_t pos) const;
    void set(std::size_t pos, bool value = true);
    std::size_t count() const;
    bool none() const;

    std::uint64_t to_index() const;  // size <= 64
    std::string to_string() const;

    bool contains_all(const Bits& mask) const;  // (x & mask) == mask
    bool disjoint(const Bits& mask) const;      // (x & mask) == 0
    Bits complemented() const;

    const std::vector<std::uint64_t>& words() const { return words_; }

    bool operator==(const Bits&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace ramsey
