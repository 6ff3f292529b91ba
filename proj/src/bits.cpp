#include "ramsey/bits.hpp"

#include <bit>
#include <stdexcept>

namespace ramsey {

namespace {
std::size_t word_count(std::size_t size) { return (size + 63) / 64; }
}  // namespace

Bits::Bits(std::size_t size) : size_(size), words_(word_count(size), 0) {}

Bits Bits::from_index(std::size_t size, std::uint64_t index) {
    if (size > 64) throw std::invalid_argument("Bits::from_index requires size <= 64");
    Bits b(size);
    if (size > 0) {
        std::uint64_t keep = (size == 64) ? ~0ull : ((1ull << size) - 1);
        b.words_[0] = index & keep;
    }
    return b;
}

Bits Bits::from_string(const std::string& text) {
    Bits b(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            b.set(i);
        } else if (text[i] != '0') {
            throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
    }
    return b;
}

bool Bits::test(std::size_t pos) const {
    if (pos >= size_) throw std::out_of_range("bit position out of range");
    return (words_[pos / 64] >> (pos % 64)) & 1ull;
}

void Bits::set(std::size_t pos, bool value) {
    if (pos >= size_) throw std::out_of_range("bit position out of range");
    std::uint64_t mask = 1ull << (pos % 64);
    if (value) {
        words_[pos / 64] |= mask;
    } else {
        words_[pos / 64] &= ~mask;
    }
}

std::size_t Bits::count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
}

bool Bits::none() const {
    for (std::uint64_t w : words_) {
        if (w != 0) return false;
    }
    return true;
}

std::uint64_t Bits::to_index() const {
    if (size_ > 64) throw std::length_error("Bits::to_index requires size <= 64");
    return words_.empty() ? 0 : words_[0];
}

std::string Bits::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

bool Bits::contains_all(const Bits& mask) const {
    if (mask.size_ != size_) throw std::invalid_argument("bit-string sizes differ");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & mask.words_[i]) != mask.words_[i]) return false;
    }
    return true;
}

bool Bits::disjoint(const Bits& mask) const {
    if (mask.size_ != size_) throw std::invalid_argument("bit-string sizes differ");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & mask.words_[i]) != 0) return false;
    }
    return true;
}

Bits Bits::complemented() const {
    Bits out(size_);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
    // padding bits above size_ must stay zero
    std::size_t used = size_ % 64;
    if (!out.words_.empty() && used != 0) {
        out.words_.back() &= (1ull << used) - 1;
    }
    return out;
}

}  // namespace ramsey
