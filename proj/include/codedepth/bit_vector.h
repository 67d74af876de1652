// Copyright 2026 The codedepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CODEDEPTH_BIT_VECTOR_H
#define CODEDEPTH_BIT_VECTOR_H

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace codedepth {

/// Fixed-length GF(2) vector packed into 64-bit words. Padding bits past
/// `size()` are always zero.
class BitVector {
   public:
    BitVector() = default;
    explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const uint64_t *words() const {
        return words_.data();
    }
    uint64_t *words() {
        return words_.data();
    }

    bool get(size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    BitVector &operator^=(const BitVector &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] ^= other.words_[w];
        }
        return *this;
    }
    BitVector &operator&=(const BitVector &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] &= other.words_[w];
        }
        return *this;
    }
    BitVector &operator|=(const BitVector &other) {
        for (size_t w = 0; w < words_.size(); w++) {
            words_[w] |= other.words_[w];
        }
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector &b) {
        return a ^= b;
    }
    friend BitVector operator&(BitVector a, const BitVector &b) {
        return a &= b;
    }
    friend BitVector operator|(BitVector a, const BitVector &b) {
        return a |= b;
    }

    size_t popcount() const {
        size_t total = 0;
        for (uint64_t w : words_) {
            total += std::popcount(w);
        }
        return total;
    }
    bool any() const {
        for (uint64_t w : words_) {
            if (w) {
                return true;
            }
        }
        return false;
    }
    void clear() {
        for (auto &w : words_) {
            w = 0;
        }
    }

    /// Parity of popcount(a & b).
    friend bool dot(const BitVector &a, const BitVector &b) {
        uint64_t acc = 0;
        for (size_t w = 0; w < a.words_.size(); w++) {
            acc ^= a.words_[w] & b.words_[w];
        }
        return std::popcount(acc) & 1;
    }

    bool operator==(const BitVector &other) const = default;
    /// Lexicographic on bit index 0, 1, 2, ... (bit 0 most significant for ordering).
    std::strong_ordering operator<=>(const BitVector &other) const {
        if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
            return c;
        }
        for (size_t k = 0; k < num_bits_; k++) {
            bool a = get(k);
            bool b = other.get(k);
            if (a != b) {
                return a ? std::strong_ordering::less : std::strong_ordering::greater;
            }
        }
        return std::strong_ordering::equal;
    }

    std::vector<size_t> ones() const {
        std::vector<size_t> out;
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t v = words_[w];
            while (v) {
                out.push_back(w * 64 + std::countr_zero(v));
                v &= v - 1;
            }
        }
        return out;
    }

    std::string str() const {
        std::string s(num_bits_, '0');
        for (size_t k = 0; k < num_bits_; k++) {
            if (get(k)) {
                s[k] = '1';
            }
        }
        return s;
    }

   private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

}  // namespace codedepth

#endif
