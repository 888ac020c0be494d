#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mmph/error.hpp"

namespace mmph {

// All serialized structures are streams of little-endian 64-bit words.

class WordWriter {
public:
    void put(uint64_t w) { words_.push_back(w); }

    void put_all(std::span<const uint64_t> ws) {
        words_.insert(words_.end(), ws.begin(), ws.end());
    }

    size_t size_words() const { return words_.size(); }
    uint64_t size_bits() const { return static_cast<uint64_t>(words_.size()) * 64; }
    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t> take() { return std::move(words_); }

private:
    std::vector<uint64_t> words_;
};

class WordReader {
public:
    explicit WordReader(std::span<const uint64_t> words) : words_(words) {}

    uint64_t get() {
        if (pos_ >= words_.size()) throw FormatError("word stream truncated");
        return words_[pos_++];
    }

    std::span<const uint64_t> get_span(size_t count) {
        if (pos_ + count > words_.size()) throw FormatError("word stream truncated");
        auto s = words_.subspan(pos_, count);
        pos_ += count;
        return s;
    }

    size_t position() const { return pos_; }
    size_t remaining() const { return words_.size() - pos_; }
    bool at_end() const { return pos_ == words_.size(); }

private:
    std::span<const uint64_t> words_;
    size_t pos_ = 0;
};

// Appends fields of up to 64 bits to a packed little-endian bit stream.
class BitWriter {
public:
    void push(uint64_t value, unsigned bits) {
        if (bits == 0) return;
        if (bits < 64) value &= (uint64_t{1} << bits) - 1;
        size_t word = bitlen_ >> 6;
        unsigned off = bitlen_ & 63;
        if (word >= words_.size()) words_.push_back(0);
        words_[word] |= value << off;
        if (off + bits > 64) {
            words_.push_back(value >> (64 - off));
        }
        bitlen_ += bits;
    }

    uint64_t bit_length() const { return bitlen_; }
    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t> take() { return std::move(words_); }

private:
    std::vector<uint64_t> words_;
    uint64_t bitlen_ = 0;
};

// Random-access reads from a packed bit stream.
class BitReader {
public:
    BitReader(std::span<const uint64_t> words, uint64_t bitpos = 0)
        : words_(words), pos_(bitpos) {}

    uint64_t read(unsigned bits) {
        uint64_t v = peek(pos_, bits);
        pos_ += bits;
        return v;
    }

    uint64_t peek(uint64_t bitpos, unsigned bits) const {
        if (bits == 0) return 0;
        size_t word = bitpos >> 6;
        unsigned off = bitpos & 63;
        if (word >= words_.size()) throw FormatError("bit stream truncated");
        uint64_t v = words_[word] >> off;
        if (off + bits > 64) {
            if (word + 1 >= words_.size()) throw FormatError("bit stream truncated");
            v |= words_[word + 1] << (64 - off);
        }
        if (bits < 64) v &= (uint64_t{1} << bits) - 1;
        return v;
    }

    uint64_t position() const { return pos_; }

private:
    std::span<const uint64_t> words_;
    uint64_t pos_;
};

// File round trip, explicit little-endian byte order.
void write_words_file(const std::string& path, std::span<const uint64_t> words);
std::vector<uint64_t> read_words_file(const std::string& path);

}  // namespace mmph
