#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace critexp {

/// Finite word over {0,1}, bit-packed 64 letters per block. Letter i lives in
/// bit (i % 64) of block i / 64; bits past size() are always zero.
class Word {
public:
    using size_type = std::uint64_t;

    Word() = default;
    /// n copies of `letter`.
    explicit Word(size_type n, bool letter = false);

    /// Accepts only '0' and '1'.
    static Word from_string(std::string_view letters);
    std::string to_string() const;

    size_type size() const noexcept { return size_; }
    bool empty() const noexcept { return size_ == 0; }

    bool operator[](size_type i) const noexcept { return (blocks_[i >> 6] >> (i & 63)) & 1u; }
    bool at(size_type i) const;

    void push_back(bool letter);
    void append(const Word& other);
    void reserve(size_type n) { blocks_.reserve(block_count(n)); }
    /// Drops letters past n (n <= size()).
    void truncate(size_type n);
    void flip(size_type i);

    Word subword(size_type pos, size_type len) const;
    bool is_prefix_of(const Word& other) const;

    std::span<const std::uint64_t> blocks() const noexcept { return blocks_; }

    /// Builds a word from raw blocks; stray bits past `n` are cleared.
    static Word from_blocks(std::vector<std::uint64_t> blocks, size_type n);

    friend bool operator==(const Word&, const Word&) = default;

    static constexpr size_type block_count(size_type n) noexcept { return (n + 63) / 64; }

private:
    void clear_tail() noexcept;

    std::vector<std::uint64_t> blocks_;
    size_type size_ = 0;
};

Word operator+(const Word& a, const Word& b);

/// The Thue-Morse instance is the only one this library ships; the table
/// exists so the substitution can be stated and tested explicitly.
struct MorphismTable {
    Word image_of_0;
    Word image_of_1;
};

/// 0 -> 01, 1 -> 10.
MorphismTable thue_morse_table();

/// Letter-by-letter substitution through an arbitrary table (reference path).
Word apply(const MorphismTable& table, const Word& w);

/// Thue-Morse morphism: |mu(w)| = 2|w|.
Word mu(const Word& w);

/// mu applied s times. Throws size_error if 2^s * |w| does not fit in 64 bits.
Word mu_pow(const Word& w, unsigned s);

/// Drops the first t letters; throws precondition_error if t > |w|.
Word delete_prefix(const Word& w, Word::size_type t);

Word zeros(Word::size_type r);

Word complement(const Word& w);

/// Every position t (0-indexed) with w[t] = w[t+1] = 0, ascending.
std::vector<Word::size_type> occurrences_00(const Word& w);

/// Letter i of the infinite Thue-Morse word: parity of popcount(i).
inline bool thue_morse_letter(std::uint64_t i) noexcept { return __builtin_parityll(i) != 0; }

/// Whether w is a factor of some mu(u): some alignment cuts w into complete
/// blocks 01/10, with a free partial block allowed at either end.
bool in_language_L(const Word& w);

} // namespace critexp
