#include "critexp/word.hpp"

#include "critexp/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace critexp {

namespace {

constexpr std::uint64_t low_mask(unsigned bits) noexcept {
    return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

// Moves bit i of x to bit 2i.
constexpr std::uint64_t spread_bits(std::uint32_t v) noexcept {
    std::uint64_t x = v;
    x = (x | (x << 16)) & 0x0000FFFF0000FFFFull;
    x = (x | (x << 8)) & 0x00FF00FF00FF00FFull;
    x = (x | (x << 4)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x << 2)) & 0x3333333333333333ull;
    x = (x | (x << 1)) & 0x5555555555555555ull;
    return x;
}

constexpr std::uint64_t mu_half(std::uint32_t v) noexcept {
    const std::uint64_t e = spread_bits(v);
    return e | ((e ^ 0x5555555555555555ull) << 1);
}

} // namespace

Word::Word(size_type n, bool letter) : blocks_(block_count(n), letter ? ~std::uint64_t{0} : 0), size_(n) {
    clear_tail();
}

Word Word::from_string(std::string_view letters) {
    Word w;
    w.reserve(letters.size());
    for (char c : letters) {
        if (c != '0' && c != '1') throw format_error(std::string("invalid letter '") + c + "' in word");
        w.push_back(c == '1');
    }
    return w;
}

std::string Word::to_string() const {
    std::string s(size_, '0');
    for (size_type i = 0; i < size_; ++i)
        if ((*this)[i]) s[i] = '1';
    return s;
}

bool Word::at(size_type i) const {
    if (i >= size_) throw std::out_of_range("word index out of range");
    return (*this)[i];
}

void Word::push_back(bool letter) {
    if ((size_ & 63) == 0) blocks_.push_back(0);
    if (letter) blocks_.back() |= std::uint64_t{1} << (size_ & 63);
    ++size_;
}

void Word::append(const Word& other) {
    if (other.size_ == 0) return;
    const unsigned shift = size_ & 63;
    if (shift == 0) {
        blocks_.insert(blocks_.end(), other.blocks_.begin(), other.blocks_.end());
    } else {
        blocks_.reserve(block_count(size_ + other.size_));
        for (std::uint64_t b : other.blocks_) {
            blocks_.back() |= b << shift;
            blocks_.push_back(b >> (64 - shift));
        }
    }
    size_ += other.size_;
    blocks_.resize(block_count(size_));
}

void Word::truncate(size_type n) {
    if (n > size_) throw precondition_error("truncate beyond word length");
    size_ = n;
    blocks_.resize(block_count(n));
    clear_tail();
}

void Word::flip(size_type i) {
    if (i >= size_) throw std::out_of_range("word index out of range");
    blocks_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

Word Word::subword(size_type pos, size_type len) const {
    if (pos > size_ || len > size_ - pos) throw precondition_error("subword out of range");
    std::vector<std::uint64_t> out(block_count(len));
    const size_type first = pos >> 6;
    const unsigned shift = pos & 63;
    for (size_type k = 0; k < out.size(); ++k) {
        std::uint64_t b = blocks_[first + k] >> shift;
        if (shift != 0 && first + k + 1 < blocks_.size()) b |= blocks_[first + k + 1] << (64 - shift);
        out[k] = b;
    }
    return from_blocks(std::move(out), len);
}

bool Word::is_prefix_of(const Word& other) const {
    if (size_ > other.size_) return false;
    const size_type full = size_ >> 6;
    if (!std::equal(blocks_.begin(), blocks_.begin() + static_cast<std::ptrdiff_t>(full), other.blocks_.begin()))
        return false;
    if (unsigned rest = size_ & 63) {
        const std::uint64_t m = low_mask(rest);
        return (blocks_[full] & m) == (other.blocks_[full] & m);
    }
    return true;
}

Word Word::from_blocks(std::vector<std::uint64_t> blocks, size_type n) {
    Word w;
    blocks.resize(block_count(n));
    w.blocks_ = std::move(blocks);
    w.size_ = n;
    w.clear_tail();
    return w;
}

void Word::clear_tail() noexcept {
    if (unsigned rest = size_ & 63; rest != 0 && !blocks_.empty()) blocks_.back() &= low_mask(rest);
}

Word operator+(const Word& a, const Word& b) {
    Word out = a;
    out.append(b);
    return out;
}

MorphismTable thue_morse_table() { return {Word::from_string("01"), Word::from_string("10")}; }

Word apply(const MorphismTable& table, const Word& w) {
    Word out;
    for (Word::size_type i = 0; i < w.size(); ++i) out.append(w[i] ? table.image_of_1 : table.image_of_0);
    return out;
}

Word mu(const Word& w) {
    if (w.size() > std::numeric_limits<Word::size_type>::max() / 2) throw size_error("mu: length overflow");
    const auto in = w.blocks();
    std::vector<std::uint64_t> out(2 * in.size());
    for (std::size_t k = 0; k < in.size(); ++k) {
        out[2 * k] = mu_half(static_cast<std::uint32_t>(in[k]));
        out[2 * k + 1] = mu_half(static_cast<std::uint32_t>(in[k] >> 32));
    }
    return Word::from_blocks(std::move(out), 2 * w.size());
}

Word mu_pow(const Word& w, unsigned s) {
    if (w.empty()) return w;
    if (s >= 64 || (w.size() > (std::numeric_limits<Word::size_type>::max() >> s)))
        throw size_error("mu_pow: 2^" + std::to_string(s) + " * " + std::to_string(w.size()) +
                         " letters overflows the length type");

    if (s < 6) {
        Word out = w;
        for (unsigned i = 0; i < s; ++i) out = mu(out);
        return out;
    }

    // mu^s(0) by doubling: mu^k(0) = mu^{k-1}(0) . complement(mu^{k-1}(0)).
    Word image0 = Word::from_string("0");
    for (unsigned i = 0; i < s; ++i) image0.append(complement(image0));
    if (w.size() == 1) return w[0] ? complement(image0) : image0;

    // 2^s >= 64, so every image starts on a block boundary.
    const Word image1 = complement(image0);
    const auto b0 = image0.blocks();
    const auto b1 = image1.blocks();
    std::vector<std::uint64_t> out;
    out.reserve(b0.size() * w.size());
    for (Word::size_type i = 0; i < w.size(); ++i) {
        const auto& src = w[i] ? b1 : b0;
        out.insert(out.end(), src.begin(), src.end());
    }
    return Word::from_blocks(std::move(out), w.size() << s);
}

Word delete_prefix(const Word& w, Word::size_type t) {
    if (t > w.size())
        throw precondition_error("delete_prefix: t = " + std::to_string(t) + " exceeds word length " +
                                 std::to_string(w.size()));
    return w.subword(t, w.size() - t);
}

Word zeros(Word::size_type r) { return Word(r, false); }

Word complement(const Word& w) {
    std::vector<std::uint64_t> out(w.blocks().begin(), w.blocks().end());
    for (auto& b : out) b = ~b;
    return Word::from_blocks(std::move(out), w.size());
}

std::vector<Word::size_type> occurrences_00(const Word& w) {
    std::vector<Word::size_type> out;
    for (Word::size_type t = 0; t + 1 < w.size(); ++t)
        if (!w[t] && !w[t + 1]) out.push_back(t);
    return out;
}

bool in_language_L(const Word& w) {
    for (Word::size_type d = 0; d < 2; ++d) {
        bool ok = true;
        for (Word::size_type i = d; i + 1 < w.size(); i += 2) {
            if (w[i] == w[i + 1]) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace critexp
