#include "critexp/word_io.hpp"

#include "critexp/errors.hpp"

#include <fstream>
#include <iterator>

namespace critexp::io {

std::string encode_text(const Word& w) { return w.to_string() + "\n"; }

Word decode_text(std::string_view bytes) {
    if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
    return Word::from_string(bytes);
}

std::string encode_packed(const Word& w) {
    const std::uint64_t n = w.size();
    std::string out(8 + (n + 7) / 8, '\0');
    for (int k = 0; k < 8; ++k) out[k] = static_cast<char>((n >> (8 * k)) & 0xFF);
    for (std::uint64_t i = 0; i < n; ++i)
        if (w[i]) out[8 + i / 8] = static_cast<char>(static_cast<unsigned char>(out[8 + i / 8]) | (0x80u >> (i % 8)));
    return out;
}

Word decode_packed(std::string_view bytes) {
    if (bytes.size() < 8) throw format_error("packed word: missing 8-byte length header");
    std::uint64_t n = 0;
    for (int k = 0; k < 8; ++k) n |= std::uint64_t{static_cast<unsigned char>(bytes[k])} << (8 * k);
    const std::uint64_t payload = bytes.size() - 8;
    if (n / 8 + (n % 8 != 0) != payload)
        throw format_error("packed word: header announces " + std::to_string(n) + " bits but payload has " +
                           std::to_string(payload) + " bytes");
    Word w;
    w.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i)
        w.push_back((static_cast<unsigned char>(bytes[8 + i / 8]) >> (7 - i % 8)) & 1u);
    if (n % 8 != 0) {
        const unsigned char last = static_cast<unsigned char>(bytes.back());
        if ((last & (0xFFu >> (n % 8))) != 0) throw format_error("packed word: nonzero padding bits");
    }
    return w;
}

Word decode_auto(std::string_view bytes) {
    try {
        return decode_text(bytes);
    } catch (const format_error&) {
    }
    try {
        return decode_packed(bytes);
    } catch (const format_error&) {
    }
    throw format_error("input is neither a 0/1 text word nor a packed word");
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw format_error("cannot open '" + path.string() + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Word read_word(const std::filesystem::path& path) { return decode_auto(read_file(path)); }

Word read_word(const std::filesystem::path& path, WordFormat format) {
    const std::string bytes = read_file(path);
    return format == WordFormat::text ? decode_text(bytes) : decode_packed(bytes);
}

void write_word(const std::filesystem::path& path, const Word& w, WordFormat format) {
    write_file(path, format == WordFormat::text ? encode_text(w) : encode_packed(w));
}

} // namespace critexp::io
