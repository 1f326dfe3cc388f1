#pragma once

#include "critexp/word.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace critexp::io {

enum class WordFormat { text, packed };

/// One line of '0'/'1', optional trailing newline.
std::string encode_text(const Word& w);
Word decode_text(std::string_view bytes);

/// 8-byte little-endian bit count, then the letters MSB-first per byte with
/// a zero-padded final byte.
std::string encode_packed(const Word& w);
Word decode_packed(std::string_view bytes);

/// Tries the text format first, then packed. Throws format_error if neither parses.
Word decode_auto(std::string_view bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

Word read_word(const std::filesystem::path& path);
Word read_word(const std::filesystem::path& path, WordFormat format);
void write_word(const std::filesystem::path& path, const Word& w, WordFormat format);

} // namespace critexp::io
