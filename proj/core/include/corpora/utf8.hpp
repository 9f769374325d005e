#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corpora {

/// Strict UTF-8 decode. Rejects overlong forms, surrogates and values past
/// U+10FFFF; throws DecodeError with the byte offset of the bad sequence.
std::u32string decode_utf8(std::string_view bytes);

/// Encode Unicode scalar values back to UTF-8.
std::string encode_utf8(std::u32string_view codepoints);

/// Unicode White_Space property.
bool is_unicode_space(char32_t cp);

}  // namespace corpora
