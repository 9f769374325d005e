#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corpora {

enum class UnicodeForm {
    kNone,
    kCanonicalComposed,  // NFC
};

enum class ZwnjPolicy {
    kKeepAsLetter,   // U+200C stays put (word-internal in Persian morphology)
    kTreatAsSpace,
    kDrop,
};

/// Deterministic normalization pipeline shared by every metric and LM
/// operation. Transform order is fixed: unicode form -> character maps ->
/// diacritic strip -> ZWNJ policy -> whitespace collapse/trim.
/// normalize() is idempotent for every configuration.
struct NormalizationConfig {
    UnicodeForm unicode_form = UnicodeForm::kCanonicalComposed;
    bool map_arabic_to_persian = true;   // yeh U+064A -> U+06CC, kaf U+0643 -> U+06A9
    bool strip_diacritics = true;        // Arabic harakat U+064B..U+065F and U+0670
    ZwnjPolicy zwnj_policy = ZwnjPolicy::kKeepAsLetter;
    bool collapse_whitespace = true;
    bool lowercase_latin = true;         // ASCII A-Z only

    static NormalizationConfig all_off() {
        return {UnicodeForm::kNone, false, false, ZwnjPolicy::kKeepAsLetter, false, false};
    }
};

/// Ordered word tokens; no token contains a whitespace codepoint.
using TokenSequence = std::vector<std::string>;

/// Apply the configured transforms. Throws DecodeError on invalid UTF-8.
std::string normalize(std::string_view text, const NormalizationConfig& config);

/// Split normalized text on whitespace runs. Empty input -> empty sequence.
TokenSequence tokenize_words(std::string_view text);

/// Unicode scalar values in order; whitespace dropped iff !include_spaces.
std::vector<char32_t> tokenize_chars(std::string_view text, bool include_spaces);

/// Canonical composition (NFC) over scalar values. Exposed for testing
/// against independently produced normalization fixtures.
std::u32string nfc(std::u32string_view codepoints);

/// The Arabic->Persian codepoint substitutions applied by normalize().
const std::vector<std::pair<char32_t, char32_t>>& arabic_to_persian_map();

}  // namespace corpora
