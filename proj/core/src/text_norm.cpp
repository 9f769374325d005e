#include "corpora/text_norm.hpp"

#include <algorithm>

#include "corpora/utf8.hpp"

namespace corpora {

namespace {

#include "unicode_data.inc"

constexpr char32_t kZwnj = 0x200C;

// Hangul syllable composition constants (UAX #15).
constexpr char32_t kHangulSBase = 0xAC00;
constexpr char32_t kHangulLBase = 0x1100;
constexpr char32_t kHangulVBase = 0x1161;
constexpr char32_t kHangulTBase = 0x11A7;
constexpr int kHangulLCount = 19;
constexpr int kHangulVCount = 21;
constexpr int kHangulTCount = 28;
constexpr int kHangulNCount = kHangulVCount * kHangulTCount;
constexpr int kHangulSCount = kHangulLCount * kHangulNCount;

int combining_class(char32_t cp) {
    const auto* begin = std::begin(kCombiningClasses);
    const auto* end = std::end(kCombiningClasses);
    const auto* it = std::lower_bound(begin, end, cp,
        [](const CccEntry& e, char32_t v) { return e.cp < v; });
    return (it != end && it->cp == cp) ? it->ccc : 0;
}

const DecompEntry* find_decomposition(char32_t cp) {
    const auto* begin = std::begin(kCanonicalDecompositions);
    const auto* end = std::end(kCanonicalDecompositions);
    const auto* it = std::lower_bound(begin, end, cp,
        [](const DecompEntry& e, char32_t v) { return e.cp < v; });
    return (it != end && it->cp == cp) ? it : nullptr;
}

char32_t compose_pair(char32_t first, char32_t second) {
    // Hangul LV / LVT composition.
    if (first >= kHangulLBase && first < kHangulLBase + kHangulLCount &&
        second >= kHangulVBase && second < kHangulVBase + kHangulVCount) {
        const int l = static_cast<int>(first - kHangulLBase);
        const int v = static_cast<int>(second - kHangulVBase);
        return kHangulSBase + static_cast<char32_t>((l * kHangulVCount + v) * kHangulTCount);
    }
    if (first >= kHangulSBase && first < kHangulSBase + kHangulSCount &&
        (first - kHangulSBase) % kHangulTCount == 0 &&
        second > kHangulTBase && second < kHangulTBase + kHangulTCount) {
        return first + (second - kHangulTBase);
    }
    const auto* begin = std::begin(kCompositionPairs);
    const auto* end = std::end(kCompositionPairs);
    const auto* it = std::lower_bound(begin, end, std::pair{first, second},
        [](const CompEntry& e, const std::pair<char32_t, char32_t>& v) {
            return e.first != v.first ? e.first < v.first : e.second < v.second;
        });
    return (it != end && it->first == first && it->second == second) ? it->composed : 0;
}

void decompose_canonical(char32_t cp, std::u32string& out) {
    if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
        const int index = static_cast<int>(cp - kHangulSBase);
        out.push_back(kHangulLBase + static_cast<char32_t>(index / kHangulNCount));
        out.push_back(kHangulVBase + static_cast<char32_t>((index % kHangulNCount) / kHangulTCount));
        const int t = index % kHangulTCount;
        if (t != 0) out.push_back(kHangulTBase + static_cast<char32_t>(t));
        return;
    }
    if (const DecompEntry* d = find_decomposition(cp)) {
        decompose_canonical(d->first, out);
        if (d->second != 0) decompose_canonical(d->second, out);
        return;
    }
    out.push_back(cp);
}

// Stable sort of combining marks by combining class within starter runs.
void canonical_order(std::u32string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        const int ccc = combining_class(s[i]);
        if (ccc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            const int prev = combining_class(s[j - 1]);
            if (prev == 0 || prev <= ccc) break;
            std::swap(s[j - 1], s[j]);
            --j;
        }
    }
}

bool is_harakat(char32_t cp) {
    return (cp >= 0x064B && cp <= 0x065F) || cp == 0x0670;
}

}  // namespace

std::u32string nfc(std::u32string_view codepoints) {
    std::u32string decomposed;
    decomposed.reserve(codepoints.size());
    for (char32_t cp : codepoints) decompose_canonical(cp, decomposed);
    canonical_order(decomposed);

    // Canonical composition (UAX #15). A character may combine with the
    // last starter unless a kept character of equal or higher combining
    // class sits in between; last_ccc == -1 marks "nothing since starter".
    std::u32string out;
    out.reserve(decomposed.size());
    std::ptrdiff_t last_starter = -1;
    int last_ccc = -1;
    for (char32_t cp : decomposed) {
        const int ccc = combining_class(cp);
        if (last_starter >= 0 && last_ccc < ccc) {
            if (char32_t composed = compose_pair(out[static_cast<std::size_t>(last_starter)], cp)) {
                out[static_cast<std::size_t>(last_starter)] = composed;
                continue;
            }
        }
        if (ccc == 0) {
            last_starter = static_cast<std::ptrdiff_t>(out.size());
            last_ccc = -1;
        } else {
            last_ccc = ccc;
        }
        out.push_back(cp);
    }
    return out;
}

const std::vector<std::pair<char32_t, char32_t>>& arabic_to_persian_map() {
    static const std::vector<std::pair<char32_t, char32_t>> kMap = {
        {0x064A, 0x06CC},  // ARABIC LETTER YEH -> FARSI YEH
        {0x0643, 0x06A9},  // ARABIC LETTER KAF -> KEHEH
    };
    return kMap;
}

std::string normalize(std::string_view text, const NormalizationConfig& config) {
    std::u32string cps = decode_utf8(text);

    if (config.unicode_form == UnicodeForm::kCanonicalComposed) {
        cps = nfc(cps);
    }

    if (config.map_arabic_to_persian || config.lowercase_latin) {
        for (char32_t& cp : cps) {
            if (config.map_arabic_to_persian) {
                for (const auto& [from, to] : arabic_to_persian_map()) {
                    if (cp == from) { cp = to; break; }
                }
            }
            if (config.lowercase_latin && cp >= U'A' && cp <= U'Z') {
                cp += U'a' - U'A';
            }
        }
    }

    if (config.strip_diacritics) {
        std::u32string kept;
        kept.reserve(cps.size());
        for (char32_t cp : cps) {
            if (!is_harakat(cp)) kept.push_back(cp);
        }
        cps = std::move(kept);
    }

    if (config.zwnj_policy != ZwnjPolicy::kKeepAsLetter) {
        std::u32string kept;
        kept.reserve(cps.size());
        for (char32_t cp : cps) {
            if (cp == kZwnj) {
                if (config.zwnj_policy == ZwnjPolicy::kTreatAsSpace) kept.push_back(U' ');
            } else {
                kept.push_back(cp);
            }
        }
        cps = std::move(kept);
    }

    if (config.collapse_whitespace) {
        std::u32string kept;
        kept.reserve(cps.size());
        bool pending_space = false;
        for (char32_t cp : cps) {
            if (is_unicode_space(cp)) {
                pending_space = !kept.empty();
            } else {
                if (pending_space) kept.push_back(U' ');
                pending_space = false;
                kept.push_back(cp);
            }
        }
        cps = std::move(kept);
    }

    return encode_utf8(cps);
}

TokenSequence tokenize_words(std::string_view text) {
    TokenSequence tokens;
    const std::u32string cps = decode_utf8(text);
    std::u32string current;
    for (char32_t cp : cps) {
        if (is_unicode_space(cp)) {
            if (!current.empty()) {
                tokens.push_back(encode_utf8(current));
                current.clear();
            }
        } else {
            current.push_back(cp);
        }
    }
    if (!current.empty()) tokens.push_back(encode_utf8(current));
    return tokens;
}

std::vector<char32_t> tokenize_chars(std::string_view text, bool include_spaces) {
    const std::u32string cps = decode_utf8(text);
    std::vector<char32_t> out;
    out.reserve(cps.size());
    for (char32_t cp : cps) {
        if (!include_spaces && is_unicode_space(cp)) continue;
        out.push_back(cp);
    }
    return out;
}

}  // namespace corpora
