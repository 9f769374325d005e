#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "corpora/ratio.hpp"
#include "corpora/text_norm.hpp"

namespace corpora {

/// Components of a minimal-cost edit alignment.
/// Invariant: substitutions + deletions + hits == ref_len.
struct EditStats {
    std::uint64_t substitutions = 0;
    std::uint64_t insertions = 0;
    std::uint64_t deletions = 0;
    std::uint64_t hits = 0;
    std::uint64_t ref_len = 0;

    std::uint64_t errors() const { return substitutions + insertions + deletions; }

    friend bool operator==(const EditStats&, const EditStats&) = default;
};

/// Ordered class identifiers for the accuracy metrics.
using LabelVector = std::vector<std::string>;

/// Minimal-cost Levenshtein alignment with unit costs. Ties in the
/// backtrace resolve deterministically: match/substitution, then deletion,
/// then insertion.
EditStats align(const TokenSequence& ref, const TokenSequence& hyp);

/// Same alignment over codepoint sequences (CER units).
EditStats align_chars(const std::vector<char32_t>& ref, const std::vector<char32_t>& hyp);

/// Word error rate: (S+I+D)/ref_len over word tokens after normalization.
/// May exceed 1. Throws MetricError when the reference normalizes to
/// zero tokens.
Ratio wer(std::string_view ref, std::string_view hyp, const NormalizationConfig& config);

/// Character error rate over codepoint units; include_spaces selects
/// whether whitespace codepoints count as characters.
Ratio cer(std::string_view ref, std::string_view hyp, const NormalizationConfig& config,
          bool include_spaces = true);

/// Dense WER matrix, entry (i,j) == wer(refs[i], hyps[j]). Rows are
/// distributed across `jobs` workers; exact rational entries make the
/// result identical at any parallelism degree.
std::vector<std::vector<Ratio>> pairwise_wer_matrix(const std::vector<std::string>& refs,
                                                    const std::vector<std::string>& hyps,
                                                    const NormalizationConfig& config,
                                                    unsigned jobs = 1);

/// Overall accuracy: correct / N. Throws InputError on arity mismatch or
/// empty input.
Ratio weighted_accuracy(const LabelVector& truth, const LabelVector& pred);

/// Macro-average recall over the distinct truth classes, accumulated in
/// class-name order.
double unweighted_accuracy(const LabelVector& truth, const LabelVector& pred);

}  // namespace corpora
