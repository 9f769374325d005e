#include "corpora/edit_metrics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <thread>

#include "corpora/error.hpp"

namespace corpora {

namespace {

// Shared DP + backtrace over any equality-comparable sequence.
template <typename Seq>
EditStats align_generic(const Seq& ref, const Seq& hyp) {
    const std::size_t n = ref.size();
    const std::size_t m = hyp.size();
    std::vector<std::uint32_t> cost((n + 1) * (m + 1));
    auto at = [m](std::size_t i, std::size_t j) { return i * (m + 1) + j; };

    for (std::size_t i = 0; i <= n; ++i) cost[at(i, 0)] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 0; j <= m; ++j) cost[at(0, j)] = static_cast<std::uint32_t>(j);
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            const std::uint32_t diag =
                cost[at(i - 1, j - 1)] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
            const std::uint32_t del = cost[at(i - 1, j)] + 1;
            const std::uint32_t ins = cost[at(i, j - 1)] + 1;
            cost[at(i, j)] = std::min({diag, del, ins});
        }
    }

    // Backtrace, preferring diagonal, then deletion, then insertion.
    EditStats stats;
    stats.ref_len = n;
    std::size_t i = n, j = m;
    while (i > 0 || j > 0) {
        if (i > 0 && j > 0) {
            const bool match = ref[i - 1] == hyp[j - 1];
            const std::uint32_t diag = cost[at(i - 1, j - 1)] + (match ? 0 : 1);
            if (diag == cost[at(i, j)]) {
                if (match) ++stats.hits; else ++stats.substitutions;
                --i; --j;
                continue;
            }
        }
        if (i > 0 && cost[at(i - 1, j)] + 1 == cost[at(i, j)]) {
            ++stats.deletions;
            --i;
            continue;
        }
        ++stats.insertions;
        --j;
    }
    return stats;
}

}  // namespace

EditStats align(const TokenSequence& ref, const TokenSequence& hyp) {
    return align_generic(ref, hyp);
}

EditStats align_chars(const std::vector<char32_t>& ref, const std::vector<char32_t>& hyp) {
    return align_generic(ref, hyp);
}

Ratio wer(std::string_view ref, std::string_view hyp, const NormalizationConfig& config) {
    const TokenSequence ref_tokens = tokenize_words(normalize(ref, config));
    if (ref_tokens.empty()) {
        throw MetricError("WER undefined: reference is empty after normalization");
    }
    const TokenSequence hyp_tokens = tokenize_words(normalize(hyp, config));
    const EditStats stats = align(ref_tokens, hyp_tokens);
    return Ratio(stats.errors(), stats.ref_len);
}

Ratio cer(std::string_view ref, std::string_view hyp, const NormalizationConfig& config,
          bool include_spaces) {
    const auto ref_chars = tokenize_chars(normalize(ref, config), include_spaces);
    if (ref_chars.empty()) {
        throw MetricError("CER undefined: reference is empty after normalization");
    }
    const auto hyp_chars = tokenize_chars(normalize(hyp, config), include_spaces);
    const EditStats stats = align_chars(ref_chars, hyp_chars);
    return Ratio(stats.errors(), stats.ref_len);
}

std::vector<std::vector<Ratio>> pairwise_wer_matrix(const std::vector<std::string>& refs,
                                                    const std::vector<std::string>& hyps,
                                                    const NormalizationConfig& config,
                                                    unsigned jobs) {
    // Tokenize once up front; rows then share the token views.
    std::vector<TokenSequence> ref_tokens(refs.size());
    std::vector<TokenSequence> hyp_tokens(hyps.size());
    for (std::size_t i = 0; i < refs.size(); ++i) {
        ref_tokens[i] = tokenize_words(normalize(refs[i], config));
        if (ref_tokens[i].empty()) {
            throw MetricError("WER undefined: reference row " + std::to_string(i) +
                              " is empty after normalization");
        }
    }
    for (std::size_t j = 0; j < hyps.size(); ++j) {
        hyp_tokens[j] = tokenize_words(normalize(hyps[j], config));
    }

    std::vector<std::vector<Ratio>> matrix(refs.size(), std::vector<Ratio>(hyps.size()));
    auto fill_rows = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < refs.size(); i += stride) {
            for (std::size_t j = 0; j < hyps.size(); ++j) {
                const EditStats stats = align(ref_tokens[i], hyp_tokens[j]);
                matrix[i][j] = Ratio(stats.errors(), stats.ref_len);
            }
        }
    };

    if (jobs <= 1 || refs.size() < 2) {
        fill_rows(0, 1);
    } else {
        const unsigned workers = std::min<unsigned>(jobs, static_cast<unsigned>(refs.size()));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(fill_rows, w, workers);
        }
        for (auto& t : pool) t.join();
    }
    return matrix;
}

Ratio weighted_accuracy(const LabelVector& truth, const LabelVector& pred) {
    if (truth.empty()) throw InputError("weighted accuracy: empty label vector");
    if (truth.size() != pred.size()) {
        throw InputError("weighted accuracy: length mismatch (" + std::to_string(truth.size()) +
                         " vs " + std::to_string(pred.size()) + ")");
    }
    std::uint64_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] == pred[i]) ++hits;
    }
    return Ratio(hits, truth.size());
}

double unweighted_accuracy(const LabelVector& truth, const LabelVector& pred) {
    if (truth.empty()) throw InputError("unweighted accuracy: empty label vector");
    if (truth.size() != pred.size()) {
        throw InputError("unweighted accuracy: length mismatch (" + std::to_string(truth.size()) +
                         " vs " + std::to_string(pred.size()) + ")");
    }
    // std::map keeps classes in name order, fixing the summation order.
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_class;  // hits, total
    for (std::size_t i = 0; i < truth.size(); ++i) {
        auto& [class_hits, class_total] = per_class[truth[i]];
        ++class_total;
        if (truth[i] == pred[i]) ++class_hits;
    }
    double recall_sum = 0.0;
    for (const auto& [name, counts] : per_class) {
        recall_sum += static_cast<double>(counts.first) / static_cast<double>(counts.second);
    }
    return recall_sum / static_cast<double>(per_class.size());
}

}  // namespace corpora
