#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gwcut/weights.hpp"

namespace gwcut {

// One anchor token plus the ordered context tokens counted in its windows.
struct TargetList {
    std::string anchor = "amodiaquine";
    std::vector<std::string> contexts = {"human", "side-effect"};
};

// Lowercase, nonempty, unique tokens; anchor not among the contexts.
void validate_targets(const TargetList& targets);

// Phrase lists replaced by the canonical tokens "side-effect" and "human"
// during preprocessing. Phrases are stored normalized (lowercased,
// single-space-joined tokens); the two sets must be disjoint.
struct Lexicons {
    std::vector<std::string> side_effect_terms;
    std::vector<std::string> human_terms;

    // Loads one phrase per line; '#' starts a comment, blank lines are
    // skipped. An empty path yields an empty list.
    static Lexicons from_files(const std::filesystem::path& side_effects,
                               const std::filesystem::path& humans);
};

void validate_lexicons(const Lexicons& lex);

inline constexpr std::string_view kSideEffectToken = "side-effect";
inline constexpr std::string_view kHumanToken = "human";

// Lowercases and splits on anything that is not alphanumeric; hyphens
// between word characters are kept so canonical tokens survive a re-run.
std::vector<std::string> tokenize(std::string_view text);

// tokenize + longest-match left-to-right lexicon phrase replacement.
std::vector<std::string> preprocess(std::string_view text, const Lexicons& lex);

struct ArticleVector {
    std::string article_id;
    std::vector<double> probs; // aligned with TargetList.contexts, each in [0, 1]
    std::size_t anchor_occurrences = 0;
};

// probs[c] = fraction of anchor occurrences whose window (window/2 tokens on
// each side, anchor excluded, truncated at the boundaries) contains context
// c at least once. The window must be even and >= 2.
ArticleVector vectorize_article(std::span<const std::string> tokens, const TargetList& targets,
                                std::size_t window);

struct Document {
    std::string id;
    std::string text;
};

struct CorpusVectors {
    PointSet points; // dimension = number of context tokens
    std::vector<ArticleVector> vectors;
};

CorpusVectors vectorize_corpus(const std::vector<Document>& documents, const TargetList& targets,
                               const Lexicons& lex, std::size_t window);

// Directory of .txt files, sorted by filename; the id is the filename stem.
std::vector<Document> read_corpus_dir(const std::filesystem::path& dir);

// JSON-lines file of {"id": ..., "text": ...} objects.
std::vector<Document> read_corpus_jsonl(const std::filesystem::path& file);

} // namespace gwcut
