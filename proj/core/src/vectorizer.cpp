#include "gwcut/vectorizer.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "gwcut/errors.hpp"

namespace gwcut {

namespace {

std::string normalize_phrase(std::string_view phrase) {
    const auto tokens = tokenize(phrase);
    std::string joined;
    for (const auto& t : tokens) {
        if (!joined.empty()) joined += ' ';
        joined += t;
    }
    return joined;
}

std::vector<std::string> load_phrase_file(const std::filesystem::path& path) {
    std::vector<std::string> phrases;
    if (path.empty()) return phrases;
    std::ifstream in(path);
    if (!in) throw input_error("cannot open lexicon file: " + path.string());
    std::string line;
    std::set<std::string> seen;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        const std::string normalized = normalize_phrase(line);
        if (normalized.empty()) continue;
        if (seen.insert(normalized).second) phrases.push_back(normalized);
    }
    return phrases;
}

bool is_normalized_token(const std::string& token) {
    if (token.empty()) return false;
    const auto round_trip = tokenize(token);
    return round_trip.size() == 1 && round_trip[0] == token;
}

struct ReplacementTable {
    // (phrase tokens, canonical token), scanned for the longest match.
    std::vector<std::pair<std::vector<std::string>, std::string>> entries;
    std::size_t max_len = 0;

    explicit ReplacementTable(const Lexicons& lex) {
        const auto add = [&](const std::vector<std::string>& phrases, std::string_view canonical) {
            for (const auto& p : phrases) {
                auto toks = tokenize(p);
                if (toks.empty()) continue;
                max_len = std::max(max_len, toks.size());
                entries.emplace_back(std::move(toks), std::string(canonical));
            }
        };
        add(lex.side_effect_terms, kSideEffectToken);
        add(lex.human_terms, kHumanToken);
    }

    // Length of the longest phrase matching at position i, with its canonical
    // token; 0 when nothing matches.
    std::size_t match(const std::vector<std::string>& tokens, std::size_t i,
                      const std::string** canonical) const {
        std::size_t best = 0;
        for (const auto& [phrase, token] : entries) {
            if (phrase.size() <= best || i + phrase.size() > tokens.size()) continue;
            if (std::equal(phrase.begin(), phrase.end(), tokens.begin() + static_cast<std::ptrdiff_t>(i))) {
                best = phrase.size();
                *canonical = &token;
            }
        }
        return best;
    }
};

} // namespace

void validate_targets(const TargetList& targets) {
    if (!is_normalized_token(targets.anchor))
        throw input_error("targets: anchor '" + targets.anchor +
                          "' must be a single lowercase token");
    if (targets.contexts.empty()) throw input_error("targets: need at least one context token");
    std::set<std::string> seen;
    for (const auto& c : targets.contexts) {
        if (!is_normalized_token(c))
            throw input_error("targets: context '" + c + "' must be a single lowercase token");
        if (c == targets.anchor)
            throw input_error("targets: anchor '" + c + "' may not appear among the contexts");
        if (!seen.insert(c).second) throw input_error("targets: duplicate context '" + c + "'");
    }
}

Lexicons Lexicons::from_files(const std::filesystem::path& side_effects,
                              const std::filesystem::path& humans) {
    Lexicons lex;
    lex.side_effect_terms = load_phrase_file(side_effects);
    lex.human_terms = load_phrase_file(humans);
    validate_lexicons(lex);
    return lex;
}

void validate_lexicons(const Lexicons& lex) {
    std::set<std::string> side(lex.side_effect_terms.begin(), lex.side_effect_terms.end());
    for (const auto& p : lex.human_terms)
        if (side.contains(p))
            throw input_error("lexicons: phrase '" + p + "' appears in both lists");
    for (const auto& p : lex.side_effect_terms)
        if (p != normalize_phrase(p))
            throw input_error("lexicons: phrase '" + p + "' is not normalized");
    for (const auto& p : lex.human_terms)
        if (p != normalize_phrase(p))
            throw input_error("lexicons: phrase '" + p + "' is not normalized");
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string cur;
    const auto is_word = [](unsigned char c) { return std::isalnum(c) != 0 || c >= 0x80; };
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (is_word(c)) {
            cur += static_cast<char>(std::tolower(c));
        } else if (c == '-' && !cur.empty() && i + 1 < text.size() &&
                   is_word(static_cast<unsigned char>(text[i + 1]))) {
            cur += '-';
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) tokens.push_back(std::move(cur));
    return tokens;
}

std::vector<std::string> preprocess(std::string_view text, const Lexicons& lex) {
    const std::vector<std::string> tokens = tokenize(text);
    const ReplacementTable table(lex);
    if (table.entries.empty()) return tokens;

    std::vector<std::string> out;
    out.reserve(tokens.size());
    std::size_t i = 0;
    while (i < tokens.size()) {
        const std::string* canonical = nullptr;
        const std::size_t len = table.match(tokens, i, &canonical);
        if (len > 0) {
            out.push_back(*canonical);
            i += len;
        } else {
            out.push_back(tokens[i]);
            ++i;
        }
    }
    return out;
}

ArticleVector vectorize_article(std::span<const std::string> tokens, const TargetList& targets,
                                std::size_t window) {
    if (window < 2 || window % 2 != 0)
        throw input_error("vectorize_article: window must be even and >= 2, got " +
                          std::to_string(window));
    const std::size_t half = window / 2;
    const std::size_t k = targets.contexts.size();

    ArticleVector out;
    out.probs.assign(k, 0.0);
    std::vector<std::size_t> hits(k, 0);

    for (std::size_t p = 0; p < tokens.size(); ++p) {
        if (tokens[p] != targets.anchor) continue;
        ++out.anchor_occurrences;
        const std::size_t lo = p >= half ? p - half : 0;
        const std::size_t hi = std::min(tokens.size() - 1, p + half);
        for (std::size_t c = 0; c < k; ++c) {
            for (std::size_t q = lo; q <= hi; ++q) {
                if (q == p) continue;
                if (tokens[q] == targets.contexts[c]) {
                    ++hits[c];
                    break;
                }
            }
        }
    }

    if (out.anchor_occurrences > 0)
        for (std::size_t c = 0; c < k; ++c)
            out.probs[c] = static_cast<double>(hits[c]) / static_cast<double>(out.anchor_occurrences);
    return out;
}

CorpusVectors vectorize_corpus(const std::vector<Document>& documents, const TargetList& targets,
                               const Lexicons& lex, std::size_t window) {
    if (documents.empty()) throw input_error("vectorize_corpus: empty document list");
    validate_targets(targets);
    validate_lexicons(lex);

    std::unordered_set<std::string> ids;
    for (const auto& doc : documents)
        if (!ids.insert(doc.id).second)
            throw input_error("vectorize_corpus: duplicate article id '" + doc.id + "'");

    CorpusVectors out;
    out.points.dim = targets.contexts.size();
    out.points.points.reserve(documents.size());
    out.vectors.reserve(documents.size());
    for (const auto& doc : documents) {
        const auto tokens = preprocess(doc.text, lex);
        ArticleVector vec = vectorize_article(tokens, targets, window);
        vec.article_id = doc.id;
        out.points.points.push_back(vec.probs);
        out.vectors.push_back(std::move(vec));
    }
    return out;
}

std::vector<Document> read_corpus_dir(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir))
        throw input_error("corpus path is not a directory: " + dir.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw input_error("no .txt files in corpus directory: " + dir.string());

    std::vector<Document> docs;
    docs.reserve(files.size());
    for (const auto& f : files) {
        std::ifstream in(f);
        if (!in) throw input_error("cannot open corpus file: " + f.string());
        std::ostringstream body;
        body << in.rdbuf();
        docs.push_back({f.stem().string(), body.str()});
    }
    return docs;
}

std::vector<Document> read_corpus_jsonl(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw input_error("cannot open corpus file: " + file.string());
    std::vector<Document> docs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw input_error(file.string() + ":" + std::to_string(lineno) +
                              ": invalid JSON: " + e.what());
        }
        if (!j.is_object() || !j.contains("id") || !j.contains("text") ||
            !j["id"].is_string() || !j["text"].is_string())
            throw input_error(file.string() + ":" + std::to_string(lineno) +
                              ": expected an object with string fields 'id' and 'text'");
        docs.push_back({j["id"].get<std::string>(), j["text"].get<std::string>()});
    }
    if (docs.empty()) throw input_error("corpus file has no documents: " + file.string());
    return docs;
}

} // namespace gwcut
