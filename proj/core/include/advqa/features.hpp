#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "advqa/corpus.hpp"
#include "advqa/lexicon.hpp"

namespace advqa {

inline constexpr const char* kTokenizerVersion = "ws-punct-1";

struct Token {
  std::string text;
  std::size_t start = 0;  // code-point offset into the source text

  bool operator==(const Token&) const = default;
};

// Whitespace tokenization with leading/trailing punctuation split into
// single-character tokens. Dotted abbreviations ("U.S.") keep their final
// period.
std::vector<Token> tokenize(std::string_view text);

// Per-token 0/1 indicators: does the other side of the question<->context
// pair contain a synonym / an antonym of this token? Stopwords and
// punctuation never receive bits.
struct QAFeatures {
  std::vector<int> q_syn, q_ant;  // aligned with tokenize(question)
  std::vector<int> c_syn, c_ant;  // aligned with tokenize(context)

  bool operator==(const QAFeatures&) const = default;
};

struct FeatureAnnotations {
  std::string tokenizer_version = kTokenizerVersion;
  std::map<std::string, QAFeatures> by_qa;  // keyed by qa id
};

FeatureAnnotations annotate_semantic_features(const Corpus& corpus, const Lexicon& lex);

// Sidecar JSON: {"tokenizer_version": ..., "features": {qa_id: {...}}}.
std::string feature_annotations_to_json(const FeatureAnnotations& ann);

}  // namespace advqa
