#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "advqa/distractor.hpp"

namespace advqa {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Half-open [start, end) in code points into the paragraph context.
struct SentenceSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const SentenceSpan&) const = default;
};

struct Answer {
  std::string text;
  std::size_t answer_start = 0;  // code-point offset into context

  bool operator==(const Answer&) const = default;
};

struct AdversarialMeta {
  std::string variant_of;  // id of the base question
  int variant_index = 1;   // k in "<base-id>-adv<k>"
  DistractorRecord distractor;

  bool operator==(const AdversarialMeta&) const = default;
};

struct QA {
  std::string id;
  std::string question;
  std::vector<Answer> answers;
  std::optional<AdversarialMeta> meta;  // empty for base questions

  bool operator==(const QA&) const = default;
};

struct Paragraph {
  std::string context;
  std::vector<SentenceSpan> sentences;
  std::vector<QA> qas;

  bool operator==(const Paragraph&) const = default;
};

struct Article {
  std::string title;
  std::vector<Paragraph> paragraphs;

  bool operator==(const Article&) const = default;
};

struct Corpus {
  std::string version = "1.1";
  std::vector<Article> articles;

  bool operator==(const Corpus&) const = default;

  std::size_t paragraph_count() const;
  std::size_t qa_count() const;
};

struct ValidationFinding {
  std::string qa_id;  // empty when the finding is paragraph-level
  std::string message;

  bool operator==(const ValidationFinding&) const = default;
};

struct ValidationReport {
  std::vector<ValidationFinding> findings;

  bool ok() const { return findings.empty(); }
  // One JSON object per finding, newline separated.
  std::string to_json_lines() const;
};

// Deterministic rule-based segmentation: split after '.', '!' or '?' followed
// by whitespace and an uppercase letter or digit; splits after known
// abbreviations (Dr., U.S., e.g., single initials, ...) are suppressed; a
// final unterminated tail is its own sentence. Spans cover every
// non-whitespace character.
std::vector<SentenceSpan> segment_sentences(std::string_view context);

struct SentenceIndex {
  std::size_t x = 0;  // 1-based from the front
  std::size_t y = 0;  // from the back, y = n - x
};

// Locates the sentence containing answer_start. Throws ValidationError if the
// offset lies outside the context.
SentenceIndex answer_sentence_index(const Paragraph& paragraph, const Answer& answer);

// Parses SQuAD v1.1-shaped JSON. Computes sentence spans and verifies every
// answer offset; throws ParseError / ValidationError.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_from_string(std::string_view json_text);
Corpus load_corpus_file(const std::string& path);

// Canonical field ordering; load_corpus(save_corpus(c)) == c.
void save_corpus(const Corpus& corpus, std::ostream& out);
std::string corpus_to_json(const Corpus& corpus);

ValidationReport validate(const Corpus& corpus);

}  // namespace advqa
