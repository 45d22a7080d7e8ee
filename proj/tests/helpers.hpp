#pragma once

#include <string>

#include "advqa/adversary.hpp"
#include "advqa/corpus.hpp"
#include "advqa/lexicon.hpp"

namespace testutil {

inline std::string data_path(const std::string& rel) {
  return std::string(ADVQA_DATA_DIR) + "/" + rel;
}

inline const advqa::Lexicon& lexicon() {
  static const advqa::Lexicon lex = advqa::Lexicon::load_file(data_path("lexicon_small.tsv"));
  return lex;
}

inline const advqa::TypeClassifier& classifier() {
  static const advqa::TypeClassifier c =
      advqa::TypeClassifier::from_files(data_path("persons.txt"), data_path("locations.txt"));
  return c;
}

inline const advqa::SynthesisRules& rules() {
  static const advqa::SynthesisRules r = advqa::SynthesisRules::load_files(
      data_path("irregular_verbs.tsv"), data_path("verbs.txt"));
  return r;
}

inline advqa::Corpus mini_corpus() {
  return advqa::load_corpus_file(data_path("fixtures/mini_squad.json"));
}

// Pool seeded with explicit answer strings.
inline advqa::FakeAnswerPool make_pool(std::initializer_list<const char*> answers) {
  advqa::FakeAnswerPool pool(classifier());
  for (const char* a : answers) pool.add(a);
  return pool;
}

// Single-article single-paragraph corpus from explicit pieces; the answer
// offset is located by substring search.
inline advqa::Paragraph make_paragraph(const std::string& context,
                                       std::initializer_list<std::pair<const char*, const char*>>
                                           id_question_pairs_with_answers = {}) {
  advqa::Paragraph p;
  p.context = context;
  p.sentences = advqa::segment_sentences(context);
  return p;
}

inline advqa::QA make_qa(const std::string& id, const std::string& question,
                         const std::string& answer_text, const std::string& context) {
  advqa::QA qa;
  qa.id = id;
  qa.question = question;
  const std::size_t pos = context.find(answer_text);
  if (pos == std::string::npos) throw std::runtime_error("answer not found in context");
  // Contexts in tests are ASCII, so byte offset == code-point offset.
  qa.answers.push_back({answer_text, pos});
  return qa;
}

}  // namespace testutil
