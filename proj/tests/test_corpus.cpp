#include <sstream>

#include "advqa/corpus.hpp"
#include "advqa/rng.hpp"
#include "advqa/utf8.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace advqa;

namespace {

const char* kMinimalJson = R"({
  "version": "1.1",
  "data": [{
    "title": "T",
    "paragraphs": [{
      "context": "Tesla moved to Prague in 1880. He studied philosophy there.",
      "qas": [{
        "id": "q1",
        "question": "What city did Tesla move to?",
        "answers": [{"text": "Prague", "answer_start": 15}]
      }]
    }]
  }]
})";

}  // namespace

TEST_CASE("load_corpus: minimal fixture has counts (1,1,1)") {
  const Corpus c = load_corpus_from_string(kMinimalJson);
  CHECK(c.articles.size() == 1);
  CHECK(c.paragraph_count() == 1);
  CHECK(c.qa_count() == 1);
  CHECK(c.articles[0].paragraphs[0].sentences.size() == 2);
}

TEST_CASE("load_corpus: malformed JSON raises a parse error with detail") {
  CHECK_THROWS_AS(load_corpus_from_string("{\"data\": ["), ParseError);
  CHECK_THROWS_AS(load_corpus_from_string("{}"), ParseError);  // missing data
}

TEST_CASE("load_corpus: off-by-one answer offset names the qa id") {
  std::string bad = kMinimalJson;
  const auto pos = bad.find("\"answer_start\": 15");
  bad.replace(pos, 18, "\"answer_start\": 16");
  try {
    load_corpus_from_string(bad);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("q1") != std::string::npos);
  }
}

TEST_CASE("save_corpus: empty corpus has the canonical shape") {
  Corpus c;
  CHECK(corpus_to_json(c) == R"({"version":"1.1","data":[]})");
}

TEST_CASE("save/load round-trip equality") {
  const Corpus a = load_corpus_from_string(kMinimalJson);
  const Corpus b = load_corpus_from_string(corpus_to_json(a));
  CHECK(a == b);

  const Corpus mini = testutil::mini_corpus();
  const Corpus mini2 = load_corpus_from_string(corpus_to_json(mini));
  CHECK(mini == mini2);
}

TEST_CASE("segment_sentences: plain two-sentence split") {
  const std::string text = "It rained. We left.";
  const auto spans = segment_sentences(text);
  REQUIRE(spans.size() == 2);
  CHECK(spans[0] == SentenceSpan{0, 10});
  CHECK(spans[1] == SentenceSpan{11, 19});
}

TEST_CASE("segment_sentences: abbreviation list suppresses splits") {
  CHECK(segment_sentences("Dr. Smith arrived.").size() == 1);
  CHECK(segment_sentences("He lived in the U.S. He worked there.").size() == 1);
  CHECK(segment_sentences("J. K. Rowling wrote it. Reviews were good.").size() == 2);
}

TEST_CASE("segment_sentences: empty and unterminated inputs") {
  CHECK(segment_sentences("").empty());
  const auto spans = segment_sentences("An unterminated tail");
  REQUIRE(spans.size() == 1);
  CHECK(spans[0] == SentenceSpan{0, 20});
}

TEST_CASE("segment_sentences: split requires whitespace plus uppercase or digit") {
  CHECK(segment_sentences("Pi is 3.14 exactly.").size() == 1);
  CHECK(segment_sentences("It happened. 1881 was the year.").size() == 2);
  CHECK(segment_sentences("He asked why? Nobody knew!").size() == 2);
  // lowercase continuation does not split
  CHECK(segment_sentences("He arrived. and left.").size() == 1);
}

TEST_CASE("segment_sentences: spans cover all non-whitespace characters") {
  Rng rng(7);
  const std::string alphabet = "ab .!?DQ.";
  for (int iter = 0; iter < 200; ++iter) {
    std::string text;
    const std::size_t len = rng.below(60);
    for (std::size_t i = 0; i < len; ++i) text += alphabet[rng.below(alphabet.size())];
    const auto spans = segment_sentences(text);
    std::vector<bool> covered(text.size(), false);
    std::size_t prev_end = 0;
    for (const auto& s : spans) {
      REQUIRE(s.start < s.end);
      REQUIRE(s.start >= prev_end);
      prev_end = s.end;
      REQUIRE(s.end <= text.size());
      // ASCII input: code points == bytes.
      CHECK(text[s.start] != ' ');
      CHECK(text[s.end - 1] != ' ');
      for (std::size_t i = s.start; i < s.end; ++i) covered[i] = true;
    }
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != ' ') CHECK(covered[i]);
    }
  }
}

TEST_CASE("answer_sentence_index: front and back indices") {
  Paragraph p;
  p.context = "One sentence here. Two sentences here. Three sentences here.";
  p.sentences = segment_sentences(p.context);
  REQUIRE(p.sentences.size() == 3);

  const auto first = answer_sentence_index(p, {"One", 0});
  CHECK(first.x == 1);
  CHECK(first.y == 2);

  const auto last = answer_sentence_index(p, {"Three", 40});
  CHECK(last.x == 3);
  CHECK(last.y == 0);

  Paragraph single;
  single.context = "Only one sentence.";
  single.sentences = segment_sentences(single.context);
  const auto only = answer_sentence_index(single, {"one", 5});
  CHECK(only.x == 1);
  CHECK(only.y == 0);

  CHECK_THROWS_AS(answer_sentence_index(p, {"oops", 999}), ValidationError);
}

TEST_CASE("unicode contexts use code-point offsets") {
  // "Čapek wrote près de 1920." -- answer offset counted in code points.
  const std::string ctx = "\xC4\x8C\x61\x70\x65\x6B wrote robots. Era was 1920.";
  REQUIRE(utf8::cp_length(ctx) + 1 == ctx.size());  // exactly one 2-byte char
  Corpus c;
  Article art;
  Paragraph p;
  p.context = ctx;
  p.sentences = segment_sentences(ctx);
  QA qa;
  qa.id = "u1";
  qa.question = "What did he write?";
  qa.answers.push_back({"robots", 12});  // code-point offset, byte offset is 13
  p.qas.push_back(qa);
  art.paragraphs.push_back(p);
  c.articles.push_back(art);
  CHECK(validate(c).ok());
  const Corpus round = load_corpus_from_string(corpus_to_json(c));
  CHECK(round == c);
}

TEST_CASE("validate: clean fixture yields an empty report") {
  CHECK(validate(testutil::mini_corpus()).ok());
}

TEST_CASE("validate: corrupted offset and duplicate ids are findings") {
  Corpus c = load_corpus_from_string(kMinimalJson);
  Paragraph& p = c.articles[0].paragraphs[0];
  p.qas.push_back(p.qas[0]);  // duplicate id
  p.qas[1].answers[0].answer_start = 14;
  const ValidationReport report = validate(c);
  REQUIRE(report.findings.size() == 2);
  CHECK(report.findings[0].message == "duplicate qa id");
  CHECK(report.findings[1].message.find("offset 14") != std::string::npos);
  CHECK(!report.to_json_lines().empty());
}

TEST_CASE("validate: variant metadata must match the -adv<k> id scheme") {
  Corpus c = load_corpus_from_string(kMinimalJson);
  QA& qa = c.articles[0].paragraphs[0].qas[0];
  qa.meta = AdversarialMeta{};
  qa.meta->variant_of = "other";
  qa.meta->variant_index = 2;
  const ValidationReport report = validate(c);
  REQUIRE(report.findings.size() == 1);
  CHECK(report.findings[0].qa_id == "q1");
}
