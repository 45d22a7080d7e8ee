#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "advqa/answer_type.hpp"
#include "advqa/corpus.hpp"

namespace advqa {

struct LexiconEntry {
  std::set<std::string> synonyms;
  std::set<std::string> antonyms;
};

// Lemma -> synonym/antonym sets, loaded from TSV rows
// `lemma<TAB>syn1,syn2,...<TAB>ant1,ant2,...`. Antonymy is closed
// symmetrically at load time. Lookups are case-insensitive and apply a small
// suffix stripper (-est/-er/-ly) so inflected question words still resolve.
class Lexicon {
 public:
  static Lexicon load(std::istream& in);
  static Lexicon load_file(const std::string& path);

  std::set<std::string> synonyms(std::string_view word) const;
  std::set<std::string> antonyms(std::string_view word) const;

  // The lexicon lemma `word` resolves to, if any: direct lowercase hit first,
  // then suffix stripping with undoubling / -i>-y / +e repairs
  // (biggest>big, happier>happy, largest>large).
  std::optional<std::string> lemma_of(std::string_view word) const;

  bool contains(std::string_view lemma) const { return entries_.count(std::string(lemma)) > 0; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  void add_entry(std::string lemma, std::set<std::string> synonyms,
                 std::set<std::string> antonyms);
  void close_antonym_symmetry();

 private:
  std::map<std::string, LexiconEntry> entries_;
  std::vector<std::string> warnings_;
};

// Gazetteer + pattern based answer typing with fixed precedence
// DATE > NUMBER > PERSON > LOCATION > ENTITY > COMMON.
class TypeClassifier {
 public:
  TypeClassifier() = default;
  TypeClassifier(std::unordered_set<std::string> persons,
                 std::unordered_set<std::string> locations);

  // Gazetteers are UTF-8 newline-delimited lists, one name per line.
  static TypeClassifier from_files(const std::string& persons_path,
                                   const std::string& locations_path);

  // Total and deterministic; stable under surrounding whitespace.
  // Throws std::invalid_argument on an empty (or all-whitespace) string.
  AnswerType classify(std::string_view answer) const;

  bool is_person_token(std::string_view token) const;
  bool is_location_token(std::string_view token) const;

 private:
  std::unordered_set<std::string> persons_;    // lowercased
  std::unordered_set<std::string> locations_;  // lowercased
};

// True for digit-bearing numeric tokens ("42", "10,000", "7th") and spelled
// number words ("seven", "twenty-one").
bool is_number_token(std::string_view token);
bool is_date_token(std::string_view token);  // months, weekdays, 4-digit years, 1/2/1999 shapes

// Distinct gold-answer strings from a corpus, bucketed by answer type in
// first-occurrence order with duplicate counts.
class FakeAnswerPool {
 public:
  struct Entry {
    std::string text;
    std::size_t count = 0;

    bool operator==(const Entry&) const = default;
  };

  explicit FakeAnswerPool(TypeClassifier classifier) : classifier_(std::move(classifier)) {}

  void add(const std::string& answer_text);
  const std::vector<Entry>& bucket(AnswerType t) const { return buckets_[static_cast<int>(t)]; }
  const TypeClassifier& classifier() const { return classifier_; }
  std::size_t distinct_total() const;

 private:
  TypeClassifier classifier_;
  std::vector<Entry> buckets_[kAnswerTypeCount];
  std::map<std::string, std::pair<int, std::size_t>> index_;  // text -> (bucket, position)
};

FakeAnswerPool build_fake_answer_pool(const Corpus& corpus, TypeClassifier classifier);

// Bundled stopword list (closed-class function words). Used by the semantic
// feature annotator and the overlap baseline.
const std::unordered_set<std::string>& stopwords();
bool is_stopword(std::string_view token);

}  // namespace advqa
