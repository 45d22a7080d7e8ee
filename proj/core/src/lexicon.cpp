#include "advqa/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "advqa/strings.hpp"

namespace advqa {

namespace {

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

const std::unordered_set<std::string>& month_and_weekday_words() {
  static const std::unordered_set<std::string> set = {
      "january", "february", "march",    "april",   "may",      "june",
      "july",    "august",   "september", "october", "november", "december",
      "jan",     "feb",      "mar",      "apr",     "jun",      "jul",
      "aug",     "sep",      "sept",     "oct",     "nov",      "dec",
      "monday",  "tuesday",  "wednesday", "thursday", "friday",  "saturday",
      "sunday"};
  return set;
}

const std::unordered_set<std::string>& number_words() {
  static const std::unordered_set<std::string> set = {
      "zero",    "one",     "two",      "three",    "four",    "five",    "six",
      "seven",   "eight",   "nine",     "ten",      "eleven",  "twelve",  "thirteen",
      "fourteen", "fifteen", "sixteen", "seventeen", "eighteen", "nineteen", "twenty",
      "thirty",  "forty",   "fifty",    "sixty",    "seventy", "eighty",  "ninety",
      "hundred", "thousand", "million", "billion",  "trillion", "dozen"};
  return set;
}

const std::unordered_set<std::string>& honorifics() {
  static const std::unordered_set<std::string> set = {"mr",   "mrs", "ms",  "dr",
                                                      "prof", "sir", "lady", "saint"};
  return set;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

bool is_number_token(std::string_view token) {
  const std::string core = word_core(token);
  if (core.empty()) return false;
  // Digit-bearing: digits with optional , . % plus ordinal suffixes (7th).
  bool has_digit = false, ok = true;
  for (std::size_t i = 0; i < core.size(); ++i) {
    const char c = core[i];
    if (c >= '0' && c <= '9') {
      has_digit = true;
    } else if (c == ',' || c == '.' || c == '%' || c == '-' || c == '+') {
      continue;
    } else {
      ok = false;
      break;
    }
  }
  if (has_digit && ok) return true;
  if (has_digit) {
    // Ordinals: digits followed by st/nd/rd/th.
    std::size_t i = 0;
    while (i < core.size() && core[i] >= '0' && core[i] <= '9') ++i;
    if (i > 0 && (iequals(core.substr(i), "st") || iequals(core.substr(i), "nd") ||
                  iequals(core.substr(i), "rd") || iequals(core.substr(i), "th")))
      return true;
    return false;
  }
  // Spelled numbers, possibly hyphenated (twenty-one).
  const std::string low = lower(core);
  for (const std::string& part : split(low, '-')) {
    if (part.empty() || number_words().count(part) == 0) return false;
  }
  return true;
}

bool is_date_token(std::string_view token) {
  const std::string core = word_core(token);
  if (core.empty()) return false;
  if (month_and_weekday_words().count(lower(core)) > 0) return true;
  if (core.size() == 4 && all_digits(core)) return true;  // 4-digit year
  if (core.size() == 5 && core.back() == 's' && all_digits(core.substr(0, 4)))
    return true;  // decades: 1920s
  // Numeric date shapes: 1/2/1999, 01-02-99.
  int fields = 0;
  bool shape_ok = !core.empty();
  std::size_t i = 0;
  while (i < core.size() && shape_ok) {
    std::size_t start = i;
    while (i < core.size() && core[i] >= '0' && core[i] <= '9') ++i;
    if (i == start) {
      shape_ok = false;
      break;
    }
    ++fields;
    if (i < core.size()) {
      if (core[i] == '/' || core[i] == '-') {
        ++i;
      } else {
        shape_ok = false;
      }
    }
  }
  return shape_ok && fields == 3;
}

TypeClassifier::TypeClassifier(std::unordered_set<std::string> persons,
                               std::unordered_set<std::string> locations) {
  for (const std::string& p : persons) persons_.insert(lower(p));
  for (const std::string& l : locations) locations_.insert(lower(l));
}

namespace {
std::unordered_set<std::string> read_name_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open gazetteer: " + path);
  std::unordered_set<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    names.insert(std::string(t));
  }
  return names;
}
}  // namespace

TypeClassifier TypeClassifier::from_files(const std::string& persons_path,
                                          const std::string& locations_path) {
  return TypeClassifier(read_name_list(persons_path), read_name_list(locations_path));
}

bool TypeClassifier::is_person_token(std::string_view token) const {
  return persons_.count(lower(word_core(token))) > 0;
}

bool TypeClassifier::is_location_token(std::string_view token) const {
  return locations_.count(lower(word_core(token))) > 0;
}

AnswerType TypeClassifier::classify(std::string_view answer) const {
  const std::string_view trimmed = trim(answer);
  if (trimmed.empty()) throw std::invalid_argument("classify: empty answer string");
  const std::vector<std::string> tokens = split_ws(trimmed);

  for (const std::string& t : tokens)
    if (is_date_token(t)) return AnswerType::kDate;

  bool all_number = true;
  for (const std::string& t : tokens) {
    if (!is_number_token(t)) {
      all_number = false;
      break;
    }
  }
  if (all_number) return AnswerType::kNumber;

  if (!tokens.empty() && honorifics().count(lower(word_core(tokens[0]))) > 0)
    return AnswerType::kPerson;
  for (const std::string& t : tokens)
    if (is_person_token(t)) return AnswerType::kPerson;

  for (const std::string& t : tokens)
    if (is_location_token(t)) return AnswerType::kLocation;

  for (const std::string& t : tokens) {
    const std::string core = word_core(t);
    if (!core.empty() && core[0] >= 'A' && core[0] <= 'Z') return AnswerType::kEntity;
  }
  return AnswerType::kCommon;
}

// ---- Lexicon ----------------------------------------------------------------

void Lexicon::add_entry(std::string lemma, std::set<std::string> synonyms,
                        std::set<std::string> antonyms) {
  LexiconEntry& e = entries_[lemma];
  e.synonyms.insert(synonyms.begin(), synonyms.end());
  e.antonyms.insert(antonyms.begin(), antonyms.end());
}

void Lexicon::close_antonym_symmetry() {
  // Collect first: inserting while iterating would invalidate nothing in a
  // std::map, but the closure must also create entries for unseen lemmas.
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [lemma, entry] : entries_)
    for (const std::string& ant : entry.antonyms) pairs.emplace_back(ant, lemma);
  for (auto& [lemma, ant] : pairs) entries_[lemma].antonyms.insert(ant);
}

Lexicon Lexicon::load(std::istream& in) {
  Lexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view t = trim(line);
    if (t.empty() || t[0] == '#') continue;

    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 3)
      throw ParseError("lexicon line " + std::to_string(line_no) + ": expected 3 tab-separated fields, got " +
                       std::to_string(fields.size()));
    const std::string lemma = lower(trim(fields[0]));
    if (lemma.empty())
      throw ParseError("lexicon line " + std::to_string(line_no) + ": empty lemma");

    std::set<std::string> syns, ants;
    for (const std::string& s : split(fields[1], ',')) {
      const std::string v = lower(trim(s));
      if (!v.empty()) syns.insert(v);
    }
    for (const std::string& s : split(fields[2], ',')) {
      const std::string v = lower(trim(s));
      if (!v.empty()) ants.insert(v);
    }
    if (syns.count(lemma) > 0 || ants.count(lemma) > 0) {
      lex.warnings_.push_back("line " + std::to_string(line_no) + ": '" + lemma +
                              "' lists itself as a relation; entry dropped");
      continue;
    }
    lex.add_entry(lemma, std::move(syns), std::move(ants));
  }
  lex.close_antonym_symmetry();
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon: " + path);
  return load(in);
}

std::optional<std::string> Lexicon::lemma_of(std::string_view word) const {
  const std::string low = lower(word_core(word));
  if (low.empty()) return std::nullopt;
  if (entries_.count(low) > 0) return low;

  for (const std::string_view suffix : {"est", "er", "ly"}) {
    if (low.size() <= suffix.size() + 1 || !low.ends_with(suffix)) continue;
    const std::string base = low.substr(0, low.size() - suffix.size());
    if (entries_.count(base) > 0) return base;
    // Undouble a final consonant: bigg -> big.
    if (base.size() >= 2 && base.back() == base[base.size() - 2] && !is_vowel(base.back())) {
      const std::string undoubled = base.substr(0, base.size() - 1);
      if (entries_.count(undoubled) > 0) return undoubled;
    }
    // happi -> happy.
    if (base.back() == 'i') {
      const std::string ied = base.substr(0, base.size() - 1) + "y";
      if (entries_.count(ied) > 0) return ied;
    }
    // larg -> large (inflection dropped the final e).
    if (entries_.count(base + "e") > 0) return base + "e";
  }
  return std::nullopt;
}

std::set<std::string> Lexicon::synonyms(std::string_view word) const {
  const auto lemma = lemma_of(word);
  if (!lemma) return {};
  return entries_.at(*lemma).synonyms;
}

std::set<std::string> Lexicon::antonyms(std::string_view word) const {
  const auto lemma = lemma_of(word);
  if (!lemma) return {};
  return entries_.at(*lemma).antonyms;
}

// ---- FakeAnswerPool ---------------------------------------------------------

void FakeAnswerPool::add(const std::string& answer_text) {
  const std::string_view trimmed = trim(answer_text);
  if (trimmed.empty()) return;
  const std::string text(trimmed);
  if (auto it = index_.find(text); it != index_.end()) {
    buckets_[it->second.first][it->second.second].count += 1;
    return;
  }
  const AnswerType t = classifier_.classify(text);
  const int b = static_cast<int>(t);
  index_[text] = {b, buckets_[b].size()};
  buckets_[b].push_back({text, 1});
}

std::size_t FakeAnswerPool::distinct_total() const {
  std::size_t n = 0;
  for (const auto& bucket : buckets_) n += bucket.size();
  return n;
}

FakeAnswerPool build_fake_answer_pool(const Corpus& corpus, TypeClassifier classifier) {
  FakeAnswerPool pool(std::move(classifier));
  for (const Article& article : corpus.articles)
    for (const Paragraph& para : article.paragraphs)
      for (const QA& qa : para.qas)
        for (const Answer& ans : qa.answers) pool.add(ans.text);
  return pool;
}

// ---- stopwords --------------------------------------------------------------

const std::unordered_set<std::string>& stopwords() {
  static const std::unordered_set<std::string> set = {
      "a",     "an",    "the",   "and",   "or",    "but",  "if",    "then",  "of",
      "in",    "on",    "at",    "to",    "from",  "by",   "with",  "about", "into",
      "over",  "under", "between", "through", "during", "up", "down", "out",  "off",
      "is",    "are",   "was",   "were",  "be",    "been", "being", "am",    "do",
      "does",  "did",   "done",  "have",  "has",   "had",  "having", "will", "would",
      "can",   "could", "shall", "should", "may",  "might", "must", "it",    "its",
      "this",  "that",  "these", "those", "he",    "she",  "his",   "her",   "him",
      "they",  "them",  "their", "we",    "us",    "our",  "you",   "your",  "i",
      "me",    "my",    "who",   "whom",  "whose", "which", "what", "when",  "where",
      "why",   "how",   "not",   "no",    "nor",   "so",   "as",    "than",  "too",
      "very",  "s",     "t",     "just",  "there", "here", "also",  "such",  "both",
      "each",  "few",   "most",  "other", "some",  "any",  "all",   "own",   "same",
      "for"};
  return set;
}

bool is_stopword(std::string_view token) {
  return stopwords().count(lower(word_core(token))) > 0;
}

}  // namespace advqa
