#include "advqa/adversary.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "advqa/features.hpp"
#include "advqa/placement.hpp"
#include "advqa/strings.hpp"
#include "advqa/utf8.hpp"

namespace advqa {

namespace {

const std::unordered_set<std::string>& wh_np_words() {
  static const std::unordered_set<std::string> set = {"what", "which", "who", "whom", "whose"};
  return set;
}

const std::unordered_set<std::string>& do_aux() {
  static const std::unordered_set<std::string> set = {"do", "does", "did"};
  return set;
}

const std::unordered_set<std::string>& be_aux() {
  static const std::unordered_set<std::string> set = {"is", "are", "was", "were"};
  return set;
}

const std::unordered_set<std::string>& prepositions() {
  static const std::unordered_set<std::string> set = {
      "of",   "in",   "on",    "at",     "to",      "from",    "by",     "with",
      "for",  "about", "into", "during", "over",    "under",   "between", "through",
      "against", "near", "along", "across", "within", "toward", "towards", "upon",
      "after", "before"};
  return set;
}

// Nouns that make a "the <category> of <answer>" scaffold read naturally.
const std::unordered_set<std::string>& location_categories() {
  static const std::unordered_set<std::string> set = {
      "city",     "town",    "country", "state",  "province", "region",  "river",
      "mountain", "continent", "island", "place",  "area",     "district", "village",
      "lake",     "sea",     "ocean",   "county", "kingdom",  "empire",  "nation",
      "territory", "capital"};
  return set;
}

// Closed-class words that never start an entity run even when capitalized.
const std::unordered_set<std::string>& function_words() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s = {
        "the", "a",  "an",  "this", "that", "these", "those", "and", "or",  "but",
        "not", "no", "it",  "he",   "she",  "they",  "we",    "you", "i",   "its",
        "his", "her", "their", "how", "why", "when",  "where", "many", "much"};
    for (const auto& w : wh_np_words()) s.insert(w);
    for (const auto& w : do_aux()) s.insert(w);
    for (const auto& w : be_aux()) s.insert(w);
    for (const auto& w : prepositions()) s.insert(w);
    s.insert("have");
    s.insert("has");
    s.insert("had");
    s.insert("can");
    s.insert("could");
    s.insert("will");
    s.insert("would");
    s.insert("shall");
    s.insert("should");
    s.insert("may");
    s.insert("might");
    s.insert("must");
    return s;
  }();
  return set;
}

bool is_vowel(char c) { return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u'; }

// big -> bigg… candidates for -ed/-er/-est attachment: short
// consonant-vowel-consonant stems double the final letter.
bool doubles_final_consonant(const std::string& w) {
  if (w.size() < 3 || w.size() > 4) return false;
  const char c2 = w[w.size() - 1], c1 = w[w.size() - 2], c0 = w[w.size() - 3];
  return !is_vowel(c2) && c2 != 'w' && c2 != 'x' && c2 != 'y' && is_vowel(c1) && !is_vowel(c0);
}

std::string attach_suffix(const std::string& base, const std::string& suffix) {
  if (suffix.empty()) return base;
  if (suffix == "ly") {
    if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2]))
      return base.substr(0, base.size() - 1) + "ily";
    if (base.ends_with("le")) return base.substr(0, base.size() - 1) + "y";
    return base + "ly";
  }
  // -er / -est
  if (base.size() >= 2 && base.back() == 'y' && !is_vowel(base[base.size() - 2]))
    return base.substr(0, base.size() - 1) + "i" + suffix;
  if (base.back() == 'e') return base + suffix.substr(1);
  if (doubles_final_consonant(base)) return base + base.back() + suffix;
  return base + suffix;
}

std::string capitalize_like(const std::string& word, const std::string& original) {
  if (word.empty() || original.empty()) return word;
  if (original[0] >= 'A' && original[0] <= 'Z') {
    std::string out = word;
    out[0] = ascii_upper(out[0]);
    return out;
  }
  return word;
}

// The suffix lemma_of stripped from `low` to reach `lemma`, if any.
std::string stripped_suffix(const std::string& low, const std::string& lemma) {
  if (low == lemma) return "";
  for (const std::string sfx : {"est", "er", "ly"}) {
    if (!low.ends_with(sfx) || low.size() <= sfx.size() + 1) continue;
    const std::string base = low.substr(0, low.size() - sfx.size());
    if (base == lemma || base + "e" == lemma) return sfx;
    if (base.size() >= 2 && base.back() == base[base.size() - 2] &&
        base.substr(0, base.size() - 1) == lemma)
      return sfx;
    if (base.back() == 'i' && base.substr(0, base.size() - 1) + "y" == lemma) return sfx;
  }
  return "";
}

struct Swap {
  std::size_t cp_start = 0;
  std::size_t cp_end = 0;
  std::string replacement;
  Perturbation log;
};

std::string apply_swaps(const std::string& text, std::vector<Swap> swaps) {
  std::sort(swaps.begin(), swaps.end(),
            [](const Swap& a, const Swap& b) { return a.cp_start > b.cp_start; });
  std::string out = text;
  for (const Swap& s : swaps) {
    const std::size_t b0 = utf8::cp_to_byte(out, s.cp_start);
    const std::size_t b1 = utf8::cp_to_byte(out, s.cp_end);
    out.replace(b0, b1 - b0, s.replacement);
  }
  return out;
}

std::optional<std::string> pick_pool_entry(const FakeAnswerPool& pool, AnswerType type,
                                           const std::string& original, Rng& rng) {
  const auto& bucket = pool.bucket(type);
  std::vector<const std::string*> eligible;
  eligible.reserve(bucket.size());
  for (const auto& e : bucket)
    if (!iequals(e.text, original)) eligible.push_back(&e.text);
  if (eligible.empty()) return std::nullopt;
  return *eligible[rng.below(eligible.size())];
}

}  // namespace

// ---- SynthesisRules ---------------------------------------------------------

SynthesisRules SynthesisRules::load(std::istream& irregular_tsv, std::istream& verb_list) {
  SynthesisRules rules;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(irregular_tsv, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const std::vector<std::string> fields = split(line, '\t');
    if (fields.size() != 2)
      throw ParseError("irregular-verb table line " + std::to_string(line_no) +
                       ": expected `base<TAB>past`");
    const std::string base = lower(trim(fields[0]));
    const std::string past = lower(trim(fields[1]));
    if (base.empty() || past.empty())
      throw ParseError("irregular-verb table line " + std::to_string(line_no) + ": empty field");
    rules.irregular_past[base] = past;
    rules.base_verbs.insert(base);
    rules.irregular_past_forms.insert(past);
  }
  while (std::getline(verb_list, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string_view t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    rules.base_verbs.insert(lower(t));
  }
  return rules;
}

SynthesisRules SynthesisRules::load_files(const std::string& irregular_tsv_path,
                                          const std::string& verb_list_path) {
  std::ifstream irr(irregular_tsv_path);
  if (!irr) throw std::runtime_error("cannot open irregular-verb table: " + irregular_tsv_path);
  std::ifstream verbs(verb_list_path);
  if (!verbs) throw std::runtime_error("cannot open verb list: " + verb_list_path);
  return load(irr, verbs);
}

bool SynthesisRules::looks_like_verb(const std::string& t) const {
  if (base_verbs.count(t) > 0 || irregular_past_forms.count(t) > 0) return true;
  if (t.size() > 3 && t.ends_with("ed")) return true;
  if (t.size() > 2 && t.back() == 's' && base_verbs.count(t.substr(0, t.size() - 1)) > 0)
    return true;
  if (t.size() > 3 && t.ends_with("ies") &&
      base_verbs.count(t.substr(0, t.size() - 3) + "y") > 0)
    return true;
  return false;
}

std::string SynthesisRules::past_tense(const std::string& v) const {
  if (auto it = irregular_past.find(v); it != irregular_past.end()) return it->second;
  if (v.empty()) return v;
  if (v.back() == 'e') return v + "d";
  if (v.size() >= 2 && v.back() == 'y' && !is_vowel(v[v.size() - 2]))
    return v.substr(0, v.size() - 1) + "ied";
  if (doubles_final_consonant(v)) return v + v.back() + "ed";
  return v + "ed";
}

std::string SynthesisRules::third_person(const std::string& v) const {
  if (v.empty()) return v;
  if (v.size() >= 2 && v.back() == 'y' && !is_vowel(v[v.size() - 2]))
    return v.substr(0, v.size() - 1) + "ies";
  if (v.ends_with("s") || v.ends_with("x") || v.ends_with("z") || v.ends_with("ch") ||
      v.ends_with("sh") || v.ends_with("o"))
    return v + "es";
  return v + "s";
}

// ---- perturb_question -------------------------------------------------------

PerturbResult perturb_question(const std::string& question, const Lexicon& lex,
                               const FakeAnswerPool& pool, Rng& rng) {
  const std::vector<Token> tokens = tokenize(question);
  const std::size_t n = tokens.size();

  std::vector<std::string> cores(n);
  std::vector<std::string> lowers(n);
  for (std::size_t i = 0; i < n; ++i) {
    cores[i] = word_core(tokens[i].text);
    lowers[i] = lower(cores[i]);
  }

  std::vector<bool> consumed(n, false);
  std::vector<Swap> swaps;

  auto token_span_end = [&](std::size_t i) {
    return tokens[i].start + utf8::cp_length(tokens[i].text);
  };

  // Pass 1: entity runs (consecutive capitalized content tokens).
  auto entity_candidate = [&](std::size_t i) {
    const std::string& c = cores[i];
    if (c.empty() || c[0] < 'A' || c[0] > 'Z') return false;
    if (function_words().count(lowers[i]) > 0) return false;
    if (is_date_token(c) || is_number_token(c)) return false;
    return true;
  };
  for (std::size_t i = 0; i < n;) {
    if (!entity_candidate(i)) {
      ++i;
      continue;
    }
    std::size_t j = i;
    std::string run_text;
    while (j < n && entity_candidate(j)) {
      if (!run_text.empty()) run_text += ' ';
      run_text += cores[j];
      ++j;
    }
    const AnswerType t = pool.classifier().classify(run_text);
    if (t == AnswerType::kPerson || t == AnswerType::kLocation || t == AnswerType::kEntity) {
      if (auto rep = pick_pool_entry(pool, t, run_text, rng)) {
        Swap s;
        s.cp_start = tokens[i].start;
        s.cp_end = token_span_end(j - 1);
        s.replacement = *rep;
        s.log = {PerturbationKind::kEntitySwap, run_text, *rep, i};
        swaps.push_back(std::move(s));
        for (std::size_t k = i; k < j; ++k) consumed[k] = true;
      }
    }
    i = j;
  }

  // Pass 2: number/date tokens.
  for (std::size_t i = 0; i < n; ++i) {
    if (consumed[i] || cores[i].empty()) continue;
    AnswerType t;
    if (is_date_token(cores[i])) {
      t = AnswerType::kDate;
    } else if (is_number_token(cores[i])) {
      t = AnswerType::kNumber;
    } else {
      continue;
    }
    if (auto rep = pick_pool_entry(pool, t, cores[i], rng)) {
      Swap s;
      s.cp_start = tokens[i].start;
      s.cp_end = tokens[i].start + utf8::cp_length(cores[i]);
      s.replacement = *rep;
      s.log = {PerturbationKind::kNumberSwap, cores[i], *rep, i};
      swaps.push_back(std::move(s));
      consumed[i] = true;
    }
  }

  // Pass 3: antonym swaps on remaining content words, morphology preserved.
  for (std::size_t i = 0; i < n; ++i) {
    if (consumed[i] || cores[i].empty() || is_stopword(cores[i])) continue;
    const auto lemma = lex.lemma_of(cores[i]);
    if (!lemma) continue;
    const std::set<std::string> ants = lex.antonyms(*lemma);
    if (ants.empty()) continue;
    auto it = ants.begin();
    std::advance(it, static_cast<long>(rng.below(ants.size())));
    const std::string suffix = stripped_suffix(lowers[i], *lemma);
    std::string surface = capitalize_like(attach_suffix(*it, suffix), cores[i]);
    if (surface == cores[i]) continue;
    Swap s;
    s.cp_start = tokens[i].start;
    s.cp_end = tokens[i].start + utf8::cp_length(cores[i]);
    s.replacement = surface;
    s.log = {PerturbationKind::kAntonymSwap, cores[i], surface, i};
    swaps.push_back(std::move(s));
    consumed[i] = true;
  }

  PerturbResult result;
  result.question = swaps.empty() ? question : apply_swaps(question, swaps);
  for (const Swap& s : swaps) result.log.push_back(s.log);
  std::sort(result.log.begin(), result.log.end(),
            [](const Perturbation& a, const Perturbation& b) { return a.position < b.position; });
  return result;
}

// ---- fake answers -----------------------------------------------------------

std::optional<std::string> generate_fake_answer_dynamic(const Answer& answer,
                                                        const FakeAnswerPool& pool, Rng& rng) {
  const AnswerType t = pool.classifier().classify(answer.text);
  return pick_pool_entry(pool, t, std::string(trim(answer.text)), rng);
}

std::string generate_fake_answer_fixed(AnswerType type,
                                       const std::map<AnswerType, std::string>& table) {
  const auto it = table.find(type);
  if (it == table.end())
    throw ConfigError(std::string("fixed fake-answer table lacks type ") + to_string(type));
  return it->second;
}

// ---- synthesize_distractor --------------------------------------------------

namespace {

struct Clause {
  std::vector<std::string> subject;
  std::string verb;
  std::vector<std::string> rest;
  bool ok = false;
};

Clause split_subject_verb(const std::vector<std::string>& words,
                          const std::vector<std::string>& lowers, std::size_t begin,
                          const SynthesisRules& rules) {
  Clause c;
  const std::size_t m = words.size();
  for (std::size_t v = begin + 1; v < m; ++v) {
    if (rules.looks_like_verb(lowers[v])) {
      c.subject.assign(words.begin() + begin, words.begin() + v);
      c.verb = lowers[v];
      c.rest.assign(words.begin() + v + 1, words.end());
      c.ok = true;
      return c;
    }
  }
  if (m - begin >= 2) {
    c.subject = {words[begin]};
    c.verb = lowers[begin + 1];
    c.rest.assign(words.begin() + begin + 2, words.end());
    c.ok = true;
  }
  return c;
}

std::string conjugate(const std::string& verb, const std::string& aux,
                      const SynthesisRules& rules) {
  if (aux == "did") return rules.past_tense(verb);
  if (aux == "does") return rules.third_person(verb);
  return verb;
}

std::vector<std::string> scaffold_answer(const std::string& fake_answer, AnswerType fake_type,
                                         const std::string& category, bool after_preposition) {
  if (fake_type == AnswerType::kLocation && !category.empty())
    return {"the", category, "of", fake_answer};
  if (fake_type == AnswerType::kDate && !after_preposition) return {"in", fake_answer};
  return {fake_answer};
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const std::string& w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

std::string finish_statement(std::vector<std::string> words, const std::string& fake_answer) {
  std::string s = join_words(words);
  // Single terminal period.
  while (!s.empty() && (s.back() == '.' || s.back() == '!' || s.back() == '?' || s.back() == ' '))
    s.pop_back();
  s += '.';
  // Capitalize unless that would break verbatim containment of the answer.
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') {
    std::string cap = s;
    cap[0] = ascii_upper(cap[0]);
    if (cap.find(fake_answer) != std::string::npos || s.find(fake_answer) == std::string::npos)
      s = cap;
  }
  return s;
}

}  // namespace

std::optional<std::string> synthesize_distractor(const std::string& perturbed_question,
                                                 const std::string& fake_answer,
                                                 AnswerType fake_type,
                                                 const SynthesisRules& rules) {
  std::vector<std::string> words, lowers;
  for (const Token& t : tokenize(perturbed_question)) {
    const std::string core = word_core(t.text);
    if (core.empty()) continue;  // drop punctuation tokens
    words.push_back(core);
    lowers.push_back(lower(core));
  }
  const std::size_t m = words.size();
  if (m == 0) return std::nullopt;

  const bool wh0 = wh_np_words().count(lowers[0]) > 0;

  // R3: copular "what/who is X" -> "X is <A>."
  if (m >= 3 && wh0 && lowers[0] != "whom" && lowers[0] != "whose" &&
      be_aux().count(lowers[1]) > 0) {
    std::vector<std::string> out(words.begin() + 2, words.end());
    out.push_back(words[1]);
    out.push_back(fake_answer);
    return finish_statement(std::move(out), fake_answer);
  }

  // R4: when/where adjunct questions -> statementized clause + "in <A>".
  if (m >= 3 && (lowers[0] == "when" || lowers[0] == "where")) {
    std::vector<std::string> out;
    if (do_aux().count(lowers[1]) > 0) {
      Clause c = split_subject_verb(words, lowers, 2, rules);
      if (!c.ok) return std::nullopt;
      out = c.subject;
      out.push_back(conjugate(c.verb, lowers[1], rules));
      out.insert(out.end(), c.rest.begin(), c.rest.end());
    } else if (be_aux().count(lowers[1]) > 0) {
      std::size_t v = 0;
      for (std::size_t i = 3; i < m; ++i) {
        if (rules.looks_like_verb(lowers[i])) {
          v = i;
          break;
        }
      }
      if (v > 0) {
        out.assign(words.begin() + 2, words.begin() + v);
        out.push_back(words[1]);
        out.insert(out.end(), words.begin() + v, words.end());
      } else {
        out.assign(words.begin() + 2, words.end());
        out.push_back(words[1]);
      }
    } else {
      return std::nullopt;
    }
    out.push_back("in");
    out.push_back(fake_answer);
    return finish_statement(std::move(out), fake_answer);
  }

  // R1: object wh with do-support; optional leading preposition
  // ("In what year did ... ?").
  {
    std::string leading_prep;
    std::size_t wh_start = 0;
    if (wh0) {
      wh_start = 0;
    } else if (m >= 2 && prepositions().count(lowers[0]) > 0 &&
               wh_np_words().count(lowers[1]) > 0) {
      leading_prep = lowers[0];
      wh_start = 1;
    } else {
      wh_start = m;  // no R1 match
    }
    if (wh_start < m) {
      std::size_t d = m;
      for (std::size_t i = wh_start + 1; i < m; ++i) {
        if (do_aux().count(lowers[i]) > 0) {
          d = i;
          break;
        }
      }
      if (d + 2 <= m && d < m) {
        Clause c = split_subject_verb(words, lowers, d + 1, rules);
        if (c.ok) {
          std::string category;
          for (std::size_t i = wh_start; i < d; ++i) {
            if (location_categories().count(lowers[i]) > 0) {
              category = lowers[i];
              break;
            }
          }
          std::vector<std::string> out = c.subject;
          out.push_back(conjugate(c.verb, lowers[d], rules));
          if (!leading_prep.empty()) {
            out.insert(out.end(), c.rest.begin(), c.rest.end());
            out.push_back(leading_prep);
            const auto scaf = scaffold_answer(fake_answer, fake_type, category, true);
            out.insert(out.end(), scaf.begin(), scaf.end());
          } else if (!c.rest.empty() && prepositions().count(lower(c.rest[0])) > 0 &&
                     (c.rest.size() == 1 || prepositions().count(lower(c.rest[1])) > 0)) {
            // Stranded preposition: the wh-trace sits right behind it.
            out.push_back(c.rest[0]);
            const auto scaf = scaffold_answer(fake_answer, fake_type, category, true);
            out.insert(out.end(), scaf.begin(), scaf.end());
            out.insert(out.end(), c.rest.begin() + 1, c.rest.end());
          } else {
            const auto scaf = scaffold_answer(fake_answer, fake_type, category, false);
            out.insert(out.end(), scaf.begin(), scaf.end());
            out.insert(out.end(), c.rest.begin(), c.rest.end());
          }
          return finish_statement(std::move(out), fake_answer);
        }
      }
    }
  }

  // R2: subject wh -> replace the wh word with the answer.
  if (m >= 2 && (lowers[0] == "who" || lowers[0] == "what" || lowers[0] == "which") &&
      rules.looks_like_verb(lowers[1])) {
    std::vector<std::string> out = {fake_answer};
    out.insert(out.end(), words.begin() + 1, words.end());
    return finish_statement(std::move(out), fake_answer);
  }

  return std::nullopt;
}

std::string fallback_statement(const std::string& perturbed_question,
                               const std::string& fake_answer) {
  std::vector<std::string> words;
  for (const Token& t : tokenize(perturbed_question)) {
    const std::string core = word_core(t.text);
    if (!core.empty()) words.push_back(core);
  }
  std::size_t b = 0;
  auto droppable = [&](const std::string& w) {
    const std::string low = lower(w);
    return wh_np_words().count(low) > 0 || low == "when" || low == "where" || low == "why" ||
           low == "how";
  };
  while (b < words.size() && droppable(words[b])) ++b;
  if (b < words.size()) {
    const std::string low = lower(words[b]);
    if (do_aux().count(low) > 0 || be_aux().count(low) > 0) ++b;
  }
  std::vector<std::string> out(words.begin() + b, words.end());
  if (out.empty()) out = {"The", "answer"};
  out.push_back("was");
  out.push_back(fake_answer);
  return finish_statement(std::move(out), fake_answer);
}

// ---- make_adversarial_variants ----------------------------------------------

std::vector<VariantResult> make_adversarial_variants(const Paragraph& paragraph, const QA& qa,
                                                     const GenerationConfig& cfg,
                                                     const Lexicon& lex,
                                                     const FakeAnswerPool& pool,
                                                     const SynthesisRules& rules,
                                                     GenerationLog& log) {
  if (cfg.variants_per_question < 1 || cfg.variants_per_question > kMaxVariantsPerQuestion)
    throw ConfigError("variants_per_question must be in [1, " +
                      std::to_string(kMaxVariantsPerQuestion) + "]");

  std::vector<VariantResult> results;
  if (qa.answers.empty()) {
    log.skips.push_back({qa.id, 0, "no gold answer"});
    return results;
  }
  const Answer& gold = qa.answers[0];
  const AnswerType gold_type = pool.classifier().classify(gold.text);

  for (int k = 1; k <= cfg.variants_per_question; ++k) {
    const std::uint64_t seed_k = derive_seed(cfg.seed, qa.id, static_cast<std::uint64_t>(k));
    Rng rng(seed_k);

    PerturbResult perturbed = perturb_question(qa.question, lex, pool, rng);

    std::string fake, statement;
    bool accepted = false;
    std::string skip_reason;
    for (int attempt = 0; attempt < 4 && !accepted; ++attempt) {
      if (cfg.fake_answer_mode == FakeAnswerMode::kDynamic) {
        const auto f = generate_fake_answer_dynamic(gold, pool, rng);
        if (!f) {
          skip_reason = "no eligible fake answer";
          break;
        }
        fake = *f;
      } else {
        fake = generate_fake_answer_fixed(gold_type, cfg.fixed_table);
      }
      auto stmt = synthesize_distractor(perturbed.question, fake, gold_type, rules);
      if (!stmt) {
        if (cfg.skip_policy == SkipPolicy::kFallbackTemplate) {
          stmt = fallback_statement(perturbed.question, fake);
        } else {
          skip_reason = "no synthesis rule matched";
          break;
        }
      }
      bool contains_gold = false;
      for (const Answer& a : qa.answers) {
        if (!a.text.empty() && icontains(*stmt, a.text)) {
          contains_gold = true;
          break;
        }
      }
      if (contains_gold) {
        skip_reason = "statement contains a gold answer";
        // Redrawing only helps when the fake answer varies.
        if (cfg.fake_answer_mode == FakeAnswerMode::kFixed) break;
        continue;
      }
      statement = *stmt;
      accepted = true;
    }
    if (!accepted) {
      log.skips.push_back({qa.id, k, skip_reason});
      continue;
    }

    // Keep only perturbations that survived into the statement; a variant
    // whose statement carries none of them is unperturbed and dropped.
    PerturbationLog surviving;
    for (const Perturbation& p : perturbed.log)
      if (icontains(statement, p.replacement)) surviving.push_back(p);
    if (surviving.empty()) {
      log.skips.push_back({qa.id, k, "unperturbed"});
      continue;
    }

    Paragraph base;
    base.context = paragraph.context;
    base.sentences = paragraph.sentences;
    base.qas = {qa};
    auto [attacked, slot] = insert_distractor(base, statement, cfg.strategy, rng);

    DistractorRecord record;
    record.base_qa_id = qa.id;
    record.perturbed_question = perturbed.question;
    record.fake_answer = fake;
    record.statement = statement;
    record.strategy = cfg.strategy;
    record.insertion_index = slot;
    record.perturbations = surviving;
    record.seed = seed_k;

    QA& vqa = attacked.qas[0];
    vqa.id = qa.id + "-adv" + std::to_string(k);
    vqa.meta = AdversarialMeta{qa.id, k, record};

    results.push_back({attacked, vqa, record});
    log.records.push_back(std::move(record));
  }
  return results;
}

}  // namespace advqa
