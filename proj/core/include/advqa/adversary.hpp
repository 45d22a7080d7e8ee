#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "advqa/corpus.hpp"
#include "advqa/distractor.hpp"
#include "advqa/lexicon.hpp"
#include "advqa/rng.hpp"

namespace advqa {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tables backing the question-to-statement rules: an irregular-verb past
// table (TSV `base<TAB>past`) and a base-verb list used to find the main
// verb after do-support auxiliaries.
struct SynthesisRules {
  std::map<std::string, std::string> irregular_past;
  std::unordered_set<std::string> base_verbs;
  std::unordered_set<std::string> irregular_past_forms;  // filled by load

  static SynthesisRules load(std::istream& irregular_tsv, std::istream& verb_list);
  static SynthesisRules load_files(const std::string& irregular_tsv_path,
                                   const std::string& verb_list_path);

  bool looks_like_verb(const std::string& lower_token) const;
  std::string past_tense(const std::string& lower_verb) const;
  std::string third_person(const std::string& lower_verb) const;
};

struct PerturbResult {
  std::string question;
  PerturbationLog log;
};

// Applies antonym swaps (via the lexicon, morphology preserved), typed
// entity swaps and number/date swaps (via the fake-answer pool). A question
// with no applicable swap is returned unchanged with an empty log.
PerturbResult perturb_question(const std::string& question, const Lexicon& lex,
                               const FakeAnswerPool& pool, Rng& rng);

// Uniform draw over same-type pool entries differing from the gold answer
// (case-insensitive). nullopt when no entry is eligible.
std::optional<std::string> generate_fake_answer_dynamic(const Answer& answer,
                                                        const FakeAnswerPool& pool, Rng& rng);

// Plain table lookup; throws ConfigError when the table lacks the type.
std::string generate_fake_answer_fixed(AnswerType type,
                                       const std::map<AnswerType, std::string>& table);

// Rule-based wh-question to declarative statement transformation. nullopt
// means no rule matched (the caller decides between skipping and the
// fallback template).
std::optional<std::string> synthesize_distractor(const std::string& perturbed_question,
                                                 const std::string& fake_answer,
                                                 AnswerType fake_type,
                                                 const SynthesisRules& rules);

// Last-resort statement used under SkipPolicy::kFallbackTemplate.
std::string fallback_statement(const std::string& perturbed_question,
                               const std::string& fake_answer);

struct SkipEvent {
  std::string qa_id;
  int variant_index = 0;
  std::string reason;
};

struct GenerationLog {
  std::vector<DistractorRecord> records;
  std::vector<SkipEvent> skips;
};

struct VariantResult {
  Paragraph paragraph;  // single-QA paragraph holding the attacked context
  QA qa;
  DistractorRecord record;
};

// Generates up to cfg.variants_per_question adversarial variants for one
// question; each variant draws its own RNG stream from (cfg.seed, qa.id, k).
// Gold answers stay valid in every output paragraph. Unperturbable or
// unsynthesizable draws are skipped and logged.
std::vector<VariantResult> make_adversarial_variants(const Paragraph& paragraph, const QA& qa,
                                                     const GenerationConfig& cfg,
                                                     const Lexicon& lex,
                                                     const FakeAnswerPool& pool,
                                                     const SynthesisRules& rules,
                                                     GenerationLog& log);

}  // namespace advqa
