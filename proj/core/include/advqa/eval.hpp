#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "advqa/corpus.hpp"

namespace advqa {

// qa id -> predicted answer string (the de-facto prediction file format).
using PredictionSet = std::map<std::string, std::string>;

struct QAScore {
  double f1 = 0.0;
  double em = 0.0;
};

struct WorstCase {
  double f1 = 0.0;
  double em = 0.0;
  std::string argmin_id;  // variant achieving the f1 minimum
};

struct EvalReport {
  std::map<std::string, QAScore> per_question;
  double macro_f1 = 0.0;
  double macro_em = 0.0;
  std::size_t scored = 0;
  std::vector<std::string> missing;  // qa ids with no prediction
  std::optional<std::map<std::string, WorstCase>> worst_case;  // keyed by base id
};

// Lowercase, strip punctuation, drop the articles a/an/the, collapse
// whitespace.
std::string normalize_answer(std::string_view s);

// Token-multiset F1 over normalized tokens; both sides empty scores 1,
// exactly one empty scores 0.
double f1(std::string_view pred, std::string_view gold);
double em(std::string_view pred, std::string_view gold);

// Per question the best score over gold answers; a missing prediction scores
// 0 and is listed in the report.
EvalReport score(const Corpus& corpus, const PredictionSet& preds);

struct VariantSet {
  const Corpus* corpus = nullptr;
  const PredictionSet* preds = nullptr;
};

// Worst-performance-over-variants protocol: per base question the minimum
// score across all of its variants in all sets; a set that misses a base
// question contributes 0 for it. Variants resolve to base ids via metadata
// or the `<base-id>-adv<k>` id scheme; unknown base ids are an error.
EvalReport worst_case_score(const Corpus& base, const std::vector<VariantSet>& variant_sets);

// Diagnostic lexical-overlap predictor: picks the sentence with the highest
// stopword-filtered unigram overlap with the question, then returns the
// longest run (capped at 15 tokens) of that sentence containing no question
// token.
PredictionSet overlap_baseline_predict(const Corpus& corpus);

PredictionSet load_predictions(std::istream& in);
PredictionSet load_predictions_file(const std::string& path);
std::string predictions_to_json(const PredictionSet& preds);
std::string eval_report_to_json(const EvalReport& report);

}  // namespace advqa
