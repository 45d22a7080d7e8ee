#include "advqa/eval.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "advqa/features.hpp"
#include "advqa/lexicon.hpp"
#include "advqa/strings.hpp"
#include "advqa/utf8.hpp"
#include "json.hpp"

namespace advqa {

namespace {

bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') ||
         (c >= '{' && c <= '~');
}

std::vector<std::string> normalized_tokens(std::string_view s) {
  return split_ws(normalize_answer(s));
}

// Base id for a variant QA: metadata wins, the -adv<k> id suffix is the
// fallback. Empty when the id does not follow the scheme.
std::string base_id_of(const QA& qa) {
  if (qa.meta) return qa.meta->variant_of;
  const std::size_t pos = qa.id.rfind("-adv");
  if (pos == std::string::npos || pos + 4 >= qa.id.size()) return "";
  for (std::size_t i = pos + 4; i < qa.id.size(); ++i)
    if (qa.id[i] < '0' || qa.id[i] > '9') return "";
  return qa.id.substr(0, pos);
}

QAScore score_one(const QA& qa, const std::string& pred) {
  QAScore s;
  if (qa.answers.empty()) {
    s.f1 = f1(pred, "");
    s.em = em(pred, "");
    return s;
  }
  for (const Answer& a : qa.answers) {
    s.f1 = std::max(s.f1, f1(pred, a.text));
    s.em = std::max(s.em, em(pred, a.text));
  }
  return s;
}

}  // namespace

std::string normalize_answer(std::string_view s) {
  std::string stripped;
  stripped.reserve(s.size());
  for (char c : s) {
    if (is_ascii_punct(c)) continue;
    stripped += ascii_lower(c);
  }
  std::string out;
  for (const std::string& tok : split_ws(stripped)) {
    if (tok == "a" || tok == "an" || tok == "the") continue;
    if (!out.empty()) out += ' ';
    out += tok;
  }
  return out;
}

double f1(std::string_view pred, std::string_view gold) {
  const std::vector<std::string> p = normalized_tokens(pred);
  const std::vector<std::string> g = normalized_tokens(gold);
  if (p.empty() && g.empty()) return 1.0;
  if (p.empty() || g.empty()) return 0.0;
  std::unordered_map<std::string, std::size_t> gold_counts;
  for (const std::string& t : g) ++gold_counts[t];
  std::size_t common = 0;
  for (const std::string& t : p) {
    auto it = gold_counts.find(t);
    if (it != gold_counts.end() && it->second > 0) {
      ++common;
      --it->second;
    }
  }
  if (common == 0) return 0.0;
  const double precision = static_cast<double>(common) / static_cast<double>(p.size());
  const double recall = static_cast<double>(common) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

double em(std::string_view pred, std::string_view gold) {
  return normalize_answer(pred) == normalize_answer(gold) ? 1.0 : 0.0;
}

EvalReport score(const Corpus& corpus, const PredictionSet& preds) {
  EvalReport report;
  double sum_f1 = 0.0, sum_em = 0.0;
  for (const Article& article : corpus.articles) {
    for (const Paragraph& para : article.paragraphs) {
      for (const QA& qa : para.qas) {
        QAScore s;
        const auto it = preds.find(qa.id);
        if (it == preds.end()) {
          report.missing.push_back(qa.id);
        } else {
          s = score_one(qa, it->second);
        }
        report.per_question[qa.id] = s;
        sum_f1 += s.f1;
        sum_em += s.em;
        ++report.scored;
      }
    }
  }
  if (report.scored > 0) {
    report.macro_f1 = sum_f1 / static_cast<double>(report.scored);
    report.macro_em = sum_em / static_cast<double>(report.scored);
  }
  return report;
}

EvalReport worst_case_score(const Corpus& base, const std::vector<VariantSet>& variant_sets) {
  std::unordered_set<std::string> base_ids;
  for (const Article& a : base.articles)
    for (const Paragraph& p : a.paragraphs)
      for (const QA& qa : p.qas) base_ids.insert(qa.id);

  struct Agg {
    bool has_value = false;
    WorstCase wc;
    std::size_t sets_covering = 0;
  };
  std::map<std::string, Agg> agg;
  EvalReport report;

  for (const VariantSet& set : variant_sets) {
    std::set<std::string> covered;
    for (const Article& a : set.corpus->articles) {
      for (const Paragraph& p : a.paragraphs) {
        for (const QA& qa : p.qas) {
          const std::string bid = base_id_of(qa);
          if (bid.empty())
            throw ValidationError("worst_case_score: '" + qa.id +
                                  "' is not an adversarial variant (no -adv<k> id or metadata)");
          if (base_ids.count(bid) == 0)
            throw ValidationError("worst_case_score: variant '" + qa.id +
                                  "' references unknown base id '" + bid + "'");
          QAScore s;
          const auto it = set.preds->find(qa.id);
          if (it == set.preds->end()) {
            report.missing.push_back(qa.id);
          } else {
            s = score_one(qa, it->second);
          }
          Agg& entry = agg[bid];
          if (!entry.has_value || s.f1 < entry.wc.f1) {
            entry.wc.f1 = s.f1;
            entry.wc.argmin_id = qa.id;
          }
          if (!entry.has_value || s.em < entry.wc.em) entry.wc.em = s.em;
          entry.has_value = true;
          if (covered.insert(bid).second) ++entry.sets_covering;
        }
      }
    }
  }

  std::map<std::string, WorstCase> worst;
  double sum_f1 = 0.0, sum_em = 0.0;
  for (auto& [bid, entry] : agg) {
    // A set with no variant for this question contributes a zero.
    if (entry.sets_covering < variant_sets.size()) {
      entry.wc.f1 = 0.0;
      entry.wc.em = 0.0;
      entry.wc.argmin_id = "";
    }
    sum_f1 += entry.wc.f1;
    sum_em += entry.wc.em;
    worst[bid] = entry.wc;
  }
  report.scored = worst.size();
  if (!worst.empty()) {
    report.macro_f1 = sum_f1 / static_cast<double>(worst.size());
    report.macro_em = sum_em / static_cast<double>(worst.size());
  }
  report.worst_case = std::move(worst);
  return report;
}

PredictionSet overlap_baseline_predict(const Corpus& corpus) {
  PredictionSet preds;
  for (const Article& article : corpus.articles) {
    for (const Paragraph& para : article.paragraphs) {
      const std::vector<Token> ctx_tokens = tokenize(para.context);
      const std::size_t n_sents = para.sentences.size();

      // Word tokens per sentence, resolved by offset.
      std::vector<std::vector<const Token*>> sent_tokens(n_sents);
      for (const Token& t : ctx_tokens) {
        if (word_core(t.text).empty()) continue;
        for (std::size_t si = 0; si < n_sents; ++si) {
          if (t.start >= para.sentences[si].start && t.start < para.sentences[si].end) {
            sent_tokens[si].push_back(&t);
            break;
          }
        }
      }

      for (const QA& qa : para.qas) {
        std::set<std::string> q_content;  // stopword-filtered, for overlap
        std::set<std::string> q_all;      // every question word, for run breaking
        for (const Token& t : tokenize(qa.question)) {
          const std::string core = word_core(t.text);
          if (core.empty()) continue;
          const std::string low = lower(core);
          q_all.insert(low);
          if (!is_stopword(low)) q_content.insert(low);
        }

        std::size_t best_sent = 0, best_overlap = 0;
        for (std::size_t si = 0; si < n_sents; ++si) {
          std::set<std::string> seen;
          std::size_t overlap = 0;
          for (const Token* t : sent_tokens[si]) {
            const std::string low = lower(word_core(t->text));
            if (is_stopword(low) || q_content.count(low) == 0) continue;
            if (seen.insert(low).second) ++overlap;
          }
          if (overlap > best_overlap) {
            best_overlap = overlap;
            best_sent = si;
          }
        }

        std::string prediction;
        if (n_sents > 0) {
          const auto& toks = sent_tokens[best_sent];
          // Longest run of tokens sharing no word with the question, <= 15.
          std::size_t run_b = 0, run_len = 0, best_b = 0, best_len = 0;
          for (std::size_t i = 0; i <= toks.size(); ++i) {
            const bool breaks =
                i == toks.size() || q_all.count(lower(word_core(toks[i]->text))) > 0;
            if (breaks) {
              if (run_len > best_len) {
                best_len = run_len;
                best_b = run_b;
              }
              run_b = i + 1;
              run_len = 0;
            } else {
              ++run_len;
            }
          }
          if (best_len > 15) best_len = 15;
          if (best_len > 0) {
            const Token* first = toks[best_b];
            const Token* last = toks[best_b + best_len - 1];
            const std::size_t cp_begin = first->start;
            const std::size_t cp_end = last->start + utf8::cp_length(last->text);
            prediction = utf8::cp_substr(para.context, cp_begin, cp_end - cp_begin);
          }
        }
        preds[qa.id] = prediction;
      }
    }
  }
  return preds;
}

PredictionSet load_predictions(std::istream& in) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed predictions JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("predictions file: expected a JSON object");
  PredictionSet preds;
  for (const auto& [key, value] : root.items()) {
    if (!value.is_string())
      throw ParseError("predictions file: value for '" + key + "' is not a string");
    preds[key] = value.get<std::string>();
  }
  return preds;
}

PredictionSet load_predictions_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open predictions file: " + path);
  return load_predictions(in);
}

std::string predictions_to_json(const PredictionSet& preds) {
  nlohmann::ordered_json root = nlohmann::ordered_json::object();
  for (const auto& [id, text] : preds) root[id] = text;
  return root.dump();
}

std::string eval_report_to_json(const EvalReport& report) {
  nlohmann::ordered_json root;
  root["macro_f1"] = report.macro_f1;
  root["macro_em"] = report.macro_em;
  root["scored"] = report.scored;
  root["missing"] = report.missing;
  nlohmann::ordered_json per = nlohmann::ordered_json::object();
  for (const auto& [id, s] : report.per_question) {
    per[id] = {{"f1", s.f1}, {"em", s.em}};
  }
  root["per_question"] = std::move(per);
  if (report.worst_case) {
    nlohmann::ordered_json wc = nlohmann::ordered_json::object();
    for (const auto& [bid, w] : *report.worst_case) {
      wc[bid] = {{"f1", w.f1}, {"em", w.em}, {"argmin", w.argmin_id}};
    }
    root["worst_case"] = std::move(wc);
  }
  return root.dump();
}

}  // namespace advqa
