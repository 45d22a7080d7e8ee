#include "advqa/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "advqa/utf8.hpp"
#include "json.hpp"

namespace advqa {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

bool is_ws(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v';
}
bool is_upper(char32_t c) { return c >= U'A' && c <= U'Z'; }
bool is_digit(char32_t c) { return c >= U'0' && c <= U'9'; }
bool is_alnum(char32_t c) {
  return is_digit(c) || is_upper(c) || (c >= U'a' && c <= U'z') || c >= 0x80;
}

// Tokens that end in '.' but do not close a sentence. Single initials
// ("J.", "K.") are covered by the generated A.-Z. entries.
const std::unordered_set<std::string>& abbreviations() {
  static const std::unordered_set<std::string> set = [] {
    std::unordered_set<std::string> s = {
        "Dr.",  "Mr.",  "Mrs.",  "Ms.",   "Prof.", "St.",   "Mt.",  "No.",
        "Jr.",  "Sr.",  "vs.",   "etc.",  "e.g.",  "i.e.",  "cf.",  "al.",
        "U.S.", "U.K.", "U.N.",  "U.S.A.", "D.C.", "Inc.",  "Ltd.", "Co.",
        "Corp.", "Gen.", "Col.", "Sgt.",  "Capt.", "Lt.",   "Rev.", "Hon.",
        "Fig.", "Vol.", "Dept.", "est.",  "ca.",   "Jan.",  "Feb.", "Mar.",
        "Apr.", "Jun.", "Jul.",  "Aug.",  "Sep.",  "Sept.", "Oct.", "Nov.",
        "Dec.", "a.m.", "p.m.",
    };
    for (char c = 'A'; c <= 'Z'; ++c) s.insert(std::string(1, c) + ".");
    return s;
  }();
  return set;
}

// The non-whitespace run ending at the '.' at `dot`, leading brackets and
// quotes stripped, e.g. ("e.g. -> e.g.
bool dot_ends_abbreviation(const std::vector<char32_t>& cps, std::size_t dot) {
  std::size_t tok_start = dot;
  while (tok_start > 0 && !is_ws(cps[tok_start - 1])) --tok_start;
  while (tok_start < dot && !is_alnum(cps[tok_start])) ++tok_start;
  std::string token;
  for (std::size_t i = tok_start; i <= dot; ++i) {
    if (cps[i] < 0x80) {
      token += static_cast<char>(cps[i]);
    } else {
      return false;  // non-ASCII tokens are never treated as abbreviations
    }
  }
  return abbreviations().count(token) > 0;
}

std::vector<char32_t> decode(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) cps.push_back(utf8::decode_at(s, i));
  return cps;
}

// ---- JSON helpers -----------------------------------------------------------

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw ParseError(path + ": expected object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(path + ": missing '" + key + "'");
  return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_string()) throw ParseError(path + "." + key + ": expected string");
  return v.get<std::string>();
}

std::uint64_t require_uint(const json& obj, const char* key, const std::string& path) {
  const json& v = require(obj, key, path);
  if (!v.is_number_integer() || (v.is_number_integer() && v.get<long long>() < 0 && !v.is_number_unsigned()))
    throw ParseError(path + "." + key + ": expected non-negative integer");
  return v.get<std::uint64_t>();
}

ordered_json record_to_json(const DistractorRecord& r) {
  ordered_json j;
  j["base_qa_id"] = r.base_qa_id;
  j["perturbed_question"] = r.perturbed_question;
  j["fake_answer"] = r.fake_answer;
  j["statement"] = r.statement;
  j["strategy"] = r.strategy.str();
  j["insertion_index"] = r.insertion_index;
  ordered_json perts = ordered_json::array();
  for (const Perturbation& p : r.perturbations) {
    ordered_json pj;
    pj["kind"] = to_string(p.kind);
    pj["original"] = p.original;
    pj["replacement"] = p.replacement;
    pj["position"] = p.position;
    perts.push_back(std::move(pj));
  }
  j["perturbations"] = std::move(perts);
  j["seed"] = r.seed;
  j["unperturbed"] = r.unperturbed;
  return j;
}

DistractorRecord record_from_json(const json& j, const std::string& path) {
  DistractorRecord r;
  r.base_qa_id = require_string(j, "base_qa_id", path);
  r.perturbed_question = require_string(j, "perturbed_question", path);
  r.fake_answer = require_string(j, "fake_answer", path);
  r.statement = require_string(j, "statement", path);
  auto strat = PlacementStrategy::parse(require_string(j, "strategy", path));
  if (!strat) throw ParseError(path + ".strategy: unknown placement strategy");
  r.strategy = *strat;
  r.insertion_index = require_uint(j, "insertion_index", path);
  if (auto it = j.find("perturbations"); it != j.end()) {
    if (!it->is_array()) throw ParseError(path + ".perturbations: expected array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const json& pj = (*it)[i];
      const std::string ppath = path + ".perturbations[" + std::to_string(i) + "]";
      Perturbation p;
      const std::string kind = require_string(pj, "kind", ppath);
      if (kind == "ANTONYM_SWAP") p.kind = PerturbationKind::kAntonymSwap;
      else if (kind == "ENTITY_SWAP") p.kind = PerturbationKind::kEntitySwap;
      else if (kind == "NUMBER_SWAP") p.kind = PerturbationKind::kNumberSwap;
      else throw ParseError(ppath + ".kind: unknown perturbation kind");
      p.original = require_string(pj, "original", ppath);
      p.replacement = require_string(pj, "replacement", ppath);
      p.position = require_uint(pj, "position", ppath);
      r.perturbations.push_back(std::move(p));
    }
  }
  if (auto it = j.find("seed"); it != j.end()) r.seed = it->get<std::uint64_t>();
  if (auto it = j.find("unperturbed"); it != j.end()) r.unperturbed = it->get<bool>();
  return r;
}

}  // namespace

std::size_t Corpus::paragraph_count() const {
  std::size_t n = 0;
  for (const Article& a : articles) n += a.paragraphs.size();
  return n;
}

std::size_t Corpus::qa_count() const {
  std::size_t n = 0;
  for (const Article& a : articles)
    for (const Paragraph& p : a.paragraphs) n += p.qas.size();
  return n;
}

std::string ValidationReport::to_json_lines() const {
  std::string out;
  for (const ValidationFinding& f : findings) {
    ordered_json j;
    j["qa_id"] = f.qa_id;
    j["message"] = f.message;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::vector<SentenceSpan> segment_sentences(std::string_view context) {
  const std::vector<char32_t> cps = decode(context);
  const std::size_t n = cps.size();
  std::vector<SentenceSpan> spans;

  std::size_t i = 0;
  while (i < n) {
    while (i < n && is_ws(cps[i])) ++i;
    if (i >= n) break;
    const std::size_t start = i;
    std::size_t end = 0;
    bool split = false;
    for (std::size_t j = start; j < n; ++j) {
      const char32_t c = cps[j];
      if (c != U'.' && c != U'!' && c != U'?') continue;
      std::size_t k = j + 1;
      if (k >= n || !is_ws(cps[k])) continue;
      while (k < n && is_ws(cps[k])) ++k;
      if (k >= n || (!is_upper(cps[k]) && !is_digit(cps[k]))) continue;
      if (c == U'.' && dot_ends_abbreviation(cps, j)) continue;
      end = j + 1;
      split = true;
      break;
    }
    if (!split) {
      end = n;
      while (end > start && is_ws(cps[end - 1])) --end;
    }
    spans.push_back({start, end});
    i = end;
  }
  return spans;
}

SentenceIndex answer_sentence_index(const Paragraph& paragraph, const Answer& answer) {
  const std::size_t pos = answer.answer_start;
  const std::size_t n = paragraph.sentences.size();
  if (n == 0) throw ValidationError("answer_sentence_index: paragraph has no sentences");
  if (pos >= utf8::cp_length(paragraph.context))
    throw ValidationError("answer_sentence_index: answer_start " + std::to_string(pos) +
                          " outside context");
  for (std::size_t i = 0; i < n; ++i) {
    const SentenceSpan& s = paragraph.sentences[i];
    if (pos >= s.start && pos < s.end) return {i + 1, n - (i + 1)};
  }
  // answer_start sits in inter-span whitespace; snap to the following span.
  for (std::size_t i = 0; i < n; ++i) {
    if (pos < paragraph.sentences[i].start) return {i + 1, n - (i + 1)};
  }
  return {n, 0};
}

namespace {

Corpus corpus_from_json(const json& root) {
  Corpus corpus;
  if (auto it = root.find("version"); it != root.end() && it->is_string())
    corpus.version = it->get<std::string>();
  const json& data = require(root, "data", "$");
  if (!data.is_array()) throw ParseError("$.data: expected array");

  std::vector<std::string> bad_qas;
  for (std::size_t ai = 0; ai < data.size(); ++ai) {
    const std::string apath = "$.data[" + std::to_string(ai) + "]";
    Article article;
    if (auto it = data[ai].find("title"); it != data[ai].end() && it->is_string())
      article.title = it->get<std::string>();
    const json& paragraphs = require(data[ai], "paragraphs", apath);
    if (!paragraphs.is_array()) throw ParseError(apath + ".paragraphs: expected array");
    for (std::size_t pi = 0; pi < paragraphs.size(); ++pi) {
      const std::string ppath = apath + ".paragraphs[" + std::to_string(pi) + "]";
      Paragraph para;
      para.context = require_string(paragraphs[pi], "context", ppath);
      para.sentences = segment_sentences(para.context);
      const json& qas = require(paragraphs[pi], "qas", ppath);
      if (!qas.is_array()) throw ParseError(ppath + ".qas: expected array");
      for (std::size_t qi = 0; qi < qas.size(); ++qi) {
        const std::string qpath = ppath + ".qas[" + std::to_string(qi) + "]";
        QA qa;
        qa.id = require_string(qas[qi], "id", qpath);
        qa.question = require_string(qas[qi], "question", qpath);
        const json& answers = require(qas[qi], "answers", qpath);
        if (!answers.is_array()) throw ParseError(qpath + ".answers: expected array");
        for (std::size_t ci = 0; ci < answers.size(); ++ci) {
          const std::string cpath = qpath + ".answers[" + std::to_string(ci) + "]";
          Answer ans;
          ans.text = require_string(answers[ci], "text", cpath);
          ans.answer_start = require_uint(answers[ci], "answer_start", cpath);
          if (utf8::cp_substr(para.context, ans.answer_start, utf8::cp_length(ans.text)) !=
              ans.text)
            bad_qas.push_back(qa.id);
          qa.answers.push_back(std::move(ans));
        }
        if (auto it = qas[qi].find("x_meta"); it != qas[qi].end()) {
          AdversarialMeta meta;
          meta.variant_of = require_string(*it, "variant_of", qpath + ".x_meta");
          meta.variant_index =
              static_cast<int>(require_uint(*it, "variant_index", qpath + ".x_meta"));
          meta.distractor =
              record_from_json(require(*it, "distractor", qpath + ".x_meta"),
                               qpath + ".x_meta.distractor");
          qa.meta = std::move(meta);
        }
        para.qas.push_back(std::move(qa));
      }
      article.paragraphs.push_back(std::move(para));
    }
    corpus.articles.push_back(std::move(article));
  }

  if (!bad_qas.empty()) {
    std::sort(bad_qas.begin(), bad_qas.end());
    bad_qas.erase(std::unique(bad_qas.begin(), bad_qas.end()), bad_qas.end());
    std::string msg = "answer offset mismatch for " + std::to_string(bad_qas.size()) + " qa(s):";
    for (const std::string& id : bad_qas) msg += " " + id;
    throw ValidationError(msg);
  }
  return corpus;
}

}  // namespace

Corpus load_corpus(std::istream& in) {
  json root;
  try {
    root = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return corpus_from_json(root);
}

Corpus load_corpus_from_string(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return corpus_from_json(root);
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  return load_corpus(in);
}

std::string corpus_to_json(const Corpus& corpus) {
  ordered_json root;
  root["version"] = corpus.version;
  ordered_json data = ordered_json::array();
  for (const Article& article : corpus.articles) {
    ordered_json aj;
    aj["title"] = article.title;
    ordered_json paragraphs = ordered_json::array();
    for (const Paragraph& para : article.paragraphs) {
      ordered_json pj;
      pj["context"] = para.context;
      ordered_json qas = ordered_json::array();
      for (const QA& qa : para.qas) {
        ordered_json qj;
        qj["id"] = qa.id;
        qj["question"] = qa.question;
        ordered_json answers = ordered_json::array();
        for (const Answer& ans : qa.answers) {
          ordered_json cj;
          cj["text"] = ans.text;
          cj["answer_start"] = ans.answer_start;
          answers.push_back(std::move(cj));
        }
        qj["answers"] = std::move(answers);
        if (qa.meta) {
          ordered_json mj;
          mj["variant_of"] = qa.meta->variant_of;
          mj["variant_index"] = qa.meta->variant_index;
          mj["distractor"] = record_to_json(qa.meta->distractor);
          qj["x_meta"] = std::move(mj);
        }
        qas.push_back(std::move(qj));
      }
      pj["qas"] = std::move(qas);
      paragraphs.push_back(std::move(pj));
    }
    aj["paragraphs"] = std::move(paragraphs);
    data.push_back(std::move(aj));
  }
  root["data"] = std::move(data);
  return root.dump();
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
  out << corpus_to_json(corpus);
  if (!out) throw std::runtime_error("save_corpus: write failure");
}

ValidationReport validate(const Corpus& corpus) {
  ValidationReport report;
  std::unordered_set<std::string> seen_ids;
  for (const Article& article : corpus.articles) {
    for (const Paragraph& para : article.paragraphs) {
      // Sentence spans must match what segmentation produces for the context.
      if (para.sentences != segment_sentences(para.context))
        report.findings.push_back(
            {"", "paragraph sentence spans do not match segmentation of its context"});
      const std::size_t ctx_len = utf8::cp_length(para.context);
      for (const QA& qa : para.qas) {
        if (!seen_ids.insert(qa.id).second)
          report.findings.push_back({qa.id, "duplicate qa id"});
        for (std::size_t i = 0; i < qa.answers.size(); ++i) {
          const Answer& ans = qa.answers[i];
          const std::size_t len = utf8::cp_length(ans.text);
          if (ans.answer_start + len > ctx_len ||
              utf8::cp_substr(para.context, ans.answer_start, len) != ans.text) {
            report.findings.push_back(
                {qa.id, "answer " + std::to_string(i) + ": context substring at offset " +
                            std::to_string(ans.answer_start) + " does not equal answer text"});
          }
        }
        if (qa.meta) {
          const AdversarialMeta& m = *qa.meta;
          const std::string expect = m.variant_of + "-adv" + std::to_string(m.variant_index);
          if (m.variant_of.empty() || m.variant_index < 1 || qa.id != expect)
            report.findings.push_back(
                {qa.id, "variant metadata inconsistent with id scheme '<base-id>-adv<k>'"});
        }
      }
    }
  }
  return report;
}

}  // namespace advqa
