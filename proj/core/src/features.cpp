#include "advqa/features.hpp"

#include <set>

#include "advqa/strings.hpp"
#include "advqa/utf8.hpp"
#include "json.hpp"

namespace advqa {

namespace {

bool is_word_cp(char32_t c) {
  return (c >= U'0' && c <= U'9') || (c >= U'a' && c <= U'z') || (c >= U'A' && c <= U'Z') ||
         c >= 0x80;
}
bool is_ws_cp(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\f' || c == U'\v';
}

std::string encode_cp(char32_t c) {
  std::string out;
  if (c < 0x80) {
    out += static_cast<char>(c);
  } else if (c < 0x800) {
    out += static_cast<char>(0xC0 | (c >> 6));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else if (c < 0x10000) {
    out += static_cast<char>(0xE0 | (c >> 12));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (c >> 18));
    out += static_cast<char>(0x80 | ((c >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((c >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (c & 0x3F));
  }
  return out;
}

std::string encode_range(const std::vector<char32_t>& cps, std::size_t b, std::size_t e) {
  std::string out;
  for (std::size_t i = b; i < e; ++i) out += encode_cp(cps[i]);
  return out;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<char32_t> cps;
  cps.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) cps.push_back(utf8::decode_at(text, i));

  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    while (i < n && is_ws_cp(cps[i])) ++i;
    if (i >= n) break;
    std::size_t chunk_end = i;
    while (chunk_end < n && !is_ws_cp(cps[chunk_end])) ++chunk_end;

    std::size_t b = i, e = chunk_end;
    // Leading punctuation, one token per character.
    while (b < e && !is_word_cp(cps[b])) {
      tokens.push_back({encode_cp(cps[b]), b});
      ++b;
    }
    // Trailing punctuation; a final '.' stays attached when the token holds
    // another '.' ("U.S.").
    std::size_t core_end = e;
    while (core_end > b && !is_word_cp(cps[core_end - 1])) {
      if (cps[core_end - 1] == U'.') {
        bool internal_dot = false;
        for (std::size_t k = b; k + 1 < core_end; ++k)
          if (cps[k] == U'.') internal_dot = true;
        if (internal_dot) break;
      }
      --core_end;
    }
    if (core_end > b) tokens.push_back({encode_range(cps, b, core_end), b});
    for (std::size_t k = core_end; k < e; ++k) tokens.push_back({encode_cp(cps[k]), k});
    i = chunk_end;
  }
  return tokens;
}

namespace {

struct LemmaInfo {
  // Lemma-stripped case-folded form per token; lexicon lemma when one
  // resolves, the plain folded core otherwise. Empty for stopwords and
  // punctuation, which never receive bits.
  std::vector<std::string> lemmas;
  std::set<std::string> lemma_set;
};

LemmaInfo lemmatize(const std::vector<Token>& tokens, const Lexicon& lex) {
  LemmaInfo info;
  info.lemmas.reserve(tokens.size());
  for (const Token& t : tokens) {
    const std::string core = word_core(t.text);
    if (core.empty() || is_stopword(t.text)) {
      info.lemmas.emplace_back();
      continue;
    }
    const std::string lemma = lex.lemma_of(t.text).value_or(lower(core));
    info.lemmas.push_back(lemma);
    info.lemma_set.insert(lemma);
  }
  return info;
}

void fill_bits(const LemmaInfo& side, const std::set<std::string>& other_lemmas,
               const Lexicon& lex, std::vector<int>& syn, std::vector<int>& ant) {
  syn.assign(side.lemmas.size(), 0);
  ant.assign(side.lemmas.size(), 0);
  for (std::size_t i = 0; i < side.lemmas.size(); ++i) {
    const std::string& lemma = side.lemmas[i];
    if (lemma.empty()) continue;
    for (const std::string& s : lex.synonyms(lemma)) {
      if (other_lemmas.count(s) > 0) {
        syn[i] = 1;
        break;
      }
    }
    for (const std::string& a : lex.antonyms(lemma)) {
      if (other_lemmas.count(a) > 0) {
        ant[i] = 1;
        break;
      }
    }
  }
}

}  // namespace

FeatureAnnotations annotate_semantic_features(const Corpus& corpus, const Lexicon& lex) {
  FeatureAnnotations ann;
  for (const Article& article : corpus.articles) {
    for (const Paragraph& para : article.paragraphs) {
      const std::vector<Token> c_tokens = tokenize(para.context);
      const LemmaInfo c_info = lemmatize(c_tokens, lex);
      for (const QA& qa : para.qas) {
        const std::vector<Token> q_tokens = tokenize(qa.question);
        const LemmaInfo q_info = lemmatize(q_tokens, lex);
        QAFeatures f;
        fill_bits(q_info, c_info.lemma_set, lex, f.q_syn, f.q_ant);
        fill_bits(c_info, q_info.lemma_set, lex, f.c_syn, f.c_ant);
        ann.by_qa[qa.id] = std::move(f);
      }
    }
  }
  return ann;
}

std::string feature_annotations_to_json(const FeatureAnnotations& ann) {
  nlohmann::ordered_json root;
  root["tokenizer_version"] = ann.tokenizer_version;
  nlohmann::ordered_json features = nlohmann::ordered_json::object();
  for (const auto& [id, f] : ann.by_qa) {
    nlohmann::ordered_json fj;
    fj["q_syn"] = f.q_syn;
    fj["q_ant"] = f.q_ant;
    fj["c_syn"] = f.c_syn;
    fj["c_ant"] = f.c_ant;
    features[id] = std::move(fj);
  }
  root["features"] = std::move(features);
  return root.dump();
}

}  // namespace advqa
