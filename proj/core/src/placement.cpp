#include "advqa/placement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "advqa/utf8.hpp"

namespace advqa {

std::pair<Paragraph, std::size_t> insert_distractor(const Paragraph& paragraph,
                                                    const std::string& statement,
                                                    PlacementStrategy strategy, Rng& rng) {
  const std::size_t n = paragraph.sentences.size();
  if (n < 1) throw std::invalid_argument("insert_distractor: paragraph has no sentences");
  if (statement.empty() ||
      (statement.back() != '.' && statement.back() != '!' && statement.back() != '?'))
    throw std::invalid_argument("insert_distractor: statement must end with . ! or ?");

  std::size_t slot = 0;
  switch (strategy.kind) {
    case Placement::kAppend: slot = n + 1; break;
    case Placement::kPrepend: slot = 1; break;
    case Placement::kMiddle: slot = (n + 2) / 2; break;  // ceil((n+1)/2)
    case Placement::kRandom: slot = 1 + rng.below(n + 1); break;
    case Placement::kFixedIndex: slot = std::min(strategy.fixed_index, n + 1); break;
  }

  Paragraph out;
  out.qas = paragraph.qas;
  if (slot == n + 1) {
    out.context = paragraph.context + " " + statement;
  } else {
    const std::size_t splice_cp = paragraph.sentences[slot - 1].start;
    const std::size_t splice_byte = utf8::cp_to_byte(paragraph.context, splice_cp);
    out.context = paragraph.context.substr(0, splice_byte) + statement + " " +
                  paragraph.context.substr(splice_byte);
    const std::size_t shift = utf8::cp_length(statement) + 1;
    for (QA& qa : out.qas)
      for (Answer& a : qa.answers)
        if (a.answer_start >= splice_cp) a.answer_start += shift;
  }
  out.sentences = segment_sentences(out.context);

  for (const QA& qa : out.qas) {
    for (const Answer& a : qa.answers) {
      if (utf8::cp_substr(out.context, a.answer_start, utf8::cp_length(a.text)) != a.text)
        throw std::logic_error("insert_distractor: gold answer invalidated, this is a bug");
    }
  }
  return {std::move(out), slot};
}

std::pair<Corpus, GenerationLog> generate_adversarial_corpus(const Corpus& corpus,
                                                             const GenerationConfig& cfg,
                                                             const Lexicon& lex,
                                                             const FakeAnswerPool& pool,
                                                             const SynthesisRules& rules,
                                                             int num_threads) {
  struct Item {
    std::size_t article = 0;
    const Paragraph* para = nullptr;
    const QA* qa = nullptr;
  };
  std::vector<Item> items;
  for (std::size_t ai = 0; ai < corpus.articles.size(); ++ai)
    for (const Paragraph& p : corpus.articles[ai].paragraphs)
      for (const QA& qa : p.qas) items.push_back({ai, &p, &qa});

  std::vector<std::vector<VariantResult>> results(items.size());
  std::vector<GenerationLog> logs(items.size());

  auto worker = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      results[i] =
          make_adversarial_variants(*items[i].para, *items[i].qa, cfg, lex, pool, rules, logs[i]);
  };

  if (num_threads <= 1 || items.size() < 2) {
    worker(0, items.size());
  } else {
    const std::size_t workers = std::min<std::size_t>(num_threads, items.size());
    std::vector<std::thread> threads;
    const std::size_t chunk = (items.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(items.size(), begin + chunk);
      if (begin < end) threads.emplace_back(worker, begin, end);
    }
    for (std::thread& t : threads) t.join();
  }

  // Per-item result slots keep the merge order independent of thread count.
  Corpus out;
  out.version = corpus.version;
  out.articles.resize(corpus.articles.size());
  for (std::size_t ai = 0; ai < corpus.articles.size(); ++ai)
    out.articles[ai].title = corpus.articles[ai].title;

  GenerationLog merged;
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (VariantResult& vr : results[i])
      out.articles[items[i].article].paragraphs.push_back(std::move(vr.paragraph));
    merged.records.insert(merged.records.end(), logs[i].records.begin(), logs[i].records.end());
    merged.skips.insert(merged.skips.end(), logs[i].skips.begin(), logs[i].skips.end());
  }
  return {std::move(out), std::move(merged)};
}

Corpus mix_training(const Corpus& original, const Corpus& adversarial, double fraction,
                    Rng& rng) {
  if (fraction < 0.0 || fraction >= 1.0)
    throw std::invalid_argument("mix_training: fraction must be in [0, 1)");
  if (fraction == 0.0) return original;

  const std::size_t orig_count = original.qa_count();
  // Smallest k with k == round(fraction * (orig + k)).
  long long k = std::llround(fraction * static_cast<double>(orig_count) / (1.0 - fraction));
  for (long long c = std::max<long long>(0, k - 2); c <= k + 2; ++c) {
    if (std::llround(fraction * static_cast<double>(orig_count + c)) == c) {
      k = c;
      break;
    }
  }
  const auto need = static_cast<std::size_t>(std::max<long long>(k, 0));

  // Flatten the adversarial pool to one question per paragraph so selection
  // counts questions.
  std::vector<Paragraph> pool;
  for (const Article& a : adversarial.articles) {
    for (const Paragraph& p : a.paragraphs) {
      for (const QA& qa : p.qas) {
        Paragraph single;
        single.context = p.context;
        single.sentences = p.sentences;
        single.qas = {qa};
        pool.push_back(std::move(single));
      }
    }
  }
  if (pool.size() < need)
    throw std::invalid_argument("mix_training: adversarial pool too small, required " +
                                std::to_string(need) + " but only " +
                                std::to_string(pool.size()) + " available");

  // Uniform sample without replacement (partial Fisher-Yates over indices).
  std::vector<std::size_t> idx(pool.size());
  std::iota(idx.begin(), idx.end(), 0);
  for (std::size_t i = 0; i < need; ++i) {
    const std::size_t j = i + rng.below(idx.size() - i);
    std::swap(idx[i], idx[j]);
  }

  std::vector<Paragraph> all;
  for (const Article& a : original.articles)
    for (const Paragraph& p : a.paragraphs) all.push_back(p);
  for (std::size_t i = 0; i < need; ++i) all.push_back(std::move(pool[idx[i]]));
  rng.shuffle(all);

  Corpus out;
  out.version = original.version;
  Article mixed;
  mixed.title = "mixed-training";
  mixed.paragraphs = std::move(all);
  out.articles.push_back(std::move(mixed));
  return out;
}

}  // namespace advqa
