#pragma once

#include <cstddef>
#include <utility>

#include "advqa/adversary.hpp"
#include "advqa/corpus.hpp"
#include "advqa/distractor.hpp"
#include "advqa/rng.hpp"

namespace advqa {

// Splices `statement` into the context at a sentence boundary chosen by the
// strategy (slot i in 1..n+1; n+1 appends). Joins with a single space and
// shifts every gold answer at or after the splice point by
// len(statement) + 1 code points. Returns the new paragraph and the slot.
std::pair<Paragraph, std::size_t> insert_distractor(const Paragraph& paragraph,
                                                    const std::string& statement,
                                                    PlacementStrategy strategy, Rng& rng);

// Runs make_adversarial_variants over every question. The output corpus has
// one single-QA paragraph per variant; deterministic for a given
// (corpus, config) including under num_threads > 1.
std::pair<Corpus, GenerationLog> generate_adversarial_corpus(const Corpus& corpus,
                                                             const GenerationConfig& cfg,
                                                             const Lexicon& lex,
                                                             const FakeAnswerPool& pool,
                                                             const SynthesisRules& rules,
                                                             int num_threads = 1);

// Mixes adversarial questions into the original data so they make up
// `fraction` of the output QA count; selection is uniform without
// replacement and the paragraph order is shuffled, all driven by `rng`.
// Throws std::invalid_argument when the adversarial pool is too small.
Corpus mix_training(const Corpus& original, const Corpus& adversarial, double fraction,
                    Rng& rng);

}  // namespace advqa
