#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "advqa/corpus.hpp"

namespace advqa {

enum class DistributionSubject { kAnswerSentence, kDistractor };

struct IndexCounts {
  std::map<std::size_t, std::size_t> x;  // front index (1..n) -> count
  std::map<std::size_t, std::size_t> y;  // back index (0..n-1) -> count
  std::size_t total = 0;

  void add(std::size_t xi, std::size_t yi) {
    ++x[xi];
    ++y[yi];
    ++total;
  }
};

// Empirical distribution of the front/back location X, Y of either the
// answer sentence or the inserted distractor, with per-paragraph-length
// tables alongside the marginals (Y = n - X for each record).
struct PlacementDistribution {
  DistributionSubject subject = DistributionSubject::kAnswerSentence;
  IndexCounts marginal;
  std::map<std::size_t, IndexCounts> by_n;
  std::size_t total = 0;

  double p_x(std::size_t a) const;
  double p_y(std::size_t b) const;
};

// For kDistractor the corpus variants must carry distractor metadata;
// throws ValidationError when none is found.
PlacementDistribution location_distributions(const Corpus& corpus, DistributionSubject subject);

// values[a-1] = P(X=a) + P(Y=n-a) for a = 1..n. Conditioned on paragraph
// length n when `conditioned`, marginal tables otherwise.
struct SuspicionVector {
  std::size_t n = 0;
  std::vector<double> values;
};

SuspicionVector sentence_suspicion(const PlacementDistribution& dist, std::size_t n,
                                   bool conditioned);

// Count-weighted average of the conditional vectors over lengths <= n_max,
// zero-padded to length n_max. Throws when no paragraph qualifies.
SuspicionVector aggregate_suspicion(const PlacementDistribution& dist, std::size_t n_max);

// Total-variation distance from the uniform vector after normalization,
// in [0, 1]. Throws on an all-zero vector.
double uniformity_score(const SuspicionVector& v);

std::map<std::size_t, std::size_t> paragraph_length_histogram(const Corpus& corpus);

// CSV rows (n, a, p_x, p_y, p_sa) from the conditional tables, one block per
// paragraph length present in the corpus.
std::string distribution_to_csv(const PlacementDistribution& dist);

}  // namespace advqa
