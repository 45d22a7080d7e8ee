#include "advqa/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace advqa {

namespace {

double lookup(const std::map<std::size_t, std::size_t>& counts, std::size_t key,
              std::size_t total) {
  if (total == 0) return 0.0;
  const auto it = counts.find(key);
  return it == counts.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(total);
}

}  // namespace

double PlacementDistribution::p_x(std::size_t a) const { return lookup(marginal.x, a, total); }
double PlacementDistribution::p_y(std::size_t b) const { return lookup(marginal.y, b, total); }

PlacementDistribution location_distributions(const Corpus& corpus,
                                             DistributionSubject subject) {
  PlacementDistribution dist;
  dist.subject = subject;
  for (const Article& article : corpus.articles) {
    for (const Paragraph& para : article.paragraphs) {
      const std::size_t n = para.sentences.size();
      if (n == 0) continue;
      for (const QA& qa : para.qas) {
        std::size_t x = 0;
        if (subject == DistributionSubject::kDistractor) {
          if (!qa.meta) continue;
          x = std::min(qa.meta->distractor.insertion_index, n);
          if (x == 0) continue;
        } else {
          if (qa.answers.empty()) continue;
          x = answer_sentence_index(para, qa.answers[0]).x;
        }
        const std::size_t y = n - x;
        dist.marginal.add(x, y);
        dist.by_n[n].add(x, y);
        ++dist.total;
      }
    }
  }
  if (subject == DistributionSubject::kDistractor && dist.total == 0)
    throw ValidationError(
        "location_distributions: corpus carries no distractor metadata (x_meta)");
  return dist;
}

SuspicionVector sentence_suspicion(const PlacementDistribution& dist, std::size_t n,
                                   bool conditioned) {
  if (n < 1) throw std::invalid_argument("sentence_suspicion: n must be >= 1");
  SuspicionVector v;
  v.n = n;
  v.values.resize(n, 0.0);
  if (conditioned) {
    const auto it = dist.by_n.find(n);
    if (it == dist.by_n.end())
      throw std::invalid_argument("sentence_suspicion: no paragraphs of length " +
                                  std::to_string(n));
    const IndexCounts& c = it->second;
    for (std::size_t a = 1; a <= n; ++a)
      v.values[a - 1] = lookup(c.x, a, c.total) + lookup(c.y, n - a, c.total);
  } else {
    for (std::size_t a = 1; a <= n; ++a) v.values[a - 1] = dist.p_x(a) + dist.p_y(n - a);
  }
  return v;
}

SuspicionVector aggregate_suspicion(const PlacementDistribution& dist, std::size_t n_max) {
  if (n_max < 1) throw std::invalid_argument("aggregate_suspicion: n_max must be >= 1");
  std::size_t total = 0;
  for (const auto& [n, counts] : dist.by_n)
    if (n <= n_max) total += counts.total;
  if (total == 0)
    throw std::invalid_argument("aggregate_suspicion: no paragraphs with length <= " +
                                std::to_string(n_max));
  SuspicionVector out;
  out.n = n_max;
  out.values.resize(n_max, 0.0);
  for (const auto& [n, counts] : dist.by_n) {
    if (n > n_max) continue;
    const double w = static_cast<double>(counts.total) / static_cast<double>(total);
    const SuspicionVector cond = sentence_suspicion(dist, n, /*conditioned=*/true);
    for (std::size_t a = 0; a < cond.values.size(); ++a) out.values[a] += w * cond.values[a];
  }
  return out;
}

double uniformity_score(const SuspicionVector& v) {
  if (v.values.empty()) throw std::invalid_argument("uniformity_score: empty vector");
  double sum = 0.0;
  for (double x : v.values) {
    if (x < 0.0) throw std::invalid_argument("uniformity_score: negative entry");
    sum += x;
  }
  if (sum <= 0.0) throw std::invalid_argument("uniformity_score: zero vector");
  const double uniform = 1.0 / static_cast<double>(v.values.size());
  double tv = 0.0;
  for (double x : v.values) tv += std::abs(x / sum - uniform);
  return 0.5 * tv;
}

std::map<std::size_t, std::size_t> paragraph_length_histogram(const Corpus& corpus) {
  std::map<std::size_t, std::size_t> hist;
  for (const Article& article : corpus.articles)
    for (const Paragraph& para : article.paragraphs) ++hist[para.sentences.size()];
  return hist;
}

std::string distribution_to_csv(const PlacementDistribution& dist) {
  std::ostringstream out;
  out << "n,a,p_x,p_y,p_sa\n";
  out.precision(10);
  for (const auto& [n, counts] : dist.by_n) {
    for (std::size_t a = 1; a <= n; ++a) {
      const double px = lookup(counts.x, a, counts.total);
      const double py = lookup(counts.y, n - a, counts.total);
      out << n << ',' << a << ',' << px << ',' << py << ',' << (px + py) << '\n';
    }
  }
  return out.str();
}

}  // namespace advqa
