#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "advqa/answer_type.hpp"
#include "advqa/placement_strategy.hpp"

namespace advqa {

enum class PerturbationKind { kAntonymSwap, kEntitySwap, kNumberSwap };

inline const char* to_string(PerturbationKind k) {
  switch (k) {
    case PerturbationKind::kAntonymSwap: return "ANTONYM_SWAP";
    case PerturbationKind::kEntitySwap: return "ENTITY_SWAP";
    case PerturbationKind::kNumberSwap: return "NUMBER_SWAP";
  }
  return "ANTONYM_SWAP";
}

struct Perturbation {
  PerturbationKind kind = PerturbationKind::kAntonymSwap;
  std::string original;
  std::string replacement;
  std::size_t position = 0;  // token index into the base question

  bool operator==(const Perturbation&) const = default;
};

// Positions strictly increasing; replacement != original.
using PerturbationLog = std::vector<Perturbation>;

// Full provenance of one generated adversary. Serialized both into the
// generation log (one JSON line per record) and into the variant QA's
// metadata, so analysis can recover placement without re-deriving it.
struct DistractorRecord {
  std::string base_qa_id;
  std::string perturbed_question;
  std::string fake_answer;
  std::string statement;
  PlacementStrategy strategy;
  std::size_t insertion_index = 0;  // 1-based sentence slot in the new context
  PerturbationLog perturbations;
  std::uint64_t seed = 0;
  bool unperturbed = false;

  bool operator==(const DistractorRecord&) const = default;
};

enum class FakeAnswerMode { kFixed, kDynamic };
enum class SkipPolicy { kSkipAndLog, kFallbackTemplate };

struct GenerationConfig {
  int variants_per_question = 4;  // hard cap 16
  PlacementStrategy strategy = PlacementStrategy::random();
  FakeAnswerMode fake_answer_mode = FakeAnswerMode::kDynamic;
  std::uint64_t seed = 0;
  SkipPolicy skip_policy = SkipPolicy::kSkipAndLog;
  // Required in kFixed mode; one fake answer per type, supplied as JSON config.
  std::map<AnswerType, std::string> fixed_table;
};

inline constexpr int kMaxVariantsPerQuestion = 16;

}  // namespace advqa
