#pragma once

#include <optional>
#include <string_view>

namespace advqa {

// Declared in classification precedence order: DATE wins over NUMBER, etc.
enum class AnswerType { kDate, kNumber, kPerson, kLocation, kEntity, kCommon };

inline constexpr int kAnswerTypeCount = 6;

inline const char* to_string(AnswerType t) {
  switch (t) {
    case AnswerType::kDate: return "DATE";
    case AnswerType::kNumber: return "NUMBER";
    case AnswerType::kPerson: return "PERSON";
    case AnswerType::kLocation: return "LOCATION";
    case AnswerType::kEntity: return "ENTITY";
    case AnswerType::kCommon: return "COMMON";
  }
  return "COMMON";
}

inline std::optional<AnswerType> answer_type_from_string(std::string_view s) {
  if (s == "DATE") return AnswerType::kDate;
  if (s == "NUMBER") return AnswerType::kNumber;
  if (s == "PERSON") return AnswerType::kPerson;
  if (s == "LOCATION") return AnswerType::kLocation;
  if (s == "ENTITY") return AnswerType::kEntity;
  if (s == "COMMON") return AnswerType::kCommon;
  return std::nullopt;
}

}  // namespace advqa
