#include "dnc/variables.hpp"

#include <algorithm>

namespace dnc {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::MixedRings: return "MixedRings";
    case Errc::ZeroSaturant: return "ZeroSaturant";
    case Errc::UnknownVariable: return "UnknownVariable";
    case Errc::DuplicateVariable: return "DuplicateVariable";
    case Errc::DSquareNonzero: return "DSquareNonzero";
    case Errc::WeightMismatch: return "WeightMismatch";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotDegreeZero: return "NotDegreeZero";
    case Errc::BaseMismatch: return "BaseMismatch";
    case Errc::NameCollision: return "NameCollision";
    case Errc::CellNotCancellable: return "CellNotCancellable";
    case Errc::CutoffTooSmall: return "CutoffTooSmall";
    case Errc::EmptyCenter: return "EmptyCenter";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::ParseError: return "ParseError";
    case Errc::CorruptCache: return "CorruptCache";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

VariableContext::VariableContext(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) fail(Errc::DuplicateVariable, "variable '" + names_[i] + "' declared twice");
  }
}

int VariableContext::index_of(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VariableContext>(std::move(names));
}

std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  if (!used(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!used(candidate)) return candidate;
  }
}

}  // namespace dnc
