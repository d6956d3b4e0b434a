#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dnc/error.hpp"

namespace dnc {

// Ordered list of variable names. Declaration order is the variable
// precedence used by every monomial order in the engine.
class VariableContext {
 public:
  explicit VariableContext(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  // -1 if absent
  int index_of(const std::string& name) const;
  bool has(const std::string& name) const { return index_of(name) >= 0; }

  bool operator==(const VariableContext& o) const { return names_ == o.names_; }
  bool operator!=(const VariableContext& o) const { return !(*this == o); }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

ContextPtr make_context(std::vector<std::string> names);

inline bool same_ring(const ContextPtr& a, const ContextPtr& b) {
  return a == b || (a && b && *a == *b);
}

// name, name1, name2, ... first candidate not present in `taken`
std::string fresh_name(const std::vector<std::string>& taken, const std::string& stem);

}  // namespace dnc
