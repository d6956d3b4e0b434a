#pragma once
#include <string>
#include <vector>

#include "dnc/cdga.hpp"
#include "dnc/homology.hpp"

namespace dnc {

// Deterministic, indentation-structured text report. Two runs on the same
// input produce byte-identical output apart from the timing line, which is
// appended last and excluded from golden comparisons.
class Report {
 public:
  explicit Report(const std::string& command);

  void kv(const std::string& key, const std::string& value);
  void kv(const std::string& key, long value);
  void kv(const std::string& key, bool value);
  void line(const std::string& text);
  void begin(const std::string& section);
  void end();

  void check(const std::string& name, bool ok);  // records a named verdict line
  bool passed() const { return verdict_; }
  bool has_checks() const { return has_checks_; }

  void set_timing_ms(long ms) { timing_ms_ = ms; }
  std::string str(bool with_timing = true) const;

 private:
  std::string pad() const { return std::string(static_cast<size_t>(indent_) * 2, ' '); }
  std::vector<std::string> lines_;
  int indent_ = 0;
  bool verdict_ = true;
  bool has_checks_ = false;
  long timing_ms_ = -1;
};

void report_cdga(Report& r, const std::string& name, const SemifreeCDGA& A);
void report_pi0(Report& r, const Pi0Presentation& p);
void report_table(Report& r, const HomologyTable& t);

}  // namespace dnc
