#include "dnc/report.hpp"

#include <sstream>

namespace dnc {

Report::Report(const std::string& command) { lines_.push_back("command: " + command); }

void Report::kv(const std::string& key, const std::string& value) {
  lines_.push_back(pad() + key + ": " + value);
}
void Report::kv(const std::string& key, long value) { kv(key, std::to_string(value)); }
void Report::kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
void Report::line(const std::string& text) { lines_.push_back(pad() + text); }

void Report::begin(const std::string& section) {
  lines_.push_back(pad() + section + ":");
  ++indent_;
}
void Report::end() {
  if (indent_ > 0) --indent_;
}

void Report::check(const std::string& name, bool ok) {
  has_checks_ = true;
  if (!ok) verdict_ = false;
  kv("check " + name, ok);
}

std::string Report::str(bool with_timing) const {
  std::ostringstream os;
  for (auto& l : lines_) os << l << "\n";
  if (has_checks_) os << "verdict: " << (verdict_ ? "pass" : "FAIL") << "\n";
  if (with_timing && timing_ms_ >= 0) os << "timing_ms: " << timing_ms_ << "\n";
  return os.str();
}

void report_cdga(Report& r, const std::string& name, const SemifreeCDGA& A) {
  r.begin(name);
  std::string base;
  for (int v = 0; v < A.nbase(); ++v) base += (v ? "," : "") + A.base()->name(v);
  r.kv("base", "Q[" + base + "]");
  for (size_t i = 0; i < A.gens().size(); ++i) {
    const GeneratorSpec& g = A.gens()[i];
    const Polynomial& d = A.diff_of_var(A.nbase() + static_cast<int>(i));
    std::ostringstream os;
    os << "gen " << g.name << "  hdeg=" << g.hdeg << " weight=" << g.weight
       << " d=" << d.str();
    r.line(os.str());
  }
  r.end();
}

void report_pi0(Report& r, const Pi0Presentation& p) {
  r.begin("pi0");
  std::string ring;
  for (int v = 0; v < p.ring->size(); ++v) ring += (v ? "," : "") + p.ring->name(v);
  r.kv("ring", "Q[" + ring + "]");
  if (p.gb.basis.empty()) {
    r.kv("basis", "(0)");
  } else {
    r.begin("basis");
    for (auto& g : p.gb.basis) r.line(g.str());
    r.end();
  }
  r.end();
}

void report_table(Report& r, const HomologyTable& t) {
  r.begin("homology");
  r.kv("cutoff", static_cast<long>(t.cutoff));
  r.kv("certified_band", static_cast<long>(t.certified_band));
  r.kv("homogenized", t.homogenized);
  for (auto& [key, dim] : t.dims) {
    if (dim == 0) continue;
    auto [k, w, d] = key;
    std::ostringstream os;
    os << "dim H_" << k << "(weight=" << w << ", deg=" << d << ") = " << dim;
    if (t.provisional(d)) os << "  (provisional)";
    r.line(os.str());
  }
  r.end();
}

}  // namespace dnc
