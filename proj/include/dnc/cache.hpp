#pragma once
#include <string>

#include "dnc/groebner.hpp"

namespace dnc {

// Persistent on-disk Groebner cache. Entries carry a format version and the
// full canonical input; a mismatched or unreadable file is ignored with a
// warning on stderr and the basis is recomputed. Writes go through a
// temporary file and an atomic rename so concurrent processes stay safe.
class FileGroebnerCache : public GroebnerCacheBase {
 public:
  explicit FileGroebnerCache(std::string directory);

  bool lookup(const std::vector<Polynomial>& gens, const MonomialOrder& order,
              GroebnerBasis* out) override;
  void store(const std::vector<Polynomial>& gens, const MonomialOrder& order,
             const GroebnerBasis& gb) override;

  const std::string& directory() const { return dir_; }

  static std::string default_directory();  // DNC_CACHE_DIR or .dnc_cache

 private:
  std::string entry_path(const std::vector<Polynomial>& gens, const MonomialOrder& order) const;
  std::string dir_;
};

}  // namespace dnc
