#include "dnc/cache.hpp"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dnc/dsl.hpp"

namespace dnc {

namespace {

constexpr const char* kMagic = "dncgb 1";

std::string canonical_input(const std::vector<Polynomial>& gens, const MonomialOrder& order) {
  std::ostringstream os;
  os << "order " << order_name(order.kind) << " " << order.split << "\n";
  const ContextPtr& ctx = gens.empty() ? nullptr : gens[0].context();
  os << "ring";
  if (ctx)
    for (auto& n : ctx->names()) os << " " << n;
  os << "\n";
  os << "gens " << gens.size() << "\n";
  for (auto& g : gens) os << g.str() << "\n";
  return os.str();
}

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

FileGroebnerCache::FileGroebnerCache(std::string directory) : dir_(std::move(directory)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
}

std::string FileGroebnerCache::default_directory() {
  if (const char* env = std::getenv("DNC_CACHE_DIR")) return env;
  return ".dnc_cache";
}

std::string FileGroebnerCache::entry_path(const std::vector<Polynomial>& gens,
                                          const MonomialOrder& order) const {
  std::ostringstream os;
  os << dir_ << "/" << std::hex << fnv1a(canonical_input(gens, order)) << ".gb";
  return os.str();
}

bool FileGroebnerCache::lookup(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                               GroebnerBasis* out) {
  std::string path = entry_path(gens, order);
  std::ifstream in(path);
  if (!in) return false;
  try {
    std::string magic;
    std::getline(in, magic);
    if (magic != kMagic) fail(Errc::CorruptCache, "bad version in " + path);

    std::string expected = canonical_input(gens, order);
    std::istringstream want(expected);
    std::string line, wline;
    while (std::getline(want, wline)) {
      if (!std::getline(in, line) || line != wline)
        fail(Errc::CorruptCache, "input mismatch in " + path);
    }
    std::string header;
    if (!std::getline(in, header) || header.rfind("basis ", 0) != 0)
      fail(Errc::CorruptCache, "missing basis header in " + path);
    size_t count = std::stoul(header.substr(6));
    const ContextPtr& ctx = gens.empty() ? nullptr : gens[0].context();
    GroebnerBasis gb{ctx, order, {}};
    for (size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) fail(Errc::CorruptCache, "truncated basis in " + path);
      gb.basis.push_back(parse_polynomial(ctx, line));
    }
    *out = std::move(gb);
    return true;
  } catch (const Error& e) {
    std::cerr << "dnc: ignoring cache entry (" << e.what() << "), recomputing\n";
    return false;
  } catch (const std::exception& e) {
    std::cerr << "dnc: ignoring cache entry (" << e.what() << "), recomputing\n";
    return false;
  }
}

void FileGroebnerCache::store(const std::vector<Polynomial>& gens, const MonomialOrder& order,
                              const GroebnerBasis& gb) {
  std::string path = entry_path(gens, order);
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << kMagic << "\n" << canonical_input(gens, order);
    out << "basis " << gb.basis.size() << "\n";
    for (auto& g : gb.basis) out << g.str() << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace dnc
