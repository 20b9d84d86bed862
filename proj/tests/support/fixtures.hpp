#pragma once

#include <map>
#include <utility>

#include "krc/affine_crystal.hpp"

namespace fixtures {

inline const krc::AffineCrystal& crystal(int n, int s) {
  static std::map<std::pair<int, int>, krc::AffineCrystal> cache;
  auto key = std::make_pair(n, s);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, krc::assemble(n, s)).first;
  return it->second;
}

}  // namespace fixtures
