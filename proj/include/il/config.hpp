#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>

namespace il {

/// Size bounds for the exponential routines. These are configuration; the
/// environment variable IL_ORACLE_LIMIT overrides the exact-oracle bounds.
struct limits {
  std::size_t alpha_exact_vertices = 40;
  std::size_t general_vertices = 40;
  std::size_t brute_force_vertices = 20;
  std::size_t domination_vertices = 20;
  std::size_t power_vertices = 1'000'000;
  std::size_t exact_treewidth_vertices = 15;

  static limits from_env() {
    limits l;
    if (const char* env = std::getenv("IL_ORACLE_LIMIT")) {
      try {
        std::size_t v = std::stoul(env);
        l.alpha_exact_vertices = v;
        l.general_vertices = v;
      } catch (...) {
        // unparsable values leave the defaults in place
      }
    }
    return l;
  }

  /// Effectively unbounded; for tests that pick their own sizes.
  static limits unbounded() {
    limits l;
    l.alpha_exact_vertices = 4096;
    l.general_vertices = 4096;
    l.brute_force_vertices = 30;
    l.domination_vertices = 4096;
    l.power_vertices = 1'000'000;
    l.exact_treewidth_vertices = 20;
    return l;
  }
};

inline const limits& default_limits() {
  static const limits l = limits::from_env();
  return l;
}

}  // namespace il
