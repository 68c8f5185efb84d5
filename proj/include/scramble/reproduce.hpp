#pragma once

#include <string>
#include <vector>

namespace scramble {

/// One line of a reproduction run: a named quantity, the value the tool
/// computed, and the value it is pinned to.
struct ReproCheck {
  std::string what;
  std::string got;
  std::string expected;
  bool pass = false;
};

struct ReproReport {
  std::string target;
  std::vector<ReproCheck> checks;
  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return !checks.empty();
  }
};

/// Known targets: fig1-sn3, fig6-width2, w5, k7c7, lemma41, lemma42,
/// corollary23. Each bundles the pinned values for one verification run.
ReproReport reproduce(const std::string& target, int threads = 1);

std::vector<std::string> reproduce_targets();

}  // namespace scramble
