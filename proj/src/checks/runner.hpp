#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include "assocform/checks.hpp"

namespace assocform::checks {

// Collects requirements and notes for one criterion. Details stay
// deterministic for fixed input and seed.
struct Ctx {
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void require(bool condition, const std::string& what) {
    if (!condition) failures.push_back(what);
  }
  void note(const std::string& text) { notes.push_back(text); }
};

template <typename Body>
CheckResult run_check(const std::string& id, const std::string& name, Body&& body) {
  Ctx ctx;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(ctx);
  } catch (const std::exception& e) {
    ctx.failures.push_back(std::string("unexpected exception: ") + e.what());
  }
  const auto stop = std::chrono::steady_clock::now();

  CheckResult result;
  result.id = id;
  result.name = name;
  result.pass = ctx.failures.empty();
  result.seconds = std::chrono::duration<double>(stop - start).count();
  std::ostringstream detail;
  for (std::size_t i = 0; i < ctx.notes.size(); ++i)
    detail << (i ? "; " : "") << ctx.notes[i];
  if (!ctx.failures.empty()) {
    detail << (ctx.notes.empty() ? "" : "; ") << ctx.failures.size() << " failure(s): ";
    const std::size_t shown = ctx.failures.size() < 4 ? ctx.failures.size() : 4;
    for (std::size_t i = 0; i < shown; ++i)
      detail << (i ? " | " : "") << ctx.failures[i];
    if (shown < ctx.failures.size()) detail << " | ...";
  }
  result.detail = detail.str();
  return result;
}

}  // namespace assocform::checks
