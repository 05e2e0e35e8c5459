#pragma once

#include <string_view>

namespace bmvoa {

/// Outcome of a verification. Numeric checks are inconclusive when their
/// error bound is too large to decide.
enum class Status { pass, fail, inconclusive };

constexpr std::string_view name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::inconclusive:
      return "inconclusive";
  }
  return "?";
}

/// Worst of two outcomes: fail beats inconclusive beats pass.
constexpr Status combine(Status a, Status b) {
  if (a == Status::fail || b == Status::fail) return Status::fail;
  if (a == Status::inconclusive || b == Status::inconclusive) return Status::inconclusive;
  return Status::pass;
}

constexpr Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

}  // namespace bmvoa
