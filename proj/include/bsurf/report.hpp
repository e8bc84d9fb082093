#pragma once

#include <string>
#include <vector>

namespace bsurf {

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string v) { violations.push_back(std::move(v)); }
};

enum class Verdict { Yes, No, Refused };

/// Outcome of a decision procedure. `witness` is filled on Yes,
/// `obstruction` on No/Refused.
struct Decision {
  Verdict verdict = Verdict::No;
  std::string witness;
  std::string obstruction;

  bool yes() const { return verdict == Verdict::Yes; }
  static Decision make_yes(std::string w) { return {Verdict::Yes, std::move(w), {}}; }
  static Decision make_no(std::string o) { return {Verdict::No, {}, std::move(o)}; }
  static Decision refuse(std::string o) { return {Verdict::Refused, {}, std::move(o)}; }
};

}  // namespace bsurf
