#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cwl/ideal.hpp"

namespace cwl {

enum class Conclusion { True, False, Inconclusive };

const char* to_string(Conclusion c);

inline Conclusion conclude(bool value) { return value ? Conclusion::True : Conclusion::False; }

/// One piece of evidence attached to a verdict. `value` is the rendered
/// form; the structured fields let a test re-run the failing sub-check.
struct Witness {
  std::string description;
  std::string value;
  std::optional<MonomialIdeal> ideal;
  std::optional<Monomial> monomial;
  std::optional<long long> degree;
};

/// Structured outcome of a criterion check.
///
/// `applicable == false` always comes with `conclusion == Inconclusive`.
/// `direct` holds the independent cross-check (usually a direct
/// componentwise-linearity test of the relevant sum) when one was run, and
/// `mismatch` is raised when a definite conclusion contradicts it.
struct Verdict {
  std::string criterion;
  bool applicable = false;
  Conclusion conclusion = Conclusion::Inconclusive;
  std::optional<bool> direct;
  bool mismatch = false;
  std::vector<Witness> witnesses;
  std::map<std::string, long long> bounds;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<std::pair<std::string, MonomialIdeal>> inputs;

  bool holds() const noexcept { return applicable && conclusion == Conclusion::True; }
  bool fails() const noexcept { return applicable && conclusion == Conclusion::False; }

  std::optional<bool> flag(const std::string& name) const;
  const Witness* witness(const std::string& description) const;

  void add_witness(std::string description, const MonomialIdeal& ideal);
  void add_witness(std::string description, const Monomial& m, const Ring& ring);
  void add_witness(std::string description, long long degree);
  void add_note(std::string description, std::string value);
  void set_flag(std::string name, bool value);

  /// Marks the verdict not applicable; the conclusion becomes inconclusive.
  void reject(std::string reason);
};

}  // namespace cwl
