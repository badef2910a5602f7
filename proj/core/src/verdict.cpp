#include "cwl/verdict.hpp"

#include <algorithm>

namespace cwl {

const char* to_string(Conclusion c) {
  switch (c) {
    case Conclusion::True: return "true";
    case Conclusion::False: return "false";
    case Conclusion::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::optional<bool> Verdict::flag(const std::string& name) const {
  for (const auto& [k, v] : flags)
    if (k == name) return v;
  return std::nullopt;
}

const Witness* Verdict::witness(const std::string& description) const {
  auto it = std::find_if(witnesses.begin(), witnesses.end(),
                         [&](const Witness& w) { return w.description == description; });
  return it == witnesses.end() ? nullptr : &*it;
}

void Verdict::add_witness(std::string description, const MonomialIdeal& ideal) {
  witnesses.push_back({std::move(description), "(" + to_string(ideal) + ")", ideal, std::nullopt,
                       std::nullopt});
}

void Verdict::add_witness(std::string description, const Monomial& m, const Ring& ring) {
  witnesses.push_back({std::move(description), to_string(m, ring), std::nullopt, m, std::nullopt});
}

void Verdict::add_witness(std::string description, long long degree) {
  witnesses.push_back(
      {std::move(description), std::to_string(degree), std::nullopt, std::nullopt, degree});
}

void Verdict::add_note(std::string description, std::string value) {
  witnesses.push_back({std::move(description), std::move(value), std::nullopt, std::nullopt,
                       std::nullopt});
}

void Verdict::set_flag(std::string name, bool value) {
  for (auto& [k, v] : flags)
    if (k == name) {
      v = value;
      return;
    }
  flags.emplace_back(std::move(name), value);
}

void Verdict::reject(std::string reason) {
  applicable = false;
  conclusion = Conclusion::Inconclusive;
  add_note("not applicable", std::move(reason));
}

}  // namespace cwl
