#include "hkb/program.hpp"

#include <algorithm>
#include <sstream>

#include "hkb/error.hpp"

namespace hkb {

namespace {

void canonicalize(std::vector<AtomId>& atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

}  // namespace

GroundProgram::GroundProgram(SignatureRef sig, std::vector<Rule> rules)
    : sig_(std::move(sig)) {
  if (!sig_) throw ContractError("program requires a signature");
  const AtomId limit = static_cast<AtomId>(sig_->atom_count());
  rules_.reserve(rules.size());
  for (Rule& r : rules) {
    canonicalize(r.positive);
    canonicalize(r.negative);
    if (r.head >= limit || (!r.positive.empty() && r.positive.back() >= limit) ||
        (!r.negative.empty() && r.negative.back() >= limit))
      throw SignatureError("rule mentions atoms outside the signature");
    if (std::find(rules_.begin(), rules_.end(), r) == rules_.end())
      rules_.push_back(std::move(r));
  }
}

bool GroundProgram::definite() const {
  for (const Rule& r : rules_)
    if (!r.definite()) return false;
  return true;
}

Rule make_rule(const Signature& sig, std::string_view head,
               std::span<const std::string> positive, std::span<const std::string> negative) {
  Rule r;
  r.head = sig.atom_id(head);
  for (const std::string& a : positive) r.positive.push_back(sig.atom_id(a));
  for (const std::string& a : negative) r.negative.push_back(sig.atom_id(a));
  std::sort(r.positive.begin(), r.positive.end());
  std::sort(r.negative.begin(), r.negative.end());
  return r;
}

std::string to_string(const Rule& rule, const Signature& sig) {
  std::ostringstream out;
  out << sig.atom(rule.head).text;
  if (!rule.fact()) {
    out << " :- ";
    bool first = true;
    for (AtomId a : rule.positive) {
      if (!first) out << ", ";
      first = false;
      out << sig.atom(a).text;
    }
    for (AtomId a : rule.negative) {
      if (!first) out << ", ";
      first = false;
      out << "not " << sig.atom(a).text;
    }
  }
  out << '.';
  return out.str();
}

}  // namespace hkb
