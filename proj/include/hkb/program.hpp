#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hkb/signature.hpp"

namespace hkb {

// A ground normal rule: head <- positive body, negated body atoms.
struct Rule {
  AtomId head = 0;
  std::vector<AtomId> positive;  // sorted, unique
  std::vector<AtomId> negative;  // sorted, unique

  bool definite() const { return negative.empty(); }
  bool fact() const { return positive.empty() && negative.empty(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
};

class GroundProgram {
 public:
  explicit GroundProgram(SignatureRef sig, std::vector<Rule> rules = {});

  const SignatureRef& signature() const { return sig_; }
  std::span<const Rule> rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }
  bool definite() const;

  friend bool operator==(const GroundProgram& a, const GroundProgram& b) {
    return a.rules_ == b.rules_ && a.sig_->same_as(*b.sig_);
  }

 private:
  SignatureRef sig_;
  std::vector<Rule> rules_;  // input order, duplicates removed
};

// Resolves rendered atom texts ("p", "P(c,d)") against the signature.
Rule make_rule(const Signature& sig, std::string_view head,
               std::span<const std::string> positive, std::span<const std::string> negative);

std::string to_string(const Rule& rule, const Signature& sig);

}  // namespace hkb
