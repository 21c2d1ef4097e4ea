#pragma once

#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "hkb/signature.hpp"

namespace hkb {

// One Herbrand world: the set of ground atoms it makes true. Immutable value.
class Interpretation {
 public:
  Interpretation(SignatureRef sig, WorldMask bits = 0);

  static Interpretation of_atoms(SignatureRef sig,
                                 std::initializer_list<std::string_view> rendered);

  const SignatureRef& signature() const { return sig_; }
  WorldMask bits() const { return bits_; }

  bool contains(AtomId id) const;
  std::vector<AtomId> true_atoms() const;

  friend bool operator==(const Interpretation& a, const Interpretation& b) {
    return a.bits_ == b.bits_ && a.sig_->same_as(*b.sig_);
  }

 private:
  SignatureRef sig_;
  WorldMask bits_;
};

// A set of worlds over one signature. Nonempty sets are the MKNF interpretations;
// the empty set is representable but is never reported as a model. Worlds are kept
// sorted and deduplicated, so equality is extensional.
class InterpretationSet {
 public:
  InterpretationSet(SignatureRef sig, std::vector<WorldMask> worlds);

  static InterpretationSet empty(SignatureRef sig);

  // The full world set (2^n members).
  static InterpretationSet all(SignatureRef sig, int max_atoms = kDefaultAtomBudget);

  const SignatureRef& signature() const { return sig_; }
  std::span<const WorldMask> worlds() const { return worlds_; }
  std::size_t size() const { return worlds_.size(); }
  bool empty() const { return worlds_.empty(); }

  bool contains(WorldMask w) const;
  Interpretation member(std::size_t index) const;

  // AND over all members; the full mask for the empty set. Bit a set means the
  // atom a is true in every member.
  WorldMask known_true_mask() const;

  // OR over all members; zero for the empty set.
  WorldMask possible_mask() const;

  friend bool operator==(const InterpretationSet& a, const InterpretationSet& b) {
    return a.worlds_ == b.worlds_ && a.sig_->same_as(*b.sig_);
  }

 private:
  SignatureRef sig_;
  std::vector<WorldMask> worlds_;
};

}  // namespace hkb
