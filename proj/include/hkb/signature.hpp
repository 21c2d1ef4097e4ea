#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hkb {

using AtomId = std::uint32_t;

// A Herbrand world encoded as one bit per atom, indexed by the canonical atom order.
using WorldMask = std::uint64_t;

inline constexpr int kDefaultAtomBudget = 20;

// Hard ceiling regardless of the configured budget: world enumeration is 2^n.
inline constexpr int kMaxEnumerableAtoms = 30;

struct Predicate {
  std::string name;
  int arity = 0;

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

struct GroundAtom {
  std::string predicate;
  std::vector<std::string> args;
  std::string text;  // rendered form, e.g. "p" or "P(c,d)"
};

class Signature;
using SignatureRef = std::shared_ptr<const Signature>;

// The finite Herbrand signature: predicates, constants, and the induced atom base.
// Atoms are ordered lexicographically by predicate name, then by argument tuple;
// this order is the meaning of every WorldMask bit index.
class Signature {
 public:
  static SignatureRef make(std::vector<Predicate> predicates,
                           std::vector<std::string> constants);

  // All names become arity-0 predicates.
  static SignatureRef propositional(std::vector<std::string> atom_names);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  std::span<const GroundAtom> atoms() const { return atoms_; }
  const GroundAtom& atom(AtomId id) const;

  AtomId atom_id(std::string_view predicate, std::span<const std::string> args) const;
  AtomId atom_id(std::string_view rendered) const;
  std::optional<AtomId> find_atom(std::string_view rendered) const;

  std::span<const Predicate> predicates() const { return predicates_; }
  std::span<const std::string> constants() const { return constants_; }

  // Arity of a predicate; throws SignatureError for unknown names.
  int arity_of(std::string_view predicate) const;

  // Bits of all atoms belonging to one predicate.
  WorldMask predicate_mask(std::string_view predicate) const;
  std::span<const WorldMask> predicate_masks() const { return predicate_masks_; }

  // [first, last) atom ids of one predicate.
  std::pair<AtomId, AtomId> predicate_atom_range(std::string_view predicate) const;

  WorldMask full_mask() const { return full_mask_; }

  bool same_as(const Signature& other) const;

 private:
  Signature() = default;

  std::vector<Predicate> predicates_;
  std::vector<std::string> constants_;
  std::vector<GroundAtom> atoms_;
  std::vector<WorldMask> predicate_masks_;
  std::vector<std::pair<AtomId, AtomId>> predicate_ranges_;
  std::unordered_map<std::string, AtomId> atom_index_;
  std::unordered_map<std::string, std::size_t> predicate_index_;
  WorldMask full_mask_ = 0;
};

// Throws SignatureError unless both values live over one (extensionally equal) signature.
void check_same_signature(const Signature& a, const Signature& b);

// Throws BudgetError when 2^atom_count worlds must not be enumerated.
void check_enumeration_budget(const Signature& sig, int max_atoms);

}  // namespace hkb
