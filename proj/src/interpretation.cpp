#include "hkb/interpretation.hpp"

#include <algorithm>

#include "hkb/error.hpp"

namespace hkb {

Interpretation::Interpretation(SignatureRef sig, WorldMask bits)
    : sig_(std::move(sig)), bits_(bits) {
  if (!sig_) throw ContractError("interpretation requires a signature");
  if (bits_ & ~sig_->full_mask())
    throw SignatureError("interpretation mentions atoms outside its signature");
}

Interpretation Interpretation::of_atoms(SignatureRef sig,
                                        std::initializer_list<std::string_view> rendered) {
  WorldMask bits = 0;
  for (std::string_view a : rendered) bits |= WorldMask{1} << sig->atom_id(a);
  return Interpretation(std::move(sig), bits);
}

bool Interpretation::contains(AtomId id) const {
  if (id >= static_cast<AtomId>(sig_->atom_count()))
    throw SignatureError("atom id outside signature");
  return (bits_ >> id) & 1;
}

std::vector<AtomId> Interpretation::true_atoms() const {
  std::vector<AtomId> out;
  for (AtomId a = 0; a < static_cast<AtomId>(sig_->atom_count()); ++a)
    if ((bits_ >> a) & 1) out.push_back(a);
  return out;
}

InterpretationSet::InterpretationSet(SignatureRef sig, std::vector<WorldMask> worlds)
    : sig_(std::move(sig)), worlds_(std::move(worlds)) {
  if (!sig_) throw ContractError("interpretation set requires a signature");
  std::sort(worlds_.begin(), worlds_.end());
  worlds_.erase(std::unique(worlds_.begin(), worlds_.end()), worlds_.end());
  if (!worlds_.empty() && (worlds_.back() & ~sig_->full_mask()))
    throw SignatureError("interpretation set mentions atoms outside its signature");
}

InterpretationSet InterpretationSet::empty(SignatureRef sig) {
  return InterpretationSet(std::move(sig), {});
}

InterpretationSet InterpretationSet::all(SignatureRef sig, int max_atoms) {
  check_enumeration_budget(*sig, max_atoms);
  const WorldMask count = WorldMask{1} << sig->atom_count();
  std::vector<WorldMask> worlds;
  worlds.reserve(count);
  for (WorldMask w = 0; w < count; ++w) worlds.push_back(w);
  return InterpretationSet(std::move(sig), std::move(worlds));
}

bool InterpretationSet::contains(WorldMask w) const {
  return std::binary_search(worlds_.begin(), worlds_.end(), w);
}

Interpretation InterpretationSet::member(std::size_t index) const {
  if (index >= worlds_.size()) throw ContractError("member index out of range");
  return Interpretation(sig_, worlds_[index]);
}

WorldMask InterpretationSet::known_true_mask() const {
  WorldMask m = sig_->full_mask();
  for (WorldMask w : worlds_) m &= w;
  return m;
}

WorldMask InterpretationSet::possible_mask() const {
  WorldMask m = 0;
  for (WorldMask w : worlds_) m |= w;
  return m;
}

}  // namespace hkb
