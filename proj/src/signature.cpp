#include "hkb/signature.hpp"

#include <algorithm>
#include <sstream>

#include "hkb/error.hpp"

namespace hkb {

namespace {

std::string render(std::string_view predicate, std::span<const std::string> args) {
  if (args.empty()) return std::string(predicate);
  std::ostringstream out;
  out << predicate << '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out << ',';
    out << args[i];
  }
  out << ')';
  return out.str();
}

}  // namespace

SignatureRef Signature::make(std::vector<Predicate> predicates,
                             std::vector<std::string> constants) {
  std::sort(constants.begin(), constants.end());
  constants.erase(std::unique(constants.begin(), constants.end()), constants.end());

  std::sort(predicates.begin(), predicates.end(),
            [](const Predicate& a, const Predicate& b) { return a.name < b.name; });
  for (std::size_t i = 0; i + 1 < predicates.size(); ++i) {
    if (predicates[i].name == predicates[i + 1].name &&
        predicates[i].arity != predicates[i + 1].arity) {
      throw SignatureError("arity conflict for '" + predicates[i].name + "': used with arity " +
                           std::to_string(predicates[i].arity) + " and " +
                           std::to_string(predicates[i + 1].arity));
    }
  }
  predicates.erase(std::unique(predicates.begin(), predicates.end()), predicates.end());

  auto sig = std::shared_ptr<Signature>(new Signature());
  sig->predicates_ = std::move(predicates);
  sig->constants_ = std::move(constants);

  for (std::size_t p = 0; p < sig->predicates_.size(); ++p) {
    const Predicate& pred = sig->predicates_[p];
    if (pred.arity < 0) throw SignatureError("negative arity for '" + pred.name + "'");
    sig->predicate_index_.emplace(pred.name, p);
    const AtomId first = static_cast<AtomId>(sig->atoms_.size());
    const std::size_t dom = sig->constants_.size();

    // Odometer over argument positions; constants are already name-sorted, so the
    // emitted tuples are in lexicographic order.
    if (pred.arity == 0) {
      sig->atoms_.push_back(GroundAtom{pred.name, {}, render(pred.name, {})});
    } else if (dom > 0) {
      std::vector<std::size_t> idx(static_cast<std::size_t>(pred.arity), 0);
      while (true) {
        std::vector<std::string> args;
        args.reserve(idx.size());
        for (std::size_t k : idx) args.push_back(sig->constants_[k]);
        std::string text = render(pred.name, args);
        sig->atoms_.push_back(GroundAtom{pred.name, std::move(args), std::move(text)});
        int pos = pred.arity - 1;
        while (pos >= 0 && ++idx[static_cast<std::size_t>(pos)] == dom) {
          idx[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
      }
    }
    const AtomId last = static_cast<AtomId>(sig->atoms_.size());
    sig->predicate_ranges_.emplace_back(first, last);
  }

  if (sig->atoms_.size() > 64) {
    throw BudgetError("signature induces " + std::to_string(sig->atoms_.size()) +
                      " ground atoms; at most 64 are representable");
  }
  for (std::size_t i = 0; i < sig->atoms_.size(); ++i) {
    sig->atom_index_.emplace(sig->atoms_[i].text, static_cast<AtomId>(i));
  }
  sig->full_mask_ = sig->atoms_.empty()
                        ? 0
                        : (sig->atoms_.size() == 64 ? ~WorldMask{0}
                                                    : (WorldMask{1} << sig->atoms_.size()) - 1);
  for (const auto& [first, last] : sig->predicate_ranges_) {
    WorldMask m = 0;
    for (AtomId a = first; a < last; ++a) m |= WorldMask{1} << a;
    sig->predicate_masks_.push_back(m);
  }
  return sig;
}

SignatureRef Signature::propositional(std::vector<std::string> atom_names) {
  std::vector<Predicate> preds;
  preds.reserve(atom_names.size());
  for (auto& n : atom_names) preds.push_back(Predicate{std::move(n), 0});
  return make(std::move(preds), {});
}

const GroundAtom& Signature::atom(AtomId id) const {
  if (id >= atoms_.size())
    throw SignatureError("atom id " + std::to_string(id) + " outside signature");
  return atoms_[id];
}

AtomId Signature::atom_id(std::string_view predicate, std::span<const std::string> args) const {
  std::vector<std::string> copy(args.begin(), args.end());
  return atom_id(render(predicate, copy));
}

AtomId Signature::atom_id(std::string_view rendered) const {
  auto it = atom_index_.find(std::string(rendered));
  if (it == atom_index_.end())
    throw SignatureError("atom '" + std::string(rendered) + "' outside signature");
  return it->second;
}

std::optional<AtomId> Signature::find_atom(std::string_view rendered) const {
  auto it = atom_index_.find(std::string(rendered));
  if (it == atom_index_.end()) return std::nullopt;
  return it->second;
}

int Signature::arity_of(std::string_view predicate) const {
  auto it = predicate_index_.find(std::string(predicate));
  if (it == predicate_index_.end())
    throw SignatureError("unknown predicate '" + std::string(predicate) + "'");
  return predicates_[it->second].arity;
}

WorldMask Signature::predicate_mask(std::string_view predicate) const {
  auto it = predicate_index_.find(std::string(predicate));
  if (it == predicate_index_.end())
    throw SignatureError("unknown predicate '" + std::string(predicate) + "'");
  return predicate_masks_[it->second];
}

std::pair<AtomId, AtomId> Signature::predicate_atom_range(std::string_view predicate) const {
  auto it = predicate_index_.find(std::string(predicate));
  if (it == predicate_index_.end())
    throw SignatureError("unknown predicate '" + std::string(predicate) + "'");
  return predicate_ranges_[it->second];
}

bool Signature::same_as(const Signature& other) const {
  if (this == &other) return true;
  if (predicates_.size() != other.predicates_.size() ||
      constants_ != other.constants_ || atoms_.size() != other.atoms_.size())
    return false;
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    if (predicates_[i].name != other.predicates_[i].name ||
        predicates_[i].arity != other.predicates_[i].arity)
      return false;
  }
  return true;
}

void check_same_signature(const Signature& a, const Signature& b) {
  if (!a.same_as(b)) throw SignatureError("values built over different signatures");
}

void check_enumeration_budget(const Signature& sig, int max_atoms) {
  const int cap = std::min(max_atoms, kMaxEnumerableAtoms);
  if (sig.atom_count() > cap) {
    throw BudgetError("signature has " + std::to_string(sig.atom_count()) +
                      " atoms; enumeration refused above " + std::to_string(cap) +
                      " (2^n world blowup)");
  }
}

}  // namespace hkb
