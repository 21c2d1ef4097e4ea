#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hkb/signature.hpp"

namespace hkb {

enum class Connective : std::uint8_t {
  Atom,
  True,
  False,
  Not,
  And,
  Or,
  Implies,
  Iff,
  K,    // minimal knowledge modality
  Naf,  // negation as failure modality
};

// A ground formula over one signature, stored as a flattened tree (root last).
// Formulas without K/Naf nodes are the first-order (objective) ones; the modal
// variants are full MKNF sentences.
class Formula {
 public:
  struct Node {
    Connective kind;
    std::uint32_t lhs = 0;  // atom id, or index of the left/only child
    std::uint32_t rhs = 0;  // index of the right child for binary connectives

    friend bool operator==(const Node&, const Node&) = default;
  };

  static Formula atom(SignatureRef sig, AtomId id);
  static Formula atom(SignatureRef sig, std::string_view rendered);
  static Formula truth(SignatureRef sig);
  static Formula falsity(SignatureRef sig);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula biconditional(Formula a, Formula b);
  static Formula k(Formula f);
  static Formula naf(Formula f);

  // True / False for empty input.
  static Formula conjoin_all(SignatureRef sig, std::span<const Formula> fs);
  static Formula disjoin_all(SignatureRef sig, std::span<const Formula> fs);

  const SignatureRef& signature() const { return sig_; }
  std::span<const Node> nodes() const { return nodes_; }
  std::uint32_t root() const { return static_cast<std::uint32_t>(nodes_.size() - 1); }

  bool first_order() const;

  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.nodes_ == b.nodes_ && a.sig_->same_as(*b.sig_);
  }

 private:
  Formula(SignatureRef sig, std::vector<Node> nodes)
      : sig_(std::move(sig)), nodes_(std::move(nodes)) {}

  static Formula unary(Connective c, Formula f);
  static Formula binary(Connective c, Formula a, Formula b);

  SignatureRef sig_;
  std::vector<Node> nodes_;
};

}  // namespace hkb
