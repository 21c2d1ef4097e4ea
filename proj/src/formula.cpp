#include "hkb/formula.hpp"

#include <sstream>

#include "hkb/error.hpp"

namespace hkb {

Formula Formula::atom(SignatureRef sig, AtomId id) {
  if (!sig) throw ContractError("formula requires a signature");
  if (id >= static_cast<AtomId>(sig->atom_count()))
    throw SignatureError("atom id outside signature");
  return Formula(std::move(sig), {Node{Connective::Atom, id, 0}});
}

Formula Formula::atom(SignatureRef sig, std::string_view rendered) {
  AtomId id = sig->atom_id(rendered);
  return atom(std::move(sig), id);
}

Formula Formula::truth(SignatureRef sig) {
  return Formula(std::move(sig), {Node{Connective::True, 0, 0}});
}

Formula Formula::falsity(SignatureRef sig) {
  return Formula(std::move(sig), {Node{Connective::False, 0, 0}});
}

Formula Formula::unary(Connective c, Formula f) {
  f.nodes_.push_back(Node{c, static_cast<std::uint32_t>(f.nodes_.size() - 1), 0});
  return f;
}

Formula Formula::binary(Connective c, Formula a, Formula b) {
  check_same_signature(*a.sig_, *b.sig_);
  const std::uint32_t offset = static_cast<std::uint32_t>(a.nodes_.size());
  for (Node n : b.nodes_) {
    if (n.kind != Connective::Atom && n.kind != Connective::True && n.kind != Connective::False) {
      n.lhs += offset;
      if (n.kind != Connective::Not && n.kind != Connective::K && n.kind != Connective::Naf)
        n.rhs += offset;
    }
    a.nodes_.push_back(n);
  }
  const std::uint32_t left = offset - 1;
  const std::uint32_t right = static_cast<std::uint32_t>(a.nodes_.size() - 1);
  a.nodes_.push_back(Node{c, left, right});
  return a;
}

Formula Formula::negation(Formula f) { return unary(Connective::Not, std::move(f)); }
Formula Formula::k(Formula f) { return unary(Connective::K, std::move(f)); }
Formula Formula::naf(Formula f) { return unary(Connective::Naf, std::move(f)); }

Formula Formula::conjunction(Formula a, Formula b) {
  return binary(Connective::And, std::move(a), std::move(b));
}
Formula Formula::disjunction(Formula a, Formula b) {
  return binary(Connective::Or, std::move(a), std::move(b));
}
Formula Formula::implication(Formula a, Formula b) {
  return binary(Connective::Implies, std::move(a), std::move(b));
}
Formula Formula::biconditional(Formula a, Formula b) {
  return binary(Connective::Iff, std::move(a), std::move(b));
}

Formula Formula::conjoin_all(SignatureRef sig, std::span<const Formula> fs) {
  if (fs.empty()) return truth(std::move(sig));
  Formula out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = conjunction(std::move(out), fs[i]);
  return out;
}

Formula Formula::disjoin_all(SignatureRef sig, std::span<const Formula> fs) {
  if (fs.empty()) return falsity(std::move(sig));
  Formula out = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) out = disjunction(std::move(out), fs[i]);
  return out;
}

bool Formula::first_order() const {
  for (const Node& n : nodes_)
    if (n.kind == Connective::K || n.kind == Connective::Naf) return false;
  return true;
}

namespace {

// Precedence levels: prefix (!, K, not) bind tightest, then &, |, ->, <->.
int precedence(Connective c) {
  switch (c) {
    case Connective::Atom:
    case Connective::True:
    case Connective::False:
      return 6;
    case Connective::Not:
    case Connective::K:
    case Connective::Naf:
      return 5;
    case Connective::And:
      return 4;
    case Connective::Or:
      return 3;
    case Connective::Implies:
      return 2;
    case Connective::Iff:
      return 1;
  }
  return 0;
}

void print_node(const Signature& sig, std::span<const Formula::Node> nodes, std::uint32_t idx,
                int parent_prec, bool right_operand, std::ostream& out) {
  const Formula::Node& n = nodes[idx];
  const int prec = precedence(n.kind);
  // & and | associate to the left, -> to the right; parenthesize the operand
  // whose nesting direction disagrees so the string round-trips.
  const bool left_assoc = n.kind == Connective::And || n.kind == Connective::Or;
  const bool parens = prec < parent_prec || (prec == parent_prec && right_operand && left_assoc);
  if (parens) out << '(';
  switch (n.kind) {
    case Connective::Atom:
      out << sig.atom(n.lhs).text;
      break;
    case Connective::True:
      out << "true";
      break;
    case Connective::False:
      out << "false";
      break;
    case Connective::Not:
      out << '!';
      print_node(sig, nodes, n.lhs, prec, false, out);
      break;
    case Connective::K:
      out << "K ";
      print_node(sig, nodes, n.lhs, prec, false, out);
      break;
    case Connective::Naf:
      out << "not ";
      print_node(sig, nodes, n.lhs, prec, false, out);
      break;
    case Connective::And:
      print_node(sig, nodes, n.lhs, prec, false, out);
      out << " & ";
      print_node(sig, nodes, n.rhs, prec, true, out);
      break;
    case Connective::Or:
      print_node(sig, nodes, n.lhs, prec, false, out);
      out << " | ";
      print_node(sig, nodes, n.rhs, prec, true, out);
      break;
    case Connective::Implies:
      print_node(sig, nodes, n.lhs, prec + 1, false, out);
      out << " -> ";
      print_node(sig, nodes, n.rhs, prec, true, out);
      break;
    case Connective::Iff:
      print_node(sig, nodes, n.lhs, prec + 1, false, out);
      out << " <-> ";
      print_node(sig, nodes, n.rhs, prec + 1, true, out);
      break;
  }
  if (parens) out << ')';
}

}  // namespace

std::string Formula::to_string() const {
  std::ostringstream out;
  print_node(*sig_, nodes_, root(), 0, false, out);
  return out.str();
}

}  // namespace hkb
