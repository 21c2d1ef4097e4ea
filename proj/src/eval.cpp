#include "hkb/eval.hpp"

#include "hkb/error.hpp"

namespace hkb {

namespace detail {

namespace {

bool eval_node(std::span<const Formula::Node> nodes, std::uint32_t idx, WorldMask world) {
  const Formula::Node& n = nodes[idx];
  switch (n.kind) {
    case Connective::Atom:
      return (world >> n.lhs) & 1;
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Not:
      return !eval_node(nodes, n.lhs, world);
    case Connective::And:
      return eval_node(nodes, n.lhs, world) && eval_node(nodes, n.rhs, world);
    case Connective::Or:
      return eval_node(nodes, n.lhs, world) || eval_node(nodes, n.rhs, world);
    case Connective::Implies:
      return !eval_node(nodes, n.lhs, world) || eval_node(nodes, n.rhs, world);
    case Connective::Iff:
      return eval_node(nodes, n.lhs, world) == eval_node(nodes, n.rhs, world);
    case Connective::K:
    case Connective::Naf:
      throw ContractError("modal operator in objective evaluation");
  }
  throw ContractError("corrupt formula node");
}

bool eval_mknf_node(std::span<const Formula::Node> nodes, std::uint32_t idx, WorldMask world,
                    const InterpretationSet& m, const InterpretationSet& n) {
  const Formula::Node& node = nodes[idx];
  switch (node.kind) {
    case Connective::Atom:
      return (world >> node.lhs) & 1;
    case Connective::True:
      return true;
    case Connective::False:
      return false;
    case Connective::Not:
      return !eval_mknf_node(nodes, node.lhs, world, m, n);
    case Connective::And:
      return eval_mknf_node(nodes, node.lhs, world, m, n) &&
             eval_mknf_node(nodes, node.rhs, world, m, n);
    case Connective::Or:
      return eval_mknf_node(nodes, node.lhs, world, m, n) ||
             eval_mknf_node(nodes, node.rhs, world, m, n);
    case Connective::Implies:
      return !eval_mknf_node(nodes, node.lhs, world, m, n) ||
             eval_mknf_node(nodes, node.rhs, world, m, n);
    case Connective::Iff:
      return eval_mknf_node(nodes, node.lhs, world, m, n) ==
             eval_mknf_node(nodes, node.rhs, world, m, n);
    case Connective::K:
      for (WorldMask j : m.worlds())
        if (!eval_mknf_node(nodes, node.lhs, j, m, n)) return false;
      return true;
    case Connective::Naf:
      for (WorldMask j : n.worlds())
        if (!eval_mknf_node(nodes, node.lhs, j, m, n)) return true;
      return false;
  }
  throw ContractError("corrupt formula node");
}

}  // namespace

bool eval_on_world(const Formula& f, WorldMask world) {
  return eval_node(f.nodes(), f.root(), world);
}

}  // namespace detail

bool eval_first_order(const Interpretation& i, const Formula& f) {
  check_same_signature(*i.signature(), *f.signature());
  if (!f.first_order()) throw ContractError("eval_first_order requires an objective formula");
  return detail::eval_on_world(f, i.bits());
}

bool eval_mknf(const Interpretation& i, const InterpretationSet& m,
               const InterpretationSet& n, const Formula& f) {
  check_same_signature(*i.signature(), *f.signature());
  check_same_signature(*i.signature(), *m.signature());
  check_same_signature(*i.signature(), *n.signature());
  return detail::eval_mknf_node(f.nodes(), f.root(), i.bits(), m, n);
}

bool holds_in(const InterpretationSet& m, const Formula& f) {
  check_same_signature(*m.signature(), *f.signature());
  for (WorldMask i : m.worlds())
    if (!detail::eval_mknf_node(f.nodes(), f.root(), i, m, m)) return false;
  return true;
}

InterpretationSet models_of(std::span<const Formula> theory, SignatureRef sig, int max_atoms) {
  for (const Formula& f : theory) {
    check_same_signature(*sig, *f.signature());
    if (!f.first_order())
      throw ContractError("models_of is defined for first-order theories only");
  }
  check_enumeration_budget(*sig, max_atoms);
  const WorldMask count = WorldMask{1} << sig->atom_count();
  std::vector<WorldMask> worlds;
  for (WorldMask w = 0; w < count; ++w) {
    bool ok = true;
    for (const Formula& f : theory) {
      if (!detail::eval_on_world(f, w)) {
        ok = false;
        break;
      }
    }
    if (ok) worlds.push_back(w);
  }
  return InterpretationSet(std::move(sig), std::move(worlds));
}

std::vector<Formula> translate_kb(std::span<const Formula> ontology,
                                  const GroundProgram& program) {
  std::vector<Formula> out;
  out.reserve(ontology.size() + program.size());
  const SignatureRef& sig = program.signature();
  for (const Formula& f : ontology) {
    check_same_signature(*sig, *f.signature());
    out.push_back(Formula::k(f));
  }
  for (const Rule& r : program.rules()) {
    Formula body = Formula::truth(sig);
    bool have_body = false;
    auto add = [&](Formula part) {
      body = have_body ? Formula::conjunction(std::move(body), std::move(part)) : std::move(part);
      have_body = true;
    };
    for (AtomId q : r.positive) add(Formula::k(Formula::atom(sig, q)));
    for (AtomId s : r.negative) add(Formula::naf(Formula::atom(sig, s)));
    out.push_back(Formula::implication(std::move(body), Formula::k(Formula::atom(sig, r.head))));
  }
  return out;
}

}  // namespace hkb
