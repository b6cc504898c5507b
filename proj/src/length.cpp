#include "lendepth/length.hpp"

#include "lendepth/errors.hpp"

namespace lendepth {

std::uint64_t length(const GroupDescriptor& g) {
  std::uint64_t l = g.unipotent_dim() + g.torus_dim();
  for (const auto& f : g.factors()) l += f.count * (borel_dim(f.type) + f.type.rank);
  return l;
}

HalfDimCheck length_exceeds_half_dim(const GroupDescriptor& g) {
  if (g.is_trivial()) throw DomainError("length_exceeds_half_dim needs a nontrivial group");
  HalfDimCheck h{length(g), g.dim(), false};
  h.exceeds = 2 * h.length > h.dim;
  return h;
}

bool length_equals_dim(const GroupDescriptor& g) {
  for (const auto& f : g.factors())
    if (f.type != SimpleType{Family::A, 1}) return false;
  return true;
}

ChainCertificate max_length_chain(SimpleType t, Characteristic c, const MaxSubgroupDatabase& db) {
  require_canonical(t);
  std::vector<GroupDescriptor> nodes{GroupDescriptor::simple(t)};
  GroupDescriptor cur = nodes.back();
  while (!cur.is_soluble()) {
    const SimpleType s = cur.factors().front().type;
    const auto levi = levi_factors(s, last_node(s));
    std::uint64_t nl = 0;
    for (SimpleType x : levi) nl += num_positive_roots(x);
    GroupDescriptor next = cur.minus_factor(s);
    next = next.with_unipotent(next.unipotent_dim() + num_positive_roots(s) - nl).with_torus(next.torus_dim() + 1);
    for (SimpleType x : levi) next = next.plus_factor(x);
    nodes.push_back(next);
    cur = next;
  }
  while (cur.unipotent_dim() > 0) {
    cur = cur.with_unipotent(cur.unipotent_dim() - 1);
    nodes.push_back(cur);
  }
  while (cur.torus_dim() > 0) {
    cur = cur.with_torus(cur.torus_dim() - 1);
    nodes.push_back(cur);
  }
  return annotate(c, std::move(nodes), db);
}

}  // namespace lendepth
