#pragma once

#include <string_view>
#include <vector>

#include "lendepth/maxsubdb.hpp"

namespace lendepth::detail {

/// Contents of data/maxsubdb.txt, generated at build time.
extern const std::string_view kBuiltinMaxsubdb;

/// Exchanges B_r and C_r (r >= 3) factors, the types swapped by the special
/// isogeny in characteristic 2.
SimpleType swap_bc(SimpleType t) noexcept;
GroupDescriptor swap_bc(const GroupDescriptor& g);

/// Maximal parabolic subgroups of `t`, one per distinct Levi shape, in node order.
std::vector<MaxStepWitness> parabolic_children(SimpleType t);

/// Children of `t` produced by the parametric subgroup families. When
/// `target` is given only witnesses for that child are produced.
std::vector<MaxStepWitness> pattern_children(SimpleType t, Characteristic c, const GroupDescriptor* target);

}  // namespace lendepth::detail
