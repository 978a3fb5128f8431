#pragma once

#include "ambc/mapping.hpp"

#include <span>
#include <vector>

namespace ambc {

// Codeword-to-symbol compression for one coordinate of the mapping: group g
// holds the (0-based) codeword indices whose symbol at coordinate lambda
// equals the g-th projected symbol. For M = 2 the groups are singletons and
// both directions are the identity.
struct ProjectionGroups {
  int M = 2;
  int M_proj = 2;
  std::vector<std::vector<int>> groups;  // M_proj lists covering 0..M-1
  std::vector<int> group_of;             // codeword -> group
};

ProjectionGroups projection_groups(const MappingTable& mapping, int lambda);

// VN -> FN direction: projected[g] = max* over the group's full-domain entries.
void project_message(std::span<const double> full, std::span<double> projected,
                     const ProjectionGroups& pg);

// FN -> VN direction: full[m] = projected[group_of[m]].
void expand_message(std::span<const double> projected, std::span<double> full,
                    const ProjectionGroups& pg);

}  // namespace ambc
