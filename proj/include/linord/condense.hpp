#pragma once

#include <string>
#include <vector>

#include "linord/presented.hpp"

namespace linord {

enum class ClassType { Finite, OmegaT, OmegaStarT, ZetaT };
std::string class_type_str(ClassType t);

struct CondensationClass {
    std::vector<Id> members;      // enumerated members, in order
    ClassType type;
    std::uint64_t finite_size;    // meaningful when type == Finite
    std::string descriptor;       // address / id of the least enumerated member
};

struct CondensationReport {
    std::vector<CondensationClass> classes;  // in ambient order
    bool exact;
    std::size_t depth_bound;                 // when not exact
};

// Exact mode: requires a realized order (type_tag + addresses); classes and
// their types are computed symbolically and cover the enumerated prefix.
CondensationReport condensation_exact(const PresentedOrder& o, std::size_t prefix);

// Oracle mode: merges prefix elements whose enumerated in-between set
// stabilizes below the bound; truthful about its approximation.
CondensationReport condensation_oracle(const PresentedOrder& o, std::size_t prefix,
                                       std::size_t depth_bound);

}  // namespace linord
