#include "linord/condense.hpp"

#include <algorithm>
#include <stdexcept>

namespace linord {

std::string class_type_str(ClassType t) {
    switch (t) {
        case ClassType::Finite: return "finite";
        case ClassType::OmegaT: return "omega";
        case ClassType::OmegaStarT: return "omega-star";
        case ClassType::ZetaT: return "zeta";
    }
    return "?";
}

namespace {

ClassType type_from_runs(Count above, Count below, std::uint64_t* finite_size) {
    if (above.inf && below.inf) return ClassType::ZetaT;
    if (above.inf) return ClassType::OmegaT;
    if (below.inf) return ClassType::OmegaStarT;
    *finite_size = above.n + below.n + 1;
    return ClassType::Finite;
}

}  // namespace

CondensationReport condensation_exact(const PresentedOrder& o, std::size_t prefix) {
    if (!o.type_tag || !o.address)
        throw std::invalid_argument("condensation_exact: order has no type tag");
    const TermPtr& t = o.type_tag;
    std::vector<Id> ids = realized_prefix(o, prefix);
    std::sort(ids.begin(), ids.end(), [&](Id a, Id b) { return o.less(a, b); });

    CondensationReport rep;
    rep.exact = true;
    rep.depth_bound = 0;
    for (std::size_t i = 0; i < ids.size();) {
        CondensationClass cls;
        cls.members.push_back(ids[i]);
        std::size_t j = i + 1;
        // Prefix is sorted, so a class is a run of pairwise finite gaps.
        while (j < ids.size()) {
            Count gap = count_between(t, o.address(ids[j - 1]), o.address(ids[j]));
            if (gap.inf) break;
            cls.members.push_back(ids[j]);
            ++j;
        }
        AddrPtr rep_addr = o.address(ids[i]);
        cls.finite_size = 0;
        cls.type = type_from_runs(cls_above(t, rep_addr), cls_below(t, rep_addr),
                                  &cls.finite_size);
        cls.descriptor = addr_str(rep_addr);
        rep.classes.push_back(std::move(cls));
        i = j;
    }
    return rep;
}

CondensationReport condensation_oracle(const PresentedOrder& o, std::size_t prefix,
                                       std::size_t depth_bound) {
    if (depth_bound == 0)
        throw std::invalid_argument("condensation_oracle: a depth bound is required");
    std::vector<Id> deep = realized_prefix(o, depth_bound);
    std::vector<Id> ids(deep.begin(), deep.begin() + std::min(prefix, deep.size()));
    std::sort(ids.begin(), ids.end(), [&](Id a, Id b) { return o.less(a, b); });

    auto count_within = [&](Id a, Id b, std::size_t horizon) {
        std::size_t n = 0;
        for (std::size_t k = 0; k < std::min(horizon, deep.size()); ++k)
            if (o.less(a, deep[k]) && o.less(deep[k], b)) ++n;
        return n;
    };

    CondensationReport rep;
    rep.exact = false;
    rep.depth_bound = depth_bound;
    for (std::size_t i = 0; i < ids.size();) {
        CondensationClass cls;
        cls.members.push_back(ids[i]);
        std::size_t j = i + 1;
        while (j < ids.size()) {
            std::size_t half = count_within(ids[j - 1], ids[j], depth_bound / 2);
            std::size_t full = count_within(ids[j - 1], ids[j], depth_bound);
            if (full != half) break;  // still growing: treat as infinite gap
            cls.members.push_back(ids[j]);
            ++j;
        }
        // Growth above/below the run decides the reported shape.
        auto grows = [&](Id a, Id b) {
            return count_within(a, b, depth_bound) != count_within(a, b, depth_bound / 2);
        };
        bool above_grows = j < ids.size() && grows(cls.members.back(), ids[j]);
        bool below_grows = i > 0 && grows(ids[i - 1], cls.members.front());
        if (above_grows && below_grows)
            cls.type = ClassType::ZetaT;
        else if (above_grows)
            cls.type = ClassType::OmegaStarT;
        else if (below_grows)
            cls.type = ClassType::OmegaT;
        else
            cls.type = ClassType::Finite;
        cls.finite_size = cls.members.size();
        cls.descriptor = "id:" + std::to_string(cls.members.front());
        rep.classes.push_back(std::move(cls));
        i = j;
    }
    return rep;
}

}  // namespace linord
