#include "linord/subtree.hpp"

#include <algorithm>
#include <functional>

namespace linord {

namespace {

constexpr std::uint64_t kStateCap = 4'000'000;

std::string meet(const std::string& a, const std::string& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return a.substr(0, i);
}

std::string bits_of(std::uint64_t mask, std::size_t len) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) s += char('0' + ((mask >> (len - 1 - i)) & 1));
    return s;
}

struct Grower {
    const NodeColouring& colour;
    std::size_t depth;
    std::size_t bound;
    int target;
    std::uint64_t states = 0;

    void tick() {
        if (++states > kStateCap) throw InsufficientBound("subtree search state cap");
    }

    // level_nodes: (tree key, image) pairs for tree depth k, keys in lex order.
    bool grow(std::size_t k, const std::vector<std::pair<std::string, std::string>>& level_nodes,
              std::vector<std::size_t>& levels, std::map<std::string, std::string>& result) {
        if (k == depth) return true;
        const std::size_t cur = levels.back();
        for (std::size_t L = cur + 1; L + (depth - k - 1) <= bound; ++L) {
            std::vector<std::vector<std::string>> cands(level_nodes.size() * 2);
            bool feasible = true;
            for (std::size_t f = 0; f < level_nodes.size() && feasible; ++f) {
                for (int b = 0; b < 2 && feasible; ++b) {
                    std::string stem = level_nodes[f].second + char('0' + b);
                    auto& list = cands[f * 2 + b];
                    const std::size_t extra = L - stem.size();
                    for (std::uint64_t m = 0; m < (1ull << extra); ++m) {
                        tick();
                        std::string node = stem + bits_of(m, extra);
                        if (colour(node) == target) list.push_back(node);
                    }
                    if (list.empty()) feasible = false;
                }
            }
            if (!feasible) continue;
            std::vector<std::size_t> pick(cands.size(), 0);
            std::function<bool(std::size_t)> assign = [&](std::size_t slot) -> bool {
                if (slot == cands.size()) {
                    std::vector<std::pair<std::string, std::string>> next;
                    for (std::size_t f = 0; f < level_nodes.size(); ++f)
                        for (int b = 0; b < 2; ++b)
                            next.push_back({level_nodes[f].first + char('0' + b),
                                            cands[f * 2 + b][pick[f * 2 + b]]});
                    levels.push_back(L);
                    if (grow(k + 1, next, levels, result)) {
                        for (auto& [key, img] : next) result[key] = img;
                        return true;
                    }
                    levels.pop_back();
                    return false;
                }
                for (std::size_t c = 0; c < cands[slot].size(); ++c) {
                    tick();
                    pick[slot] = c;
                    if (assign(slot + 1)) return true;
                }
                return false;
            };
            if (assign(0)) return true;
        }
        return false;
    }
};

}  // namespace

StrongSubtree mono_subtree(const NodeColouring& colour, std::size_t depth, std::size_t bound) {
    if (depth > bound) throw InsufficientBound("depth exceeds bound");
    for (int target = 0; target < 2; ++target) {
        for (std::size_t L0 = 0; L0 + depth <= bound; ++L0) {
            for (std::uint64_t mask = 0; mask < (1ull << L0); ++mask) {
                std::string root = bits_of(mask, L0);
                if (colour(root) != target) continue;
                Grower g{colour, depth, bound, target};
                std::vector<std::size_t> levels{L0};
                std::map<std::string, std::string> result;
                std::vector<std::pair<std::string, std::string>> level0{{"", root}};
                if (g.grow(0, level0, levels, result)) {
                    result[""] = root;
                    StrongSubtree st;
                    st.embed = std::move(result);
                    st.level_set = std::move(levels);
                    st.colour = target;
                    return st;
                }
            }
        }
    }
    throw InsufficientBound("no monochromatic strong subtree within bound");
}

bool check_strong_subtree(const StrongSubtree& st, std::size_t depth) {
    if (st.level_set.size() != depth + 1) return false;
    for (std::size_t i = 0; i + 1 < st.level_set.size(); ++i)
        if (st.level_set[i] >= st.level_set[i + 1]) return false;
    auto it = st.embed.find("");
    if (it == st.embed.end() || it->second.size() != st.level_set[0]) return false;
    std::vector<std::string> keys{""};
    for (std::size_t k = 0; k < depth; ++k) {
        std::vector<std::string> next;
        for (const auto& key : keys)
            if (key.size() == k) {
                next.push_back(key + "0");
                next.push_back(key + "1");
            }
        for (const auto& key : next) {
            auto jt = st.embed.find(key);
            if (jt == st.embed.end()) return false;
            const std::string& img = jt->second;
            if (img.size() != st.level_set[k + 1]) return false;
            const std::string& parent_img = st.embed.at(key.substr(0, key.size() - 1));
            std::string want = parent_img + key.back();
            if (img.compare(0, want.size(), want) != 0) return false;
        }
        keys.insert(keys.end(), next.begin(), next.end());
    }
    if (st.embed.size() != keys.size()) return false;
    for (const auto& [ka, va] : st.embed)
        for (const auto& [kb, vb] : st.embed)
            if (st.embed.at(meet(ka, kb)) != meet(va, vb)) return false;
    return true;
}

bool check_monochromatic(const StrongSubtree& st, const NodeColouring& colour) {
    for (const auto& [key, img] : st.embed) {
        (void)key;
        if (colour(img) != st.colour) return false;
    }
    return true;
}

}  // namespace linord
