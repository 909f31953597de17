#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace linord {

// Strong subtree of 2^{<w} up to a fixed depth: the root sits on
// level_set[0], images of s^0 / s^1 extend image(s) in directions 0 / 1 and
// live on level_set[|s|+1], and meets are preserved.
struct StrongSubtree {
    std::map<std::string, std::string> embed;  // key: node of 2^{<=d} as bit string
    std::vector<std::size_t> level_set;
    int colour = 0;
};

// Total 2-colouring of nodes of 2^{<=D}, nodes given as bit strings.
using NodeColouring = std::function<int(const std::string&)>;

struct InsufficientBound : std::runtime_error {
    explicit InsufficientBound(const std::string& what) : std::runtime_error(what) {}
};

// Deterministic iterative-deepening backtracking search for a monochromatic
// strong subtree of the given depth inside 2^{<=bound}; ties break towards
// the lexicographically least subtree (colour 0 first, lower levels first,
// lex-least extensions first).  Throws InsufficientBound when the search
// space is exhausted, never returns a wrong subtree.
StrongSubtree mono_subtree(const NodeColouring& colour, std::size_t depth, std::size_t bound);

// Invariant checker used by tests and by callers extending subtrees.
bool check_strong_subtree(const StrongSubtree& st, std::size_t depth);
bool check_monochromatic(const StrongSubtree& st, const NodeColouring& colour);

}  // namespace linord
