#include "tokenjump/token_set.hpp"

#include <algorithm>
#include <string>

namespace tj {

TokenSet::TokenSet(VertexList members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end())
        throw input_error("duplicate vertex " + std::to_string(*dup) + " in token set");
}

TokenSet TokenSet::checked(const Graph& g, VertexList members) {
    TokenSet s(std::move(members));
    for (Vertex v : s.members_) g.require_live(v);
    if (!is_independent(g, s.members_))
        throw semantic_error("token set is not independent");
    return s;
}

bool TokenSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

}  // namespace tj
