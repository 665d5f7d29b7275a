#pragma once

#include <compare>

#include "tokenjump/graph.hpp"

namespace tj {

/// A set of token positions in canonical (sorted, duplicate-free) form.
/// Equality is structural. Independence is a property relative to a host
/// graph; use checked() or is_independent() to establish it.
class TokenSet {
public:
    TokenSet() = default;
    explicit TokenSet(VertexList members);  // sorts; rejects duplicates

    /// Validates liveness and independence against g in addition.
    static TokenSet checked(const Graph& g, VertexList members);

    int size() const { return static_cast<int>(members_.size()); }
    bool empty() const { return members_.empty(); }
    bool contains(Vertex v) const;
    const VertexList& members() const { return members_; }

    friend bool operator==(const TokenSet&, const TokenSet&) = default;
    friend auto operator<=>(const TokenSet&, const TokenSet&) = default;

private:
    VertexList members_;
};

}  // namespace tj
