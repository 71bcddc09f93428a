#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "hadamard/tolerance.hpp"
#include "hadamard/tree.hpp"

namespace hadamard {

// Vertex of the infinite 3-regular unit-edge tree, addressed from a fixed
// origin: first letter in {0,1,2} picks one of the origin's three branches,
// later letters in {0,1} pick one of the two children. The empty word is the
// origin. Words are canonical by construction (no backtracking encodable).
struct TreeWord {
    std::vector<std::uint8_t> letters;

    static TreeWord origin() { return {}; }

    std::size_t depth() const { return letters.size(); }
    bool is_origin() const { return letters.empty(); }

    TreeWord parent() const {
        require(!letters.empty(), "origin has no parent");
        TreeWord p{letters};
        p.letters.pop_back();
        return p;
    }
    TreeWord child(std::uint8_t c) const {
        require(letters.empty() ? c <= 2 : c <= 1, "letter out of range");
        TreeWord w{letters};
        w.letters.push_back(c);
        return w;
    }

    void validate() const {
        for (std::size_t i = 0; i < letters.size(); ++i)
            require(letters[i] <= (i == 0 ? 2 : 1), "non-canonical word letter");
    }

    bool operator==(const TreeWord& o) const { return letters == o.letters; }
    bool operator<(const TreeWord& o) const { return letters < o.letters; }
};

// word at depth d straight down the 0-branch
inline TreeWord word_ray(int d) {
    TreeWord w;
    w.letters.assign(static_cast<std::size_t>(d), 0);
    return w;
}

inline std::size_t common_prefix(const TreeWord& u, const TreeWord& v) {
    std::size_t n = std::min(u.letters.size(), v.letters.size());
    std::size_t i = 0;
    while (i < n && u.letters[i] == v.letters[i]) ++i;
    return i;
}

// |u| + |v| - 2 lcp(u, v)
inline double word_distance(const TreeWord& u, const TreeWord& v) {
    return static_cast<double>(u.letters.size() + v.letters.size() -
                               2 * common_prefix(u, v));
}

// Finite subtree spanning a set of words: the union of their origin paths,
// with unit edge weights. Convex, so Frechet means of embedded points stay
// inside it.
struct SpannedSubtree {
    WeightedTree tree;
    std::vector<int> word_vertex;        // input word -> vertex id
    std::vector<TreeWord> vertex_word;   // vertex id -> word

    TreePoint point_of(std::size_t input_index) const {
        return TreePoint::at_vertex(word_vertex[input_index]);
    }
};

inline SpannedSubtree materialize_spanning_subtree(const std::vector<TreeWord>& words) {
    require(!words.empty(), "no words to span");
    std::map<std::vector<std::uint8_t>, int> ids;
    std::vector<TreeWord> vertex_word;
    auto intern = [&](const TreeWord& w) -> int {
        auto [it, fresh] = ids.try_emplace(w.letters, static_cast<int>(ids.size()));
        if (fresh) vertex_word.push_back(w);
        return it->second;
    };
    intern(TreeWord::origin());
    std::vector<TreeEdge> edges;
    std::vector<int> word_vertex;
    for (const TreeWord& w : words) {
        w.validate();
        TreeWord prefix = TreeWord::origin();
        int prev = 0;
        for (std::uint8_t c : w.letters) {
            prefix.letters.push_back(c);
            int before = static_cast<int>(ids.size());
            int id = intern(prefix);
            if (id == before) edges.push_back({prev, id, 1.0});
            prev = id;
        }
        word_vertex.push_back(prev);
    }
    WeightedTree tree(static_cast<int>(ids.size()), std::move(edges));
    return SpannedSubtree{std::move(tree), std::move(word_vertex),
                          std::move(vertex_word)};
}

struct WordGeodesicPoint {
    SpannedSubtree span;  // spans {u, v}
    TreePoint point;
};

// Point at arc length t*d(u,v) along the u->v path, materialized.
inline WordGeodesicPoint word_interpolate(const TreeWord& u, const TreeWord& v,
                                          double t) {
    SpannedSubtree span = materialize_spanning_subtree({u, v});
    TreePoint p = tree_interpolate(span.tree, span.point_of(0), span.point_of(1), t);
    return {std::move(span), p};
}

}  // namespace hadamard
