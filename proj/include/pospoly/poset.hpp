#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pospoly {

/// Element indices listed in increasing order of the partial order.
using Chain = std::vector<int>;
/// Element indices, pairwise incomparable, listed in increasing index order.
using Antichain = std::vector<int>;

/// A finite strict partial order on labelled elements, stored as a
/// transitively closed comparability matrix. Immutable after construction;
/// every operation is a pure function of the poset and its arguments.
class Poset {
public:
    Poset() = default;

    /// Builds the transitive closure of the given strict relations
    /// (cover relations or any other generating set of `<` pairs).
    /// Rejects unknown labels, duplicate labels and cyclic input.
    static Poset build(std::vector<std::string> labels,
                       const std::vector<std::pair<std::string, std::string>>& relations);

    int size() const { return size_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int a) const;
    int index_of(const std::string& label) const;

    bool less(int a, int b) const { return less_[static_cast<std::size_t>(a) * size_ + b] != 0; }
    bool comparable(int a, int b) const { return less(a, b) || less(b, a); }

    /// All element indices 0..size-1.
    std::vector<int> all_elements() const;

    /// The transitive reduction, as pairs (a, b) with a covered by b.
    std::vector<std::pair<int, int>> cover_relations() const;

    /// Minimal elements of the induced subposet.
    std::vector<int> minimal_elements(std::span<const int> subset) const;

    /// Topological order choosing the lowest available index first.
    /// This is the fixed linear extension used by point enumeration.
    std::vector<int> linear_extension() const;

    /// Size of a maximum antichain of the induced subposet, computed as
    /// |subset| minus a maximum matching of the comparability bigraph
    /// (equivalently the minimum number of covering chains).
    int width(std::span<const int> subset) const;
    int width() const;

    /// The lexicographically least maximum antichain of the induced subposet.
    Antichain max_antichain(std::span<const int> subset) const;
    Antichain max_antichain() const;

    /// Disjoint chains covering the subset, exactly width(subset) of them.
    /// Deterministic: derived from the matching found by scanning elements
    /// in increasing index order.
    std::vector<Chain> min_chain_cover(std::span<const int> subset) const;
    std::vector<Chain> min_chain_cover() const;

    /// Every inclusion-maximal chain exactly once (DFS from minimal elements
    /// along cover edges, successors in increasing index order).
    std::vector<Chain> maximal_chains() const;

    bool is_chain(std::span<const int> elems) const;
    bool is_antichain(std::span<const int> elems) const;

private:
    std::vector<std::string> labels_;
    int size_ = 0;
    std::vector<unsigned char> less_;  // row-major closure matrix

    // Validated, sorted, de-duplicated copy of a subset argument.
    std::vector<int> checked_subset(std::span<const int> subset) const;
    // Kuhn matching on the induced comparability bigraph; returns for each
    // position p in `subset` the position of its matched successor, or -1.
    std::vector<int> match_successors(const std::vector<int>& subset) const;
};

}  // namespace pospoly
