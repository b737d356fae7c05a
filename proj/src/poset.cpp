#include "pospoly/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pospoly/errors.hpp"

namespace pospoly {

Poset Poset::build(std::vector<std::string> labels,
                   const std::vector<std::pair<std::string, std::string>>& relations) {
    Poset p;
    p.labels_ = std::move(labels);
    p.size_ = static_cast<int>(p.labels_.size());
    std::map<std::string, int> index;
    for (int i = 0; i < p.size_; ++i) {
        if (!index.emplace(p.labels_[i], i).second)
            fail(Errc::MalformedInput, "duplicate label: " + p.labels_[i]);
    }
    const auto n = static_cast<std::size_t>(p.size_);
    p.less_.assign(n * n, 0);
    auto at = [&](int a, int b) -> unsigned char& { return p.less_[static_cast<std::size_t>(a) * n + b]; };
    for (const auto& [lo, hi] : relations) {
        auto ilo = index.find(lo);
        auto ihi = index.find(hi);
        if (ilo == index.end()) fail(Errc::UnknownLabel, "unknown label: " + lo);
        if (ihi == index.end()) fail(Errc::UnknownLabel, "unknown label: " + hi);
        at(ilo->second, ihi->second) = 1;
    }
    // Floyd–Warshall closure.
    for (int k = 0; k < p.size_; ++k)
        for (int a = 0; a < p.size_; ++a) {
            if (!at(a, k)) continue;
            for (int b = 0; b < p.size_; ++b)
                if (at(k, b)) at(a, b) = 1;
        }
    for (int a = 0; a < p.size_; ++a)
        if (at(a, a)) fail(Errc::CycleDetected, "relations contain a cycle through " + p.labels_[a]);
    return p;
}

const std::string& Poset::label(int a) const {
    if (a < 0 || a >= size_) fail(Errc::IndexOutOfRange, "element index out of range");
    return labels_[a];
}

int Poset::index_of(const std::string& label) const {
    for (int i = 0; i < size_; ++i)
        if (labels_[i] == label) return i;
    fail(Errc::UnknownLabel, "unknown label: " + label);
}

std::vector<int> Poset::all_elements() const {
    std::vector<int> v(size_);
    for (int i = 0; i < size_; ++i) v[i] = i;
    return v;
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b) {
            if (!less(a, b)) continue;
            bool direct = true;
            for (int c = 0; c < size_ && direct; ++c)
                if (less(a, c) && less(c, b)) direct = false;
            if (direct) covers.emplace_back(a, b);
        }
    return covers;
}

std::vector<int> Poset::minimal_elements(std::span<const int> subset) const {
    auto sub = checked_subset(subset);
    std::vector<int> mins;
    for (int a : sub) {
        bool minimal = true;
        for (int b : sub)
            if (less(b, a)) { minimal = false; break; }
        if (minimal) mins.push_back(a);
    }
    return mins;
}

std::vector<int> Poset::linear_extension() const {
    std::vector<int> indeg(size_, 0);
    for (int a = 0; a < size_; ++a)
        for (int b = 0; b < size_; ++b)
            if (less(a, b)) ++indeg[b];
    // Closure in-degrees work just as well as cover in-degrees here.
    std::vector<int> order;
    std::vector<char> done(size_, 0);
    order.reserve(size_);
    for (int step = 0; step < size_; ++step) {
        int pick = -1;
        for (int a = 0; a < size_; ++a)
            if (!done[a] && indeg[a] == 0) { pick = a; break; }
        done[pick] = 1;
        order.push_back(pick);
        for (int b = 0; b < size_; ++b)
            if (less(pick, b)) --indeg[b];
    }
    return order;
}

std::vector<int> Poset::checked_subset(std::span<const int> subset) const {
    std::vector<int> sub(subset.begin(), subset.end());
    for (int a : sub)
        if (a < 0 || a >= size_) fail(Errc::IndexOutOfRange, "subset element out of range");
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    return sub;
}

std::vector<int> Poset::match_successors(const std::vector<int>& subset) const {
    const int k = static_cast<int>(subset.size());
    std::vector<int> match_succ(k, -1);  // left position -> right position
    std::vector<int> match_pred(k, -1);  // right position -> left position
    std::vector<char> seen(k, 0);
    std::function<bool(int)> improve = [&](int p) -> bool {
        for (int q = 0; q < k; ++q) {
            if (seen[q] || !less(subset[p], subset[q])) continue;
            seen[q] = 1;
            if (match_pred[q] == -1 || improve(match_pred[q])) {
                match_pred[q] = p;
                match_succ[p] = q;
                return true;
            }
        }
        return false;
    };
    for (int p = 0; p < k; ++p) {
        std::fill(seen.begin(), seen.end(), 0);
        improve(p);
    }
    return match_succ;
}

int Poset::width(std::span<const int> subset) const {
    auto sub = checked_subset(subset);
    auto succ = match_successors(sub);
    int matched = 0;
    for (int s : succ)
        if (s != -1) ++matched;
    return static_cast<int>(sub.size()) - matched;
}

int Poset::width() const { return width(all_elements()); }

Antichain Poset::max_antichain(std::span<const int> subset) const {
    auto sub = checked_subset(subset);
    const int target = width(sub);
    // Greedy by lowest index: keep an element iff a maximum antichain through
    // the current choice still exists among the remaining incomparable ones.
    Antichain chosen;
    std::vector<int> avail = sub;
    while (static_cast<int>(chosen.size()) < target) {
        for (int a : avail) {
            std::vector<int> rest;
            for (int b : avail)
                if (b != a && !comparable(a, b)) rest.push_back(b);
            if (static_cast<int>(chosen.size()) + 1 + width(rest) == target) {
                chosen.push_back(a);
                avail = std::move(rest);
                break;
            }
        }
    }
    return chosen;
}

Antichain Poset::max_antichain() const { return max_antichain(all_elements()); }

std::vector<Chain> Poset::min_chain_cover(std::span<const int> subset) const {
    auto sub = checked_subset(subset);
    auto succ = match_successors(sub);
    const int k = static_cast<int>(sub.size());
    std::vector<char> is_succ(k, 0);
    for (int p = 0; p < k; ++p)
        if (succ[p] != -1) is_succ[succ[p]] = 1;
    std::vector<Chain> chains;
    for (int p = 0; p < k; ++p) {
        if (is_succ[p]) continue;  // not a chain head
        Chain c;
        for (int q = p; q != -1; q = succ[q]) c.push_back(sub[q]);
        chains.push_back(std::move(c));
    }
    return chains;
}

std::vector<Chain> Poset::min_chain_cover() const { return min_chain_cover(all_elements()); }

std::vector<Chain> Poset::maximal_chains() const {
    std::vector<std::vector<int>> succ(size_);
    std::vector<char> has_pred(size_, 0);
    for (auto [a, b] : cover_relations()) {
        succ[a].push_back(b);
        has_pred[b] = 1;
    }
    std::vector<Chain> out;
    Chain cur;
    std::function<void(int)> dfs = [&](int a) {
        cur.push_back(a);
        if (succ[a].empty())
            out.push_back(cur);
        else
            for (int b : succ[a]) dfs(b);
        cur.pop_back();
    };
    for (int a = 0; a < size_; ++a)
        if (!has_pred[a]) dfs(a);
    return out;
}

bool Poset::is_chain(std::span<const int> elems) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (!comparable(elems[i], elems[j])) return false;
    return true;
}

bool Poset::is_antichain(std::span<const int> elems) const {
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = i + 1; j < elems.size(); ++j)
            if (comparable(elems[i], elems[j])) return false;
    return true;
}

}  // namespace pospoly
