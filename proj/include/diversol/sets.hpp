#ifndef DIVERSOL_SETS_HPP
#define DIVERSOL_SETS_HPP

#include <algorithm>
#include <cassert>
#include <vector>

namespace diversol {

// Element sets are sorted vectors of distinct ids. Every function here
// preserves that invariant; callers constructing sets by hand should go
// through make_set().
using ElemSet = std::vector<int>;

inline bool is_canonical(const ElemSet& a) {
    for (std::size_t i = 1; i < a.size(); ++i)
        if (a[i - 1] >= a[i]) return false;
    return true;
}

inline ElemSet make_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

inline bool set_contains(const ElemSet& a, int e) {
    return std::binary_search(a.begin(), a.end(), e);
}

inline bool is_subset(const ElemSet& a, const ElemSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElemSet set_union(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline ElemSet set_diff(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    r.reserve(a.size());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline ElemSet sym_diff(const ElemSet& a, const ElemSet& b) {
    ElemSet r;
    r.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(r));
    return r;
}

inline ElemSet with_element(const ElemSet& a, int e) {
    assert(!set_contains(a, e));
    ElemSet r;
    r.reserve(a.size() + 1);
    auto it = std::lower_bound(a.begin(), a.end(), e);
    r.insert(r.end(), a.begin(), it);
    r.push_back(e);
    r.insert(r.end(), it, a.end());
    return r;
}

inline ElemSet without_element(const ElemSet& a, int e) {
    ElemSet r;
    r.reserve(a.size());
    for (int x : a)
        if (x != e) r.push_back(x);
    return r;
}

// Subset of `universe` selected by the bits of `mask` (universe.size() <= 63).
inline ElemSet subset_from_mask(const ElemSet& universe, std::uint64_t mask) {
    ElemSet r;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (mask >> i & 1) r.push_back(universe[i]);
    return r;
}

// Visits all size-k index combinations of {0,..,n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(static_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace diversol

#endif
