#ifndef MCD_EDGESET_HPP
#define MCD_EDGESET_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mcd/error.hpp"

namespace mcd {

/// Set of edge indices as a 64-bit mask. Every enumeration in the library is
/// budget-guarded far below 64 edges, so the fixed width is an invariant, not
/// a practical limit.
struct EdgeSet {
    std::uint64_t bits = 0;

    static EdgeSet of(std::initializer_list<int> idx) {
        EdgeSet s;
        for (int e : idx) s.insert(e);
        return s;
    }
    static EdgeSet from_indices(const std::vector<int>& idx) {
        EdgeSet s;
        for (int e : idx) s.insert(e);
        return s;
    }
    /// All edges 0..m-1.
    static EdgeSet full(int m) {
        check(m == 0 ? 0 : m - 1);
        return EdgeSet{m == 64 ? ~0ull : ((1ull << m) - 1)};
    }

    bool contains(int e) const { return (bits >> e) & 1u; }
    void insert(int e) {
        check(e);
        bits |= 1ull << e;
    }
    void erase(int e) { bits &= ~(1ull << e); }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(const EdgeSet& other) const { return (bits & ~other.bits) == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    static void check(int e) {
        if (e < 0 || e >= 64) fail(errc::budget_exceeded, "edge index beyond the 64-edge working range");
    }
};

/// Canonical order: lexicographic on the ascending index sequence, so {} <
/// {0} < {0,1} < {0,2} < {1}. Used to sort enumeration output.
inline bool lex_less(const EdgeSet& x, const EdgeSet& y) {
    std::uint64_t diff = x.bits ^ y.bits;
    if (diff == 0) return false;
    int low = std::countr_zero(diff);
    // Below `low` the sequences agree. Whoever owns `low` continues with the
    // smaller element, unless the other side is exhausted (a proper prefix).
    if (x.contains(low)) return (y.bits >> low) != 0;
    return (x.bits >> low) == 0;
}

inline std::string to_string(const EdgeSet& s) {
    std::string out = "{";
    bool first = true;
    for (int e : s.indices()) {
        if (!first) out += ",";
        out += std::to_string(e);
        first = false;
    }
    return out + "}";
}

} // namespace mcd

#endif
