#ifndef MCD_BUDGET_HPP
#define MCD_BUDGET_HPP

namespace mcd {

/// Resource guards for the enumeration and hull engines. Operations refuse
/// (errc::budget_exceeded) instead of silently grinding when a run would
/// leave desk scale.
struct Budget {
    /// enumerate_minimal_multicuts refuses when the connected-partition count
    /// bound (2^|E|; partitions inject into cross-edge sets) exceeds this.
    long long max_partitions = 100'000'000;
    /// dominant_hrep refuses above this edge count.
    int max_hull_edges = 24;
    /// dd_convert refuses above this generator count.
    long long max_hull_generators = 50'000;
    /// Cap on the star size k / tree size l in family separation.
    int max_family_size = 6;
};

} // namespace mcd

#endif
