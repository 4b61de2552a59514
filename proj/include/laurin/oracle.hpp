#ifndef LAURIN_ORACLE_HPP
#define LAURIN_ORACLE_HPP

#include <functional>

#include "laurin/umrow.hpp"

namespace laurin {

// Bounded breadth-first exploration of E-orbits over tiny finite rings.
// States are rows with supports clipped to the window; ops that would
// leave the window are discarded, so NotReachableWithinWindow is a
// window-relative verdict, never a mathematical claim.
struct OrbitSpace {
    RingPtr ring; // |ring| <= 4
    int n = 2;    // <= 3
    std::int64_t lo = -1, hi = 1; // hi - lo <= 3
    std::size_t max_states = 4000000;
};

struct BfsResult {
    bool reachable = false;
    std::vector<ElementaryOp> path; // replays exactly when reachable
    std::size_t explored = 0;
};

BfsResult bfs_orbit_member(const Row& start, const Row& target, const OrbitSpace& space);

// Greedy shrinking of a failing scramble: drop ops, then shrink op
// coefficients and exponents toward zero, while the failure predicate
// holds on the row generated from e_1 by the op list.
std::vector<ElementaryOp> shrink_failing(const RingPtr& ring, int n,
                                         const std::vector<ElementaryOp>& ops,
                                         const std::function<bool(const UmRow&)>& fails);

struct OracleReport {
    std::size_t instances = 0;
    std::size_t reachable = 0;
    std::size_t agreed = 0;
    std::size_t disagreed = 0;
    std::string to_text() const;
};

} // namespace laurin

#endif
