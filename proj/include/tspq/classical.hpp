#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tspq/instance.hpp"

namespace tspq {

std::uint64_t factorial(int m);

// rank-th permutation of {0..m-1} in lexicographic order (Lehmer decode).
std::vector<int> permutation_unrank(std::uint64_t rank, int m);

// Streams the (n-2)! fixed-endpoint tours in lexicographic order of the
// intermediate cities' storage indices.
class TourEnumerator {
public:
    explicit TourEnumerator(const TspInstance& instance);

    std::uint64_t count() const { return count_; }
    bool next(Tour& out);
    void reset();

private:
    const TspInstance* instance_;
    std::vector<int> inter_;
    std::uint64_t count_ = 0;
    bool first_ = true;
    bool done_ = false;
};

// Convenience for tests and small n; materializes the whole stream.
std::vector<Tour> enumerate_tours(const TspInstance& instance);

struct BruteForceResult {
    Tour tour;
    double cost_km = 0.0;
    std::uint64_t tours_evaluated = 0;
};

// Exact optimum by exhaustive enumeration; ties broken by enumeration
// order (first minimal tour wins). OpenMP-chunked over permutation ranks
// with a (cost, rank) argmin so the tie-break is thread-count invariant.
// Throws std::invalid_argument when n exceeds max_cities.
BruteForceResult brute_force_optimal(const TspInstance& instance,
                                     int max_cities = 12);

// Serial reference implementation kept for testing the parallel path.
BruteForceResult brute_force_reference(const TspInstance& instance,
                                       int max_cities = 12);

// Greedy fallback tour: start fixed, repeatedly hop to the nearest
// unvisited intermediate, finish at the destination.
Tour nearest_neighbor_tour(const TspInstance& instance);

} // namespace tspq
