#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tspq {

struct City {
    std::string name;
    double lon = 0.0; // degrees east
    double lat = 0.0; // degrees north
};

struct DistanceMatrix {
    int n = 0;
    std::vector<double> d; // row-major n*n, kilometers

    double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
    double max_edge() const;
};

// Fixed-endpoint TSP instance: tours start at `start`, end at `end`,
// and close with the implicit end->start edge.
struct TspInstance {
    std::vector<City> cities;
    DistanceMatrix dist;
    int start = 0;
    int end = 0;

    int size() const { return static_cast<int>(cities.size()); }
    std::vector<int> intermediate_indices() const;
};

// Visit order over all city indices; order.front() == start,
// order.back() == end.
struct Tour {
    std::vector<int> order;
};

// Great-circle distance, Earth radius 6371.0 km.
double haversine_km(const City& a, const City& b);

// Pairwise haversine matrix. Throws std::invalid_argument on duplicate
// names, fewer than 2 cities, or out-of-range coordinates.
DistanceMatrix build_distance_matrix(const std::vector<City>& cities);

TspInstance make_instance(std::vector<City> cities, int start, int end);

// Throws std::invalid_argument describing the first violation found.
void validate_tour(const TspInstance& instance, const Tour& tour);

// Closed-loop cost: consecutive edges plus the end->start return edge.
double tour_cost(const TspInstance& instance, const Tour& tour);

// The ten-city pool the experiments draw from. Calais is the departure
// city and Milan the destination in every derived instance.
const std::vector<City>& default_city_pool();

// Pool file format: JSON array of {"name":..., "lon":..., "lat":...}.
std::vector<City> load_city_pool_json(const std::string& path);

// Seeded draw of an n-city instance from the pool: Calais and Milan are
// always present (as start/end); the other n-2 cities are drawn without
// replacement. Deterministic per seed (splitmix64 Fisher-Yates).
TspInstance select_subinstance(const std::vector<City>& pool, int n,
                               std::uint64_t seed, int max_n = 8);

} // namespace tspq
