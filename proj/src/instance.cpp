#include "tspq/instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "tspq/rng.hpp"

namespace tspq {

namespace {

constexpr double kEarthRadiusKm = 6371.0;

double deg2rad(double deg) { return deg * std::numbers::pi / 180.0; }

void check_city(const City& c) {
    if (c.name.empty())
        throw std::invalid_argument("city name must be nonempty");
    if (c.lat < -90.0 || c.lat > 90.0)
        throw std::invalid_argument("latitude out of range for city " + c.name);
    if (c.lon < -180.0 || c.lon > 180.0)
        throw std::invalid_argument("longitude out of range for city " + c.name);
}

} // namespace

double DistanceMatrix::max_edge() const {
    double m = 0.0;
    for (double v : d) m = std::max(m, v);
    return m;
}

std::vector<int> TspInstance::intermediate_indices() const {
    std::vector<int> out;
    out.reserve(cities.size() - 2);
    for (int i = 0; i < size(); ++i)
        if (i != start && i != end) out.push_back(i);
    return out;
}

double haversine_km(const City& a, const City& b) {
    check_city(a);
    check_city(b);
    const double lat1 = deg2rad(a.lat), lat2 = deg2rad(b.lat);
    const double dlat = lat2 - lat1;
    const double dlon = deg2rad(b.lon) - deg2rad(a.lon);
    const double s = std::sin(dlat / 2.0) * std::sin(dlat / 2.0) +
                     std::cos(lat1) * std::cos(lat2) *
                         std::sin(dlon / 2.0) * std::sin(dlon / 2.0);
    return 2.0 * kEarthRadiusKm * std::asin(std::min(1.0, std::sqrt(s)));
}

DistanceMatrix build_distance_matrix(const std::vector<City>& cities) {
    const int n = static_cast<int>(cities.size());
    if (n < 2)
        throw std::invalid_argument("need at least 2 cities");
    std::set<std::string> names;
    for (const auto& c : cities) {
        check_city(c);
        if (!names.insert(c.name).second)
            throw std::invalid_argument("duplicate city name: " + c.name);
    }
    DistanceMatrix m;
    m.n = n;
    m.d.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dij = haversine_km(cities[i], cities[j]);
            m.d[static_cast<std::size_t>(i) * n + j] = dij;
            m.d[static_cast<std::size_t>(j) * n + i] = dij;
        }
    }
    return m;
}

TspInstance make_instance(std::vector<City> cities, int start, int end) {
    TspInstance inst;
    inst.dist = build_distance_matrix(cities);
    inst.cities = std::move(cities);
    const int n = inst.size();
    if (start < 0 || start >= n || end < 0 || end >= n)
        throw std::invalid_argument("start/end index out of range");
    if (start == end)
        throw std::invalid_argument("start and end must differ");
    inst.start = start;
    inst.end = end;
    return inst;
}

void validate_tour(const TspInstance& instance, const Tour& tour) {
    const int n = instance.size();
    if (static_cast<int>(tour.order.size()) != n)
        throw std::invalid_argument("tour length != city count");
    if (tour.order.front() != instance.start)
        throw std::invalid_argument("tour does not begin at the departure city");
    if (tour.order.back() != instance.end)
        throw std::invalid_argument("tour does not end at the destination city");
    std::vector<char> seen(n, 0);
    for (int idx : tour.order) {
        if (idx < 0 || idx >= n)
            throw std::invalid_argument("tour contains an out-of-range city index");
        if (seen[idx]++)
            throw std::invalid_argument("tour visits city " +
                                        instance.cities[idx].name + " twice");
    }
}

double tour_cost(const TspInstance& instance, const Tour& tour) {
    validate_tour(instance, tour);
    double c = 0.0;
    for (std::size_t i = 0; i + 1 < tour.order.size(); ++i)
        c += instance.dist.at(tour.order[i], tour.order[i + 1]);
    c += instance.dist.at(tour.order.back(), tour.order.front());
    return c;
}

const std::vector<City>& default_city_pool() {
    static const std::vector<City> pool = {
        {"Amsterdam", 4.9041, 52.3676},
        {"Barcelona", 2.1734, 41.3851},
        {"Berlin", 13.4050, 52.5200},
        {"Calais", 1.8587, 50.9513},
        {"Madrid", -3.7038, 40.4168},
        {"Milan", 9.1900, 45.4642},
        {"Paris", 2.3522, 48.8566},
        {"Rome", 12.4964, 41.9028},
        {"Vienna", 16.3738, 48.2082},
        {"Zurich", 8.5417, 47.3769},
    };
    return pool;
}

std::vector<City> load_city_pool_json(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open city pool file: " + path);
    nlohmann::json j;
    in >> j;
    if (!j.is_array())
        throw std::runtime_error("city pool must be a JSON array: " + path);
    std::vector<City> pool;
    for (const auto& e : j) {
        City c{e.at("name").get<std::string>(), e.at("lon").get<double>(),
               e.at("lat").get<double>()};
        check_city(c);
        pool.push_back(std::move(c));
    }
    return pool;
}

TspInstance select_subinstance(const std::vector<City>& pool, int n,
                               std::uint64_t seed, int max_n) {
    if (n < 4 || n > max_n)
        throw std::invalid_argument("city count " + std::to_string(n) +
                                    " outside [4, " + std::to_string(max_n) + "]");
    int cal = -1, mil = -1;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i) {
        if (pool[i].name == "Calais") cal = i;
        if (pool[i].name == "Milan") mil = i;
    }
    if (cal < 0 || mil < 0)
        throw std::invalid_argument("pool must contain Calais and Milan");
    if (static_cast<int>(pool.size()) < n)
        throw std::invalid_argument("pool smaller than requested instance");

    std::vector<int> others;
    for (int i = 0; i < static_cast<int>(pool.size()); ++i)
        if (i != cal && i != mil) others.push_back(i);

    // partial Fisher-Yates, then sort the chosen prefix for a stable order
    SplitMix64 sm(seed);
    for (int i = 0; i < n - 2; ++i) {
        const std::size_t j =
            i + sm.next() % (others.size() - static_cast<std::size_t>(i));
        std::swap(others[i], others[j]);
    }
    std::vector<int> chosen(others.begin(), others.begin() + (n - 2));
    std::sort(chosen.begin(), chosen.end());

    std::vector<City> cities;
    cities.push_back(pool[cal]);
    for (int idx : chosen) cities.push_back(pool[idx]);
    cities.push_back(pool[mil]);
    return make_instance(std::move(cities), 0, n - 1);
}

} // namespace tspq
