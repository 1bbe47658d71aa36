#include "tspq/classical.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tspq {

std::uint64_t factorial(int m) {
    std::uint64_t f = 1;
    for (int i = 2; i <= m; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<int> permutation_unrank(std::uint64_t rank, int m) {
    std::vector<int> items(m);
    for (int i = 0; i < m; ++i) items[i] = i;
    std::vector<int> perm;
    perm.reserve(m);
    std::uint64_t f = factorial(m);
    for (int i = m; i >= 1; --i) {
        f /= static_cast<std::uint64_t>(i);
        const std::size_t pick = static_cast<std::size_t>(rank / f);
        rank %= f;
        perm.push_back(items[pick]);
        items.erase(items.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    return perm;
}

TourEnumerator::TourEnumerator(const TspInstance& instance)
    : instance_(&instance), inter_(instance.intermediate_indices()) {
    count_ = factorial(static_cast<int>(inter_.size()));
}

bool TourEnumerator::next(Tour& out) {
    if (done_) return false;
    if (!first_) {
        if (!std::next_permutation(inter_.begin(), inter_.end())) {
            done_ = true;
            return false;
        }
    }
    first_ = false;
    out.order.clear();
    out.order.reserve(instance_->cities.size());
    out.order.push_back(instance_->start);
    out.order.insert(out.order.end(), inter_.begin(), inter_.end());
    out.order.push_back(instance_->end);
    return true;
}

void TourEnumerator::reset() {
    inter_ = instance_->intermediate_indices();
    first_ = true;
    done_ = false;
}

std::vector<Tour> enumerate_tours(const TspInstance& instance) {
    std::vector<Tour> out;
    TourEnumerator en(instance);
    Tour t;
    while (en.next(t)) out.push_back(t);
    return out;
}

namespace {

void check_bound(const TspInstance& instance, int max_cities) {
    if (instance.size() > max_cities)
        throw std::invalid_argument(
            "brute force limited to " + std::to_string(max_cities) +
            " cities; got " + std::to_string(instance.size()));
}

// cost of the tour start -> inter[perm...] -> end -> start, no validation
double perm_cost(const TspInstance& inst, const std::vector<int>& inter) {
    double c = inst.dist.at(inst.start, inter.front());
    for (std::size_t i = 0; i + 1 < inter.size(); ++i)
        c += inst.dist.at(inter[i], inter[i + 1]);
    c += inst.dist.at(inter.back(), inst.end);
    c += inst.dist.at(inst.end, inst.start);
    return c;
}

Tour tour_from_inter(const TspInstance& inst, const std::vector<int>& inter) {
    Tour t;
    t.order.reserve(inst.cities.size());
    t.order.push_back(inst.start);
    t.order.insert(t.order.end(), inter.begin(), inter.end());
    t.order.push_back(inst.end);
    return t;
}

} // namespace

BruteForceResult brute_force_reference(const TspInstance& instance,
                                       int max_cities) {
    check_bound(instance, max_cities);
    const std::vector<int> base = instance.intermediate_indices();
    if (base.empty()) {
        Tour only{{instance.start, instance.end}};
        return {only, tour_cost(instance, only), 1};
    }

    std::vector<int> inter = base;
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> best_inter;
    std::uint64_t evaluated = 0;
    do {
        const double c = perm_cost(instance, inter);
        ++evaluated;
        if (c < best) {
            best = c;
            best_inter = inter;
        }
    } while (std::next_permutation(inter.begin(), inter.end()));

    return {tour_from_inter(instance, best_inter), best, evaluated};
}

BruteForceResult brute_force_optimal(const TspInstance& instance,
                                     int max_cities) {
    check_bound(instance, max_cities);
    const std::vector<int> base = instance.intermediate_indices();
    const int m = static_cast<int>(base.size());
    const std::uint64_t total = factorial(m);

    // Small problems are not worth the thread setup.
    if (total < 5040) {
        BruteForceResult r = brute_force_reference(instance, max_cities);
        return r;
    }

    double best_cost = std::numeric_limits<double>::infinity();
    std::uint64_t best_rank = 0;

#ifdef _OPENMP
#pragma omp parallel
    {
        double loc_cost = std::numeric_limits<double>::infinity();
        std::uint64_t loc_rank = 0;
        const int nt = omp_get_num_threads();
        const int tid = omp_get_thread_num();
        const std::uint64_t chunk = (total + nt - 1) / nt;
        const std::uint64_t lo = std::min<std::uint64_t>(total, chunk * tid);
        const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
        if (lo < hi) {
            std::vector<int> local = permutation_unrank(lo, m);
            std::vector<int> inter(m);
            for (std::uint64_t r = lo; r < hi; ++r) {
                for (int i = 0; i < m; ++i) inter[i] = base[local[i]];
                const double c = perm_cost(instance, inter);
                if (c < loc_cost) {
                    loc_cost = c;
                    loc_rank = r;
                }
                std::next_permutation(local.begin(), local.end());
            }
        }
#pragma omp critical
        {
            if (loc_cost < best_cost ||
                (loc_cost == best_cost && loc_rank < best_rank)) {
                best_cost = loc_cost;
                best_rank = loc_rank;
            }
        }
    }
#else
    {
        std::vector<int> local = permutation_unrank(0, m);
        std::vector<int> inter(m);
        for (std::uint64_t r = 0; r < total; ++r) {
            for (int i = 0; i < m; ++i) inter[i] = base[local[i]];
            const double c = perm_cost(instance, inter);
            if (c < best_cost) {
                best_cost = c;
                best_rank = r;
            }
            std::next_permutation(local.begin(), local.end());
        }
    }
#endif

    const std::vector<int> winner = permutation_unrank(best_rank, m);
    std::vector<int> inter(m);
    for (int i = 0; i < m; ++i) inter[i] = base[winner[i]];
    return {tour_from_inter(instance, inter), best_cost, total};
}

Tour nearest_neighbor_tour(const TspInstance& instance) {
    std::vector<int> remaining = instance.intermediate_indices();
    Tour t;
    t.order.push_back(instance.start);
    int cur = instance.start;
    while (!remaining.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < remaining.size(); ++i)
            if (instance.dist.at(cur, remaining[i]) <
                instance.dist.at(cur, remaining[best]))
                best = i;
        cur = remaining[best];
        t.order.push_back(cur);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    }
    t.order.push_back(instance.end);
    return t;
}

} // namespace tspq
