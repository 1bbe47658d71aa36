#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tspq/instance.hpp"

namespace tspq {

// Binary quadratic model for a fixed-endpoint tour. Variables are
// x[c,t] = 1 iff intermediate city c occupies intermediate slot t;
// both endpoints are compiled out, so num_vars = (n-2)^2.
struct QuboModel {
    int num_vars = 0;
    int num_inter = 0; // n - 2
    std::vector<double> linear;
    std::map<std::pair<int, int>, double> quadratic; // keys i<j
    double offset = 0.0;
    double penalty_a = 0.0;

    // instance layout the variables refer to
    std::vector<int> inter_cities; // storage order defines the city axis
    int start = 0;
    int end = 0;

    // row-major (city-major) variable map
    int var_of(int city_pos, int slot) const { return city_pos * num_inter + slot; }
    std::pair<int, int> city_slot_of(int var) const {
        return {var / num_inter, var % num_inter};
    }
};

// Spin model derived from a QUBO under s = 1 - 2x.
struct IsingModel {
    int num_spins = 0;
    std::vector<double> h;
    std::map<std::pair<int, int>, double> j; // keys i<j
    double constant = 0.0;
};

// Build the QUBO whose energy on any valid one-hot assignment equals the
// encoded tour's closed-loop cost exactly; invalid assignments pay
// penalty_a = alpha * n * max_edge per violated constraint unit.
QuboModel encode_tsp_qubo(const TspInstance& instance, double alpha = 2.0);

double qubo_energy(const QuboModel& model, const std::vector<std::uint8_t>& bits);

struct DecodeResult {
    bool valid = false;
    Tour tour;
    std::string violation;
};

// Valid iff the (n-2)x(n-2) assignment matrix is one-hot in every row
// and column; the violation string names the first failing constraint.
DecodeResult decode_bitstring(const QuboModel& model,
                              const std::vector<std::uint8_t>& bits);

IsingModel qubo_to_ising(const QuboModel& model);

// Energy of the computational basis state with bit i of `index` giving
// x_i (spin s_i = 1 - 2 x_i).
double ising_energy(const IsingModel& ising, std::uint64_t index);

// bit helpers shared by the samplers: character j of a bitstring is
// variable/qubit j
std::vector<std::uint8_t> bits_from_string(const std::string& s);
std::string bits_to_string(const std::vector<std::uint8_t>& bits);
std::vector<std::uint8_t> bits_from_index(std::uint64_t index, int width);

nlohmann::json qubo_to_json(const QuboModel& model);
QuboModel qubo_from_json(const nlohmann::json& j);

} // namespace tspq
