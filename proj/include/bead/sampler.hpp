#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "bead/core_model.hpp"

namespace bead {

// mt19937_64 seeded from (seed, substream); equal pairs give equal draws on every platform
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t substream = 0);

    double uniform();       // in the open interval (0,1)
    double exponential();   // rate 1
    double gamma_int(int k);

private:
    std::mt19937_64 gen_;
};

std::vector<double> dirichlet_draw(RandomStream& rs, const std::vector<int>& multiplicities);

// zeros of sum_i w_i/(x - a_i), poles strictly increasing, one zero per gap (increasing)
std::vector<double> secular_zeros(const std::vector<double>& poles, const std::vector<double>& weights);

BeadConfiguration sample_configuration(RandomStream& rs, const HexagonSpec& spec);

// fn(i, config) for i < count, possibly concurrently; fn must be safe for distinct i
void sample_each(const HexagonSpec& spec, std::size_t count, std::uint64_t seed, unsigned threads,
                 const std::function<void(std::size_t, const BeadConfiguration&)>& fn);

// sample i always uses substream i, so output does not depend on the thread count
std::vector<BeadConfiguration> sample_many(const HexagonSpec& spec, std::size_t count,
                                           std::uint64_t seed, unsigned threads = 1);

}  // namespace bead
