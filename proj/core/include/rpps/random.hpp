#pragma once

#include <cstdint>

#include <boost/random/mersenne_twister.hpp>

namespace rpps {

/// 64-bit Mersenne Twister. The Boost implementation and its distributions
/// produce the same streams on every platform, unlike <random>'s distributions.
using Engine = boost::random::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Sub-seed for an independent stream: mix64 applied along (base, stream, index).
/// Every replication/estimator in the harness draws from
/// derive_seed(config.seed, replication, stream).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index = 0) noexcept;

Engine make_engine(std::uint64_t seed);

double draw_uniform(Engine& engine, double lo, double hi);
double draw_standard_normal(Engine& engine);
/// Gamma with shape and rate (density proportional to t^(shape-1) exp(-rate t)).
double draw_gamma(Engine& engine, double shape, double rate);
/// Uniform integer in [0, n).
std::size_t draw_index(Engine& engine, std::size_t n);

}  // namespace rpps
