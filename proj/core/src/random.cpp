#include "rpps/random.hpp"

#include <boost/random/gamma_distribution.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_int_distribution.hpp>
#include <boost/random/uniform_real_distribution.hpp>

namespace rpps {

std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) noexcept {
    return mix64(mix64(mix64(base) ^ stream) ^ index);
}

Engine make_engine(std::uint64_t seed) { return Engine(seed); }

double draw_uniform(Engine& engine, double lo, double hi) {
    return boost::random::uniform_real_distribution<double>(lo, hi)(engine);
}

double draw_standard_normal(Engine& engine) {
    return boost::random::normal_distribution<double>(0.0, 1.0)(engine);
}

double draw_gamma(Engine& engine, double shape, double rate) {
    return boost::random::gamma_distribution<double>(shape, 1.0 / rate)(engine);
}

std::size_t draw_index(Engine& engine, std::size_t n) {
    return boost::random::uniform_int_distribution<std::size_t>(0, n - 1)(engine);
}

}  // namespace rpps
