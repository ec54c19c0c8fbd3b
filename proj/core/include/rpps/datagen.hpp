#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rpps/density.hpp"

namespace rpps {

/// Latent data generating process: y1 ~ U(-1, 1), y2 | y1 ~ N(poly(y1), sigma^2).
struct GeneratorSpec {
    int degree = 0;
    std::vector<double> coeffs{0.0};  // c_0 .. c_degree
    double sigma = 1.0;

    /// Throws Error{InvalidArgument} on a broken invariant.
    void validate() const;
    [[nodiscard]] double mean(double y1) const noexcept { return polyval(coeffs, y1); }

    bool operator==(const GeneratorSpec&) const = default;
};

struct Datum {
    double y1 = 0.0;
    double y2 = 0.0;

    bool operator==(const Datum&) const = default;
};

struct Provenance {
    GeneratorSpec spec;
    std::uint64_t seed = 0;

    bool operator==(const Provenance&) const = default;
};

/// An ordered measurement. Partitions are taken by index, so order matters.
/// Subsets may be empty (an empty block has joint log density 0).
struct DataSet {
    std::vector<Datum> points;
    std::optional<Provenance> provenance;

    [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
    [[nodiscard]] bool empty() const noexcept { return points.empty(); }

    /// Points at the given indices, in that order (repeats allowed). No provenance.
    [[nodiscard]] DataSet subset(std::span<const std::size_t> indices) const;
    /// This measurement followed by other's points.
    [[nodiscard]] DataSet concat(const DataSet& other) const;

    bool operator==(const DataSet&) const = default;
};

DataSet sample_dataset(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed);

/// Joint log density of data under spec. Throws Error{DomainError} if any y1
/// lies outside [-1, 1].
double true_log_density(const GeneratorSpec& spec, const DataSet& data,
                        CovariateTerm term = CovariateTerm::Included);

}  // namespace rpps
