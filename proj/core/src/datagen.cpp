#include "rpps/datagen.hpp"

#include <cmath>
#include <string>

#include "rpps/error.hpp"
#include "rpps/random.hpp"

namespace rpps {

void GeneratorSpec::validate() const {
    require(degree >= 0, ErrorCode::InvalidArgument, "generator degree must be >= 0");
    require(coeffs.size() == static_cast<std::size_t>(degree) + 1, ErrorCode::InvalidArgument,
            "generator needs degree+1 = " + std::to_string(degree + 1) + " coefficients, got " +
                std::to_string(coeffs.size()));
    require(std::isfinite(sigma) && sigma > 0.0, ErrorCode::InvalidArgument,
            "generator sigma must be finite and > 0");
    for (double c : coeffs)
        require(std::isfinite(c), ErrorCode::InvalidArgument, "generator coefficients must be finite");
}

DataSet DataSet::subset(std::span<const std::size_t> indices) const {
    DataSet out;
    out.points.reserve(indices.size());
    for (std::size_t i : indices) {
        require(i < points.size(), ErrorCode::InvalidArgument, "subset index out of range");
        out.points.push_back(points[i]);
    }
    return out;
}

DataSet DataSet::concat(const DataSet& other) const {
    DataSet out;
    out.points.reserve(points.size() + other.points.size());
    out.points.insert(out.points.end(), points.begin(), points.end());
    out.points.insert(out.points.end(), other.points.begin(), other.points.end());
    return out;
}

DataSet sample_dataset(const GeneratorSpec& spec, std::size_t n, std::uint64_t seed) {
    spec.validate();
    require(n >= 1, ErrorCode::InvalidArgument, "sample_dataset needs n >= 1");
    Engine engine = make_engine(seed);
    DataSet data;
    data.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double y1 = draw_uniform(engine, -1.0, 1.0);
        const double y2 = spec.mean(y1) + spec.sigma * draw_standard_normal(engine);
        data.points.push_back({y1, y2});
    }
    data.provenance = Provenance{spec, seed};
    return data;
}

double true_log_density(const GeneratorSpec& spec, const DataSet& data, CovariateTerm term) {
    spec.validate();
    const double variance = spec.sigma * spec.sigma;
    double total = 0.0;
    for (const Datum& d : data.points) {
        if (!(d.y1 >= -1.0 && d.y1 <= 1.0))
            fail(ErrorCode::DomainError, "y1 = " + std::to_string(d.y1) + " outside [-1, 1]");
        total += covariate_log_density(term) + log_normal_density(d.y2, spec.mean(d.y1), variance);
    }
    return total;
}

}  // namespace rpps
