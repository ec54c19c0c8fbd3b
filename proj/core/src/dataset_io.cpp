#include "rpps/dataset_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "rpps/error.hpp"
#include "rpps/serialization.hpp"

namespace rpps {
namespace {

double parse_field(std::string_view text, std::size_t line) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) text.remove_suffix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
        fail(ErrorCode::ConfigError, "line " + std::to_string(line) + ": cannot parse '" + std::string(text) + "'");
    return value;
}

}  // namespace

void write_dataset_csv(std::ostream& out, const DataSet& data) {
    out << "y1,y2\n";
    for (const Datum& d : data.points) out << format_double(d.y1) << ',' << format_double(d.y2) << '\n';
}

DataSet read_dataset_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) fail(ErrorCode::ConfigError, "dataset is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "y1,y2") fail(ErrorCode::ConfigError, "dataset header must be 'y1,y2', got '" + line + "'");
    DataSet data;
    std::size_t number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty() || line == "\r") continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            fail(ErrorCode::ConfigError, "line " + std::to_string(number) + ": expected two fields");
        const std::string_view view(line);
        data.points.push_back({parse_field(view.substr(0, comma), number), parse_field(view.substr(comma + 1), number)});
    }
    return data;
}

void write_dataset_file(const std::filesystem::path& path, const DataSet& data) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::IoError, "cannot write " + path.string());
    write_dataset_csv(out, data);
    if (!out) fail(ErrorCode::IoError, "write failed for " + path.string());
}

DataSet read_dataset_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::IoError, "cannot open " + path.string());
    try {
        return read_dataset_csv(in);
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

}  // namespace rpps
