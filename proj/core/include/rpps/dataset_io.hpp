#pragma once

#include <filesystem>
#include <iosfwd>

#include "rpps/datagen.hpp"

namespace rpps {

// CSV with header "y1,y2"; values written with 17 significant digits so a
// read of a written file reproduces the points bit for bit.

void write_dataset_csv(std::ostream& out, const DataSet& data);
DataSet read_dataset_csv(std::istream& in);

void write_dataset_file(const std::filesystem::path& path, const DataSet& data);
DataSet read_dataset_file(const std::filesystem::path& path);

}  // namespace rpps
