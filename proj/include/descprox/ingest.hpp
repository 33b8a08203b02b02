#pragma once

#include "descprox/space.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace descprox {

/// How raw pixels become descriptions: channel layout, quantization step and
/// optional position coordinates appended after the channels.
struct ProbeSpec {
    enum class Kind { greyscale, rgb };
    Kind kind = Kind::greyscale;
    std::uint32_t quantize = 1;     // feature = floor(raw / quantize), q >= 1
    bool include_position = false;  // append pixel x and y as trailing features

    static ProbeSpec greyscale(std::uint32_t q = 1, bool with_position = false);
    static ProbeSpec rgb(std::uint32_t q = 1, bool with_position = false);
};

/// Reads a comma-separated UTF-8 table with a header row. id_column names the
/// points; feature_columns are read as integers in the given order. Decimal
/// cells are multiplied by decimal_scale and must land on integers exactly.
/// Errors name the offending line and column.
DescribedSpace load_csv(const std::string& path, const std::string& id_column,
                        const std::vector<std::string>& feature_columns,
                        std::uint32_t decimal_scale = 1);

/// Reads PGM (magic P2 ascii, P5 binary) or PPM (P3 ascii, P6 binary) with
/// maxval up to 65535; binary samples above 255 are two bytes, big-endian.
/// One point per pixel in row-major order, id "x,y" with zero-based column x
/// and row y. A greyscale probe requires PGM input and an rgb probe PPM.
DescribedSpace load_image(const std::string& path, const ProbeSpec& probe);

/// A named pixel rectangle (inclusive bounds, image-backed spaces only) or an
/// explicit id list (any space).
struct RegionSpec {
    std::string name;
    std::optional<std::array<std::size_t, 4>> rect;  // x0, y0, x1, y1 inclusive
    std::optional<std::vector<std::string>> ids;
};

PointSet region(const DescribedSpace& space, const RegionSpec& spec);

/// JSON file mapping name -> {"rect":[x0,y0,x1,y1]} or {"ids":[...]}.
std::map<std::string, RegionSpec> load_regions(const std::string& path);

}  // namespace descprox
