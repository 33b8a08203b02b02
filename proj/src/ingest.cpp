#include "descprox/ingest.hpp"

#include "descprox/exact.hpp"

#include "json.hpp"

#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace descprox {
namespace {

std::string trimmed(const std::string& text) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return text.substr(begin, end - begin);
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(trimmed(cell));
            cell.clear();
        } else {
            cell.push_back(c);
        }
    }
    cells.push_back(trimmed(cell));
    return cells;
}

std::int64_t scaled_integer(const std::string& cell, std::uint32_t scale) {
    const Rational value = parse_rational(cell) * Rational(BigInt(scale));
    if (value.denominator() != 1)
        throw std::invalid_argument("value '" + cell + "' does not scale to an integer " +
                                    "with factor " + std::to_string(scale));
    const BigInt num = value.numerator();
    if (num > BigInt(std::numeric_limits<std::int64_t>::max()) ||
        num < BigInt(std::numeric_limits<std::int64_t>::min()))
        throw std::invalid_argument("value '" + cell + "' is out of feature range");
    return num.convert_to<std::int64_t>();
}

/// Whitespace- and comment-aware token reader for the PNM header and ascii
/// sample sections. Returns "" at end of input.
class PnmTokens {
public:
    explicit PnmTokens(std::istream& in) : in_(in) {}

    std::string next() {
        std::string tok;
        int c;
        while ((c = in_.get()) != EOF) {
            if (c == '#') {
                while ((c = in_.get()) != EOF && c != '\n') {
                }
                continue;
            }
            if (std::isspace(c)) continue;
            tok.push_back(static_cast<char>(c));
            while ((c = in_.get()) != EOF && !std::isspace(c) && c != '#')
                tok.push_back(static_cast<char>(c));
            if (c == '#') in_.unget();
            return tok;
        }
        return tok;
    }

private:
    std::istream& in_;
};

std::size_t header_number(PnmTokens& tokens, const std::string& path, const char* what) {
    const std::string tok = tokens.next();
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(path + ": malformed header (" + what + ")");
    return static_cast<std::size_t>(std::stoull(tok));
}

}  // namespace

ProbeSpec ProbeSpec::greyscale(std::uint32_t q, bool with_position) {
    ProbeSpec p;
    p.kind = Kind::greyscale;
    p.quantize = q;
    p.include_position = with_position;
    return p;
}

ProbeSpec ProbeSpec::rgb(std::uint32_t q, bool with_position) {
    ProbeSpec p;
    p.kind = Kind::rgb;
    p.quantize = q;
    p.include_position = with_position;
    return p;
}

DescribedSpace load_csv(const std::string& path, const std::string& id_column,
                        const std::vector<std::string>& feature_columns,
                        std::uint32_t decimal_scale) {
    if (feature_columns.empty())
        throw std::invalid_argument("at least one feature column is required");
    if (decimal_scale == 0) throw std::invalid_argument("decimal scale must be positive");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(path + ": empty file");
    const std::vector<std::string> header = split_csv_line(line);
    auto column_index = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw std::invalid_argument(path + ": missing column '" + name + "'");
    };
    const std::size_t id_index = column_index(id_column);
    std::vector<std::size_t> feature_indices;
    feature_indices.reserve(feature_columns.size());
    for (const std::string& name : feature_columns)
        feature_indices.push_back(column_index(name));

    std::vector<SpaceRow> rows;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (trimmed(line).empty()) continue;
        const std::vector<std::string> cells = split_csv_line(line);
        if (cells.size() != header.size())
            throw std::invalid_argument(path + ": line " + std::to_string(line_no) + " has " +
                                        std::to_string(cells.size()) + " cells, expected " +
                                        std::to_string(header.size()));
        SpaceRow row;
        row.id = cells[id_index];
        if (row.id.empty())
            throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                        ": empty id");
        std::vector<std::int64_t> values;
        values.reserve(feature_indices.size());
        for (std::size_t k = 0; k < feature_indices.size(); ++k) {
            try {
                values.push_back(scaled_integer(cells[feature_indices[k]], decimal_scale));
            } catch (const std::invalid_argument& err) {
                throw std::invalid_argument(path + ": line " + std::to_string(line_no) +
                                            ", column '" + feature_columns[k] +
                                            "': " + err.what());
            }
        }
        row.description = FeatureVector(std::move(values));
        rows.push_back(std::move(row));
    }
    return DescribedSpace::build(std::move(rows));
}

DescribedSpace load_image(const std::string& path, const ProbeSpec& probe) {
    if (probe.quantize == 0) throw std::invalid_argument("quantization step must be positive");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (in.gcount() != 2 || magic[0] != 'P' ||
        (magic[1] != '2' && magic[1] != '3' && magic[1] != '5' && magic[1] != '6'))
        throw std::invalid_argument(path + ": unsupported format magic");
    const bool binary = magic[1] == '5' || magic[1] == '6';
    const std::size_t channels = (magic[1] == '3' || magic[1] == '6') ? 3 : 1;
    if (probe.kind == ProbeSpec::Kind::greyscale && channels != 1)
        throw std::invalid_argument(path + ": greyscale probe requires PGM input, got PPM");
    if (probe.kind == ProbeSpec::Kind::rgb && channels != 3)
        throw std::invalid_argument(path + ": rgb probe requires PPM input, got PGM");

    PnmTokens tokens(in);
    const std::size_t width = header_number(tokens, path, "width");
    const std::size_t height = header_number(tokens, path, "height");
    const std::size_t maxval = header_number(tokens, path, "maxval");
    if (width == 0 || height == 0)
        throw std::invalid_argument(path + ": malformed header (zero dimension)");
    if (maxval == 0 || maxval > 65535)
        throw std::invalid_argument(path + ": malformed header (maxval out of range)");

    const std::size_t samples = width * height * channels;
    std::vector<std::uint32_t> raw;
    raw.reserve(samples);
    if (binary) {
        const std::size_t bytes_per_sample = maxval > 255 ? 2 : 1;
        std::vector<unsigned char> bytes(samples * bytes_per_sample);
        in.read(reinterpret_cast<char*>(bytes.data()),
                static_cast<std::streamsize>(bytes.size()));
        if (static_cast<std::size_t>(in.gcount()) != bytes.size())
            throw std::invalid_argument(path + ": truncated pixel data");
        for (std::size_t s = 0; s < samples; ++s) {
            const std::uint32_t value =
                bytes_per_sample == 1
                    ? bytes[s]
                    : (static_cast<std::uint32_t>(bytes[2 * s]) << 8) | bytes[2 * s + 1];
            raw.push_back(value);
        }
    } else {
        for (std::size_t s = 0; s < samples; ++s) {
            const std::string tok = tokens.next();
            if (tok.empty()) throw std::invalid_argument(path + ": truncated pixel data");
            if (tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument(path + ": non-numeric pixel value '" + tok + "'");
            raw.push_back(static_cast<std::uint32_t>(std::stoul(tok)));
        }
    }
    for (std::uint32_t value : raw)
        if (value > maxval)
            throw std::invalid_argument(path + ": pixel value exceeds maxval");

    std::vector<SpaceRow> rows;
    rows.reserve(width * height);
    for (std::size_t y = 0; y < height; ++y)
        for (std::size_t x = 0; x < width; ++x) {
            SpaceRow row;
            row.id = std::to_string(x) + "," + std::to_string(y);
            std::vector<std::int64_t> values;
            values.reserve(channels + (probe.include_position ? 2 : 0));
            const std::size_t base = (y * width + x) * channels;
            for (std::size_t c = 0; c < channels; ++c)
                values.push_back(static_cast<std::int64_t>(raw[base + c] / probe.quantize));
            if (probe.include_position) {
                values.push_back(static_cast<std::int64_t>(x));
                values.push_back(static_cast<std::int64_t>(y));
            }
            row.description = FeatureVector(std::move(values));
            rows.push_back(std::move(row));
        }
    return DescribedSpace::build(std::move(rows), DescribedSpace::Grid{width, height});
}

PointSet region(const DescribedSpace& space, const RegionSpec& spec) {
    if (spec.rect && spec.ids)
        throw std::invalid_argument("region '" + spec.name +
                                    "' has both a rectangle and an id list");
    if (spec.rect) {
        if (!space.grid())
            throw std::invalid_argument("region '" + spec.name +
                                        "' is a rectangle but the space has no pixel grid");
        const auto [x0, y0, x1, y1] = *spec.rect;
        const auto& grid = *space.grid();
        if (x0 > x1 || y0 > y1 || x1 >= grid.width || y1 >= grid.height)
            throw std::invalid_argument("region '" + spec.name + "' is out of bounds for a " +
                                        std::to_string(grid.width) + "x" +
                                        std::to_string(grid.height) + " image");
        PointSet out = space.empty_set();
        for (std::size_t y = y0; y <= y1; ++y)
            for (std::size_t x = x0; x <= x1; ++x) out.add(y * grid.width + x);
        return out;
    }
    if (spec.ids) return space.set_of(*spec.ids);
    throw std::invalid_argument("region '" + spec.name +
                                "' needs a rectangle or an id list");
}

std::map<std::string, RegionSpec> load_regions(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& err) {
        throw std::invalid_argument(path + ": " + err.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument(path + ": expected a JSON object of named regions");
    std::map<std::string, RegionSpec> out;
    for (const auto& [name, body] : doc.items()) {
        RegionSpec spec;
        spec.name = name;
        if (!body.is_object())
            throw std::invalid_argument(path + ": region '" + name +
                                        "' must be an object with \"rect\" or \"ids\"");
        if (body.contains("rect")) {
            const auto& rect = body.at("rect");
            if (!rect.is_array() || rect.size() != 4)
                throw std::invalid_argument(path + ": region '" + name +
                                            "' rect must be [x0,y0,x1,y1]");
            std::array<std::size_t, 4> bounds{};
            for (std::size_t i = 0; i < 4; ++i) {
                if (!rect[i].is_number_unsigned())
                    throw std::invalid_argument(path + ": region '" + name +
                                                "' rect bounds must be nonnegative integers");
                bounds[i] = rect[i].get<std::size_t>();
            }
            spec.rect = bounds;
        }
        if (body.contains("ids")) {
            if (spec.rect)
                throw std::invalid_argument(path + ": region '" + name +
                                            "' has both a rectangle and an id list");
            spec.ids = body.at("ids").get<std::vector<std::string>>();
        }
        if (!spec.rect && !spec.ids)
            throw std::invalid_argument(path + ": region '" + name +
                                        "' needs \"rect\" or \"ids\"");
        out.emplace(name, std::move(spec));
    }
    return out;
}

}  // namespace descprox
