#include "gmoat/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gmoat {

namespace {

using Json = nlohmann::ordered_json;

std::int64_t parse_int(const std::string& field, std::size_t line, const char* name) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(field, &used);
    } catch (const std::logic_error&) {
        used = 0;
    }
    if (field.empty() || used != field.size()) {
        throw FormatError("line " + std::to_string(line) + ": field '" + name +
                          "' is not an integer: '" + field + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) parts.push_back(part);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

Json point_list(std::span<const GaussInt> points) {
    Json out = Json::array();
    for (const auto& z : points) out.push_back({z.re, z.im});
    return out;
}

std::vector<GaussInt> read_points(const Json& node, const std::string& where) {
    if (!node.is_array()) throw FormatError(where + ": expected an array of [a,b] pairs");
    std::vector<GaussInt> out;
    for (std::size_t i = 0; i < node.size(); ++i) {
        const auto& p = node[i];
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
            !p[1].is_number_integer()) {
            throw FormatError(where + "[" + std::to_string(i) + "]: expected [a,b] integers");
        }
        out.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
    }
    return out;
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw FormatError(where + ": missing field '" + key + "'");
    }
    return obj.at(key);
}

std::int64_t int_field(const Json& obj, const char* key, const std::string& where) {
    const auto& v = field(obj, key, where);
    if (!v.is_number_integer()) throw FormatError(where + "." + key + ": expected an integer");
    return v.get<std::int64_t>();
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

std::string fixed6(double v) {
    std::ostringstream out;
    out << std::fixed << std::setprecision(6) << v;
    return out.str();
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

}  // namespace

std::string prime_csv(std::span<const GaussInt> primes) {
    std::string out = "a,b,norm\n";
    for (const auto& z : primes) {
        out += std::to_string(z.re) + ',' + std::to_string(z.im) + ',' + std::to_string(norm(z)) + '\n';
    }
    return out;
}

std::vector<GaussInt> parse_prime_csv(const std::string& text) {
    auto lines = split(text, '\n');
    if (lines.empty() || lines.front() != "a,b,norm") {
        throw FormatError("line 1: expected header 'a,b,norm'");
    }
    std::vector<GaussInt> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        if (line.empty() && i + 1 == lines.size()) break;
        auto cols = split(line, ',');
        if (cols.size() != 3) {
            throw FormatError("line " + std::to_string(i + 1) + ": expected 3 fields, got " +
                              std::to_string(cols.size()));
        }
        GaussInt z{parse_int(cols[0], i + 1, "a"), parse_int(cols[1], i + 1, "b")};
        if (parse_int(cols[2], i + 1, "norm") != norm(z)) {
            throw FormatError("line " + std::to_string(i + 1) + ": field 'norm' does not equal a^2+b^2");
        }
        out.push_back(z);
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string cache_text(const PrimeSet& set) {
    auto body = prime_csv(set.primes());
    return body + "#cache," + std::to_string(set.norm_max()) + ',' +
           (set.include_axes() ? "1" : "0") + ',' + hex64(fnv1a64(body)) + '\n';
}

std::optional<PrimeSet> parse_cache(const std::string& text, std::int64_t norm_max,
                                    bool include_axes) {
    auto trailer_at = text.rfind("#cache,");
    if (trailer_at == std::string::npos) return std::nullopt;
    auto body = text.substr(0, trailer_at);
    std::string expected = "#cache," + std::to_string(norm_max) + ',' + (include_axes ? "1" : "0") +
                           ',' + hex64(fnv1a64(body)) + '\n';
    if (text.compare(trailer_at, std::string::npos, expected) != 0) return std::nullopt;
    try {
        return PrimeSet(norm_max, include_axes, parse_prime_csv(body));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

PrimeSet sieve_cached(const std::filesystem::path& dir, std::int64_t norm_max, bool include_axes) {
    auto file = dir / ("octant_" + std::to_string(norm_max) + (include_axes ? "_axes" : "") + ".csv");
    if (std::filesystem::exists(file)) {
        if (auto cached = parse_cache(read_file(file), norm_max, include_axes)) return *cached;
    }
    auto set = sieve_octant(norm_max, include_axes);
    std::filesystem::create_directories(dir);
    write_atomically(file, cache_text(set));
    return set;
}

std::string paths_json(std::span<const Path> paths) {
    Json out = Json::array();
    for (const auto& path : paths) {
        Json entry;
        entry["index"] = path.index;
        entry["members"] = point_list(path.members);
        entry["orphans"] = point_list(path.orphans_absorbed);
        if (path.line) {
            entry["line"] = {{"num", path.line->num}, {"den", path.line->den}};
        } else {
            entry["line"] = nullptr;
        }
        out.push_back(std::move(entry));
    }
    return out.dump(2) + '\n';
}

std::vector<Path> parse_paths_json(const std::string& text) {
    const auto doc = parse_json(text);
    if (!doc.is_array()) throw FormatError("paths: expected a JSON array");
    std::vector<Path> paths;
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const std::string where = "paths[" + std::to_string(i) + "]";
        const auto& entry = doc[i];
        Path path;
        path.index = static_cast<int>(int_field(entry, "index", where));
        path.members = read_points(field(entry, "members", where), where + ".members");
        path.orphans_absorbed = read_points(field(entry, "orphans", where), where + ".orphans");
        const auto& line = field(entry, "line", where);
        if (!line.is_null()) {
            path.line = BoundaryLine{path.index, int_field(line, "num", where + ".line"),
                                     int_field(line, "den", where + ".line")};
            if (path.line->den <= 0 || path.line->num < 0) {
                throw FormatError(where + ".line: slope must be num >= 0, den > 0");
            }
        }
        const auto n = path.members.size();
        const auto k = path.orphans_absorbed.size();
        if (k > n || !std::equal(path.orphans_absorbed.begin(), path.orphans_absorbed.end(),
                                 path.members.end() - static_cast<std::ptrdiff_t>(k))) {
            throw FormatError(where + ".orphans: must repeat the trailing members");
        }
        paths.push_back(std::move(path));
    }
    return paths;
}

std::string moat_json(const MoatReport& report) {
    Json out;
    out["norm_max"] = report.norm_max;
    out["threshold_sq"] = report.threshold_sq;
    out["width_sq"] = report.width_sq;
    out["left"] = point_list(report.left);
    out["right"] = point_list(report.right);
    Json comps = Json::array();
    for (const auto& c : report.components) comps.push_back(point_list(c));
    out["components"] = std::move(comps);
    return out.dump(2) + '\n';
}

MoatReport parse_moat_json(const std::string& text) {
    const auto doc = parse_json(text);
    if (!doc.is_object()) throw FormatError("moat: expected a JSON object");
    MoatReport report;
    report.norm_max = int_field(doc, "norm_max", "moat");
    report.threshold_sq = int_field(doc, "threshold_sq", "moat");
    report.width_sq = int_field(doc, "width_sq", "moat");
    report.left = read_points(field(doc, "left", "moat"), "moat.left");
    report.right = read_points(field(doc, "right", "moat"), "moat.right");
    const auto& comps = field(doc, "components", "moat");
    if (!comps.is_array()) throw FormatError("moat.components: expected an array");
    for (std::size_t i = 0; i < comps.size(); ++i) {
        report.components.push_back(
            read_points(comps[i], "moat.components[" + std::to_string(i) + "]"));
    }
    return report;
}

std::string density_csv(std::span<const DensityBand> bands) {
    std::string out = "band,inner_radius,outer_radius,lattice,primes,density\n";
    for (const auto& b : bands) {
        out += std::to_string(b.band) + ',' + fixed6(b.inner_radius) + ',' + fixed6(b.outer_radius) +
               ',' + std::to_string(b.lattice) + ',' + std::to_string(b.primes) + ',' +
               fixed6(b.density) + '\n';
    }
    return out;
}

std::string bench_csv(std::span<const BenchResult> results) {
    std::string out = "method,norm_max,checks,wall_ns\n";
    for (const auto& r : results) {
        out += to_string(r.method) + ',' + std::to_string(r.norm_max) + ',' +
               std::to_string(r.checks) + ',' + std::to_string(r.wall_ns) + '\n';
    }
    return out;
}

void write_atomically(const std::filesystem::path& target, const std::string& contents) {
    auto temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + target.string());
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            std::filesystem::remove(temp, ignored);
            throw std::runtime_error("cannot write " + target.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::filesystem::remove(temp, ec);
        throw std::runtime_error("cannot write " + target.string());
    }
}

std::string read_file(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + source.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace gmoat
