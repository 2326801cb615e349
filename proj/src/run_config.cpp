#include "valleyscape/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "valleyscape/errors.hpp"

namespace valleyscape {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::size_t parse_size(std::string_view text) { return static_cast<std::size_t>(parse_u64(text)); }

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw ConfigError("not a finite real number: '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t parse_u64(std::string_view text) {
  text = trim(text);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError("not a non-negative integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_real(part));
  return out;
}

Point parse_point(std::string_view text) {
  auto coords = parse_real_list(text);
  if (coords.empty()) throw ConfigError("empty point");
  return Point(std::move(coords));
}

std::vector<Point> parse_points(std::string_view text) {
  std::vector<Point> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ';')) out.push_back(parse_point(part));
  return out;
}

Domain parse_domain(std::string_view text) {
  std::vector<double> lo;
  std::vector<double> hi;
  for (auto axis : split(text, ',')) {
    // The separator is the first ':' after the lower bound's first character,
    // so negative bounds such as "-10:10" parse.
    const auto colon = axis.find(':', 1);
    if (colon == std::string_view::npos) {
      throw ConfigError("domain axis must be 'lo:hi', got '" + std::string(axis) + "'");
    }
    lo.push_back(parse_real(axis.substr(0, colon)));
    hi.push_back(parse_real(axis.substr(colon + 1)));
  }
  return Domain(Point(std::move(lo)), Point(std::move(hi)));
}

std::string format_real_list(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += format_shortest(values[i]);
  }
  return s;
}

std::string format_domain(const Domain& domain) {
  std::string s;
  for (std::size_t i = 0; i < domain.dim(); ++i) {
    if (i) s += ',';
    s += format_shortest(domain.lower()[i]) + ":" + format_shortest(domain.upper()[i]);
  }
  return s;
}

std::string format_points(const std::vector<Point>& points) {
  std::string s;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) s += ';';
    s += format_real_list(points[i].vec());
  }
  return s;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

void RunConfig::validate() const {
  if (selection < 1 || selection > population) throw ConfigError("selection size m must satisfy 1 <= m <= n");
  if (samples < 1) throw ConfigError("samples must be >= 1");
  if (deltas.empty()) throw ConfigError("delta list is empty");
  for (double d : deltas) {
    if (!(d > 0.0)) throw ConfigError("delta values must be > 0");
  }
  if (delta_sharp && !(*delta_sharp > 0.0)) throw ConfigError("delta_sharp must be > 0");
  if (resolution < 2) throw ConfigError("grid resolution must be >= 2");
  if (levels < 2) throw ConfigError("levels must be >= 2");
  if (!(step > 0.0)) throw ConfigError("gradient step must be > 0");
  if (seeds < 1) throw ConfigError("seed count must be >= 1");
  if (function.empty()) throw ConfigError("function label is empty");
}

std::string RunConfig::serialize() const {
  std::ostringstream os;
  os << "seed=" << seed << '\n'
     << "function=" << function << '\n'
     << "domain=" << (domain ? format_domain(*domain) : std::string("default")) << '\n'
     << "n=" << population << '\n'
     << "m=" << selection << '\n'
     << "deltas=" << format_real_list(deltas) << '\n'
     << "delta_sharp=" << (delta_sharp ? format_shortest(*delta_sharp) : std::string("same")) << '\n'
     << "samples=" << samples << '\n'
     << "points=" << format_points(points) << '\n'
     << "res=" << resolution << '\n'
     << "levels=" << levels << '\n'
     << "step=" << format_shortest(step) << '\n'
     << "seeds=" << seeds << '\n'
     << "stream=" << stream << '\n';
  return os.str();
}

std::uint64_t RunConfig::hash() const { return fnv1a64(serialize()); }

void RunConfig::apply(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "seed") {
    seed = parse_u64(value);
  } else if (key == "function") {
    function = std::string(value);
  } else if (key == "domain") {
    if (value == "default") {
      domain.reset();
    } else {
      domain = parse_domain(value);
    }
  } else if (key == "n" || key == "population") {
    population = parse_size(value);
  } else if (key == "m" || key == "selection") {
    selection = parse_size(value);
  } else if (key == "deltas" || key == "delta") {
    deltas = parse_real_list(value);
  } else if (key == "delta_sharp") {
    if (value == "same") {
      delta_sharp.reset();
    } else {
      delta_sharp = parse_real(value);
    }
  } else if (key == "samples") {
    samples = parse_u64(value);
  } else if (key == "points" || key == "point") {
    points = parse_points(value);
  } else if (key == "res") {
    resolution = parse_size(value);
  } else if (key == "levels") {
    levels = parse_size(value);
  } else if (key == "step") {
    step = parse_real(value);
  } else if (key == "seeds") {
    seeds = parse_size(value);
  } else if (key == "stream") {
    stream = parse_u64(value);
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void RunConfig::apply_text(std::string_view text) {
  std::size_t line_no = 0;
  for (auto line : split(text, '\n')) {
    ++line_no;
    if (const auto hash_pos = line.find('#'); hash_pos != std::string_view::npos) line = line.substr(0, hash_pos);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    try {
      apply(line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  RunConfig cfg;
  cfg.apply_text(buf.str());
  return cfg;
}

}  // namespace valleyscape
