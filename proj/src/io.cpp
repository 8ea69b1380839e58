#include "onion/io.hpp"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "onion/errors.hpp"

namespace onion {

namespace {

using nlohmann::json;

std::string trimmed(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t from = 0;
  while (from <= text.size()) {
    std::size_t nl = text.find('\n', from);
    if (nl == std::string::npos) nl = text.size();
    lines.push_back(text.substr(from, nl - from));
    from = nl + 1;
  }
  return lines;
}

double parse_real(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw InputError("non-numeric field on line " + std::to_string(line_no));
  return value;
}

long parse_int(const std::string& field, int line_no) {
  const char* begin = field.c_str();
  char* end = nullptr;
  long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0')
    throw InputError("non-numeric field on line " + std::to_string(line_no));
  return value;
}

// places points by id and verifies the ids are exactly 0..n-1
std::vector<Point> settle_points(std::vector<Point> raw) {
  std::vector<Point> out(raw.size());
  std::vector<char> seen(raw.size(), 0);
  for (const Point& p : raw) {
    if (p.id < 0 || p.id >= (int)raw.size())
      throw InputError("ids must cover 0.." + std::to_string(raw.size() - 1));
    if (seen[p.id]) throw InputError("duplicate id");
    seen[p.id] = 1;
    out[p.id] = p;
  }
  return out;
}

}  // namespace

Instance parse_csv(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  std::vector<Point> raw;
  bool with_ids = false;
  bool saw_header = false;
  int row = 0;

  for (int line_no = 1; line_no <= (int)lines.size(); ++line_no) {
    std::string line = trimmed(lines[line_no - 1]);
    if (line.empty()) continue;

    std::vector<std::string> fields;
    std::size_t from = 0;
    while (from <= line.size()) {
      std::size_t comma = line.find(',', from);
      if (comma == std::string::npos) comma = line.size();
      fields.push_back(trimmed(line.substr(from, comma - from)));
      from = comma + 1;
    }

    if (raw.empty() && !saw_header && fields.size() == 3 &&
        fields[0] == "id" && fields[1] == "x" && fields[2] == "y") {
      with_ids = true;
      saw_header = true;
      continue;
    }

    std::size_t expected = with_ids ? 3 : 2;
    if (fields.size() != expected)
      throw InputError("expected " + std::to_string(expected) +
                       " fields on line " + std::to_string(line_no));
    Point p;
    p.id = with_ids ? (int)parse_int(fields[0], line_no) : row;
    p.x = parse_real(fields[with_ids ? 1 : 0], line_no);
    p.y = parse_real(fields[with_ids ? 2 : 1], line_no);
    raw.push_back(p);
    ++row;
  }

  if (raw.empty()) throw InputError("empty point set");
  return {"", settle_points(std::move(raw)), Metric::Euc2d};
}

std::string render_csv(const Instance& inst) {
  std::string out = "id,x,y\n";
  char buf[96];
  for (const Point& p : inst.points) {
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g\n", p.id, p.x, p.y);
    out += buf;
  }
  return out;
}

Instance parse_tsplib(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  std::string name = "tsplib";
  long dimension = -1;
  std::optional<Metric> metric;
  std::vector<Point> raw;
  bool in_coords = false;

  for (int line_no = 1; line_no <= (int)lines.size(); ++line_no) {
    std::string line = trimmed(lines[line_no - 1]);
    if (line.empty()) continue;
    if (line == "EOF") break;

    if (!in_coords) {
      if (line == "NODE_COORD_SECTION") {
        in_coords = true;
        continue;
      }
      std::size_t colon = line.find(':');
      if (colon == std::string::npos)
        throw InputError("unrecognized line " + std::to_string(line_no));
      std::string key = trimmed(line.substr(0, colon));
      std::string value = trimmed(line.substr(colon + 1));
      if (key == "NAME") {
        name = value;
      } else if (key == "TYPE") {
        if (value != "TSP") throw InputError("unsupported type " + value);
      } else if (key == "DIMENSION") {
        dimension = parse_int(value, line_no);
      } else if (key == "EDGE_WEIGHT_TYPE") {
        if (value == "EUC_2D")
          metric = Metric::Euc2d;
        else if (value == "ATT")
          metric = Metric::Att;
        else
          throw InputError("unsupported metric " + value);
      }
      // COMMENT and anything else is ignored
      continue;
    }

    std::istringstream fields(line);
    std::string id_text, x_text, y_text, extra;
    fields >> id_text >> x_text >> y_text;
    if (fields.fail() || (fields >> extra, !extra.empty()))
      throw InputError("expected 3 fields on line " + std::to_string(line_no));
    Point p;
    p.id = (int)parse_int(id_text, line_no) - 1;  // 1-based in the file
    p.x = parse_real(x_text, line_no);
    p.y = parse_real(y_text, line_no);
    raw.push_back(p);
  }

  if (!metric) throw InputError("missing EDGE_WEIGHT_TYPE");
  if (dimension < 1) throw InputError("missing DIMENSION");
  if ((long)raw.size() != dimension) throw InputError("dimension mismatch");
  return {name, settle_points(std::move(raw)), *metric};
}

namespace {

std::string fixed9(double value) {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", value);
  return buf;
}

bool scalar_only(const json& arr) {
  for (const json& v : arr)
    if (v.is_object() || v.is_array()) return false;
  return true;
}

void emit(const json& v, std::string& out, int depth) {
  auto pad = [&](int d) { out.append(2 * (std::size_t)d, ' '); };
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      std::size_t i = 0;
      for (auto it = v.begin(); it != v.end(); ++it, ++i) {
        pad(depth + 1);
        out += json(it.key()).dump();
        out += ": ";
        emit(it.value(), out, depth + 1);
        if (i + 1 < v.size()) out += ",";
        out += "\n";
      }
      pad(depth);
      out += "}";
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      bool inline_items = scalar_only(v);
      out += inline_items ? "[" : "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!inline_items) pad(depth + 1);
        emit(v[i], out, depth + 1);
        if (i + 1 < v.size()) out += inline_items ? ", " : ",";
        if (!inline_items) out += "\n";
      }
      if (!inline_items) pad(depth);
      out += "]";
      return;
    }
    case json::value_t::number_float:
      out += fixed9(v.get<double>());
      return;
    default:
      out += v.dump();  // strings (escaped), integers, booleans, null
      return;
  }
}

std::string print_json(const json& j) {
  std::string out;
  emit(j, out, 0);
  out += "\n";
  return out;
}

}  // namespace

std::string solve_result_json(const SolveResult& result, bool with_times) {
  json j;
  j["instance"] = result.instance_name;
  j["pipeline"] = {{"construct", result.construct},
                   {"improve", result.improve},
                   {"order", result.order},
                   {"improve_each_merge", result.improve_each_merge},
                   {"seed", result.seed}};
  j["tour"] = result.tour.order;
  j["length"] = result.tour.length;
  if (result.optimum) j["optimum"] = *result.optimum;
  if (result.gap_percent) j["gap_percent"] = *result.gap_percent;
  j["layer_count"] = result.layer_count;
  if (with_times) j["wall_time_ms"] = result.wall_time_ms;
  return print_json(j);
}

std::string bench_report_json(const BenchReport& report, bool with_times) {
  json config;
  config["n"] = report.config.n;
  config["instances"] = report.config.instances;
  config["seed"] = report.config.seed;
  config["circle"] = report.config.circle;
  json names = json::array();
  for (const PipelineSpec& spec : report.config.pipelines)
    names.push_back(spec.name());
  config["pipelines"] = names;
  // thread count deliberately not echoed: reports must not depend on it

  json rows = json::array();
  for (const BenchRow& row : report.rows) {
    json r;
    r["seed"] = row.seed;
    r["pipeline"] = row.pipeline;
    r["length"] = row.length;
    if (row.optimum) r["optimum"] = *row.optimum;
    if (row.gap_percent) r["gap_percent"] = *row.gap_percent;
    if (with_times) r["time_ms"] = row.time_ms;
    rows.push_back(r);
  }

  json aggregates = json::array();
  for (const BenchAggregate& agg : report.aggregates) {
    json a;
    a["pipeline"] = agg.pipeline;
    a["mean_gap"] = agg.mean_gap;
    a["max_gap"] = agg.max_gap;
    aggregates.push_back(a);
  }

  json j;
  j["config"] = config;
  j["rows"] = rows;
  j["aggregates"] = aggregates;
  return print_json(j);
}

std::string layers_json(const Instance& inst, const ConvexLayers& layers,
                        const std::string& algo) {
  json j;
  j["algo"] = algo;
  j["instance"] = inst.name;
  j["n"] = inst.points.size();
  j["layer_count"] = layers.layers.size();
  json rings = json::array();
  for (const HullCycle& layer : layers.layers) rings.push_back(layer);
  j["layers"] = rings;
  j["depth"] = layers.depth;
  return print_json(j);
}

std::string write_svg(const Instance& inst, const ConvexLayers* layers,
                      const Tour* tour) {
  assert(layers || tour);
  if (inst.points.empty()) throw InputError("empty point set");

  double min_x = inst.points[0].x, max_x = min_x;
  double min_y = inst.points[0].y, max_y = min_y;
  for (const Point& p : inst.points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  double w = max_x - min_x, h = max_y - min_y;
  double pad_x = w > 0 ? 0.05 * w : 1.0;
  double pad_y = h > 0 ? 0.05 * h : 1.0;
  double dim = std::max(w + 2 * pad_x, h + 2 * pad_y);
  double radius = 0.008 * dim;
  double stroke = 0.004 * dim;

  // flip y inside the bounding box so larger y renders upward
  auto fy = [&](double y) { return min_y + max_y - y; };

  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         fixed9(min_x - pad_x) + " " + fixed9(min_y - pad_y) + " " +
         fixed9(w + 2 * pad_x) + " " + fixed9(h + 2 * pad_y) + "\">\n";

  if (layers) {
    for (std::size_t d = 0; d < layers->layers.size(); ++d) {
      svg += "  <polygon fill=\"none\" stroke=\"";
      svg += kPalette[d % 8];
      svg += "\" stroke-width=\"" + fixed9(stroke) + "\" points=\"";
      const HullCycle& ring = layers->layers[d];
      for (std::size_t i = 0; i < ring.size(); ++i) {
        const Point& p = inst.points[ring[i]];
        if (i) svg += " ";
        svg += fixed9(p.x) + "," + fixed9(fy(p.y));
      }
      svg += "\"/>\n";
    }
  }

  if (tour) {
    svg += "  <polyline fill=\"none\" stroke=\"#000000\" stroke-width=\"" +
           fixed9(stroke) + "\" points=\"";
    for (std::size_t i = 0; i <= tour->order.size(); ++i) {
      const Point& p = inst.points[tour->order[i % tour->order.size()]];
      if (i) svg += " ";
      svg += fixed9(p.x) + "," + fixed9(fy(p.y));
    }
    svg += "\"/>\n";
  }

  for (const Point& p : inst.points) {
    svg += "  <circle cx=\"" + fixed9(p.x) + "\" cy=\"" + fixed9(fy(p.y)) +
           "\" r=\"" + fixed9(radius) + "\" fill=\"#000000\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace onion
