#include "levels/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "levels/errors.hpp"

namespace levels {

namespace {

int require_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
  return v.get<int>();
}

Rat parse_rat(const Json& v, const std::string& where) {
  try {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) return Rat::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string such as \"3/4\"");
}

std::string sign_char(int s) { return s > 0 ? "+" : "-"; }

}  // namespace

Json config_to_json(const VectorConfig& v) {
  Json vectors = Json::array();
  for (int i = 0; i < v.size(); ++i) {
    Json col = Json::array();
    for (const Rat& x : v.column(i)) col.push_back(x.str());
    vectors.push_back(std::move(col));
  }
  return Json{{"r", v.rank()}, {"n", v.size()}, {"vectors", std::move(vectors)}};
}

VectorConfig config_from_json(const Json& j) {
  const int r = require_int(j, "r");
  const int n = require_int(j, "n");
  if (!j.contains("vectors") || !j.at("vectors").is_array()) throw ParseError("missing array field \"vectors\"");
  const Json& vectors = j.at("vectors");
  if (vectors.size() != static_cast<std::size_t>(n)) {
    throw ParseError("\"vectors\" has " + std::to_string(vectors.size()) + " entries but n = " + std::to_string(n));
  }
  std::vector<Rat> entries;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const Json& col = vectors[i];
    const std::string where = "vectors[" + std::to_string(i) + "]";
    if (!col.is_array() || col.size() != static_cast<std::size_t>(r)) {
      throw ParseError(where + " must list exactly r = " + std::to_string(r) + " coordinates");
    }
    for (std::size_t c = 0; c < col.size(); ++c) entries.push_back(parse_rat(col[c], where + "[" + std::to_string(c) + "]"));
  }
  return new_config(r, n, entries);
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

VectorConfig read_config(const std::string& path) {
  const Json j = read_json_file(path);
  try {
    return config_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

namespace {

void write_text(const Json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      write_text(value, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + "}";
    return;
  }
  const bool flat = j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& e) {
                      return e.is_structured() && !e.empty();
                    });
  if (!j.is_array() || flat) {
    out += j.dump();
    return;
  }
  out += "[\n";
  for (std::size_t i = 0; i < j.size(); ++i) {
    out += pad;
    write_text(j[i], depth + 1, out);
    out += i + 1 < j.size() ? ",\n" : "\n";
  }
  out += close + "]";
}

}  // namespace

std::string to_text(const Json& j) {
  std::string out;
  write_text(j, 0, out);
  return out + "\n";
}

Json patterns_to_json(const PatternSet& patterns) {
  Json out = Json::array();
  for (const SignVector& p : patterns) out.push_back(p.str());
  return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string int_matrix_to_csv(const IntMatrix& m) {
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? "," : "") << m(i, j);
    out << '\n';
  }
  return out.str();
}

Json fmatrix_to_json(const FMatrix& f) {
  return Json{{"d", f.d()}, {"n", f.n}, {"rows", int_matrix_to_json(f.counts)}};
}

FMatrix fmatrix_from_json(const Json& j) {
  const int d = require_int(j, "d");
  const int n = require_int(j, "n");
  if (d < 0 || n < d + 1) throw ParseError("f-matrix needs n >= d + 1 >= 1");
  if (!j.contains("rows") || !j.at("rows").is_array()) throw ParseError("missing array field \"rows\"");
  const Json& rows = j.at("rows");
  if (rows.size() != static_cast<std::size_t>(d + 1)) throw ParseError("\"rows\" must have d + 1 rows");
  FMatrix f{n, d + 1, IntMatrix(static_cast<std::size_t>(d + 1), static_cast<std::size_t>(n + 1))};
  for (std::size_t s = 0; s < rows.size(); ++s) {
    const Json& row = rows[s];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n + 1)) {
      throw ParseError("rows[" + std::to_string(s) + "] must have n + 1 entries");
    }
    for (std::size_t t = 0; t < row.size(); ++t) {
      if (!row[t].is_number_integer()) {
        throw ParseError("rows[" + std::to_string(s) + "][" + std::to_string(t) + "] must be an integer");
      }
      f.counts(s, t) = row[t].get<std::int64_t>();
    }
  }
  return f;
}

Json fstar_to_json(const FStarMatrix& f) {
  return Json{{"r", f.r}, {"n", f.n}, {"rows", int_matrix_to_json(f.counts)}};
}

Json gmatrix_to_json(const GMatrix& g) {
  return Json{{"r", g.r}, {"n", g.n}, {"g", int_matrix_to_json(g.entries)}};
}

Json small_g_to_json(const GMatrix& g) {
  return Json{{"r", g.r}, {"n", g.n}, {"small_g", int_matrix_to_json(g.small())}};
}

Json event_to_json(const MutationEvent& e) {
  Json subset = Json::array();
  for (int i : e.subset) subset.push_back(i + 1);
  return Json{{"R", std::move(subset)},
              {"interval", Json::array({e.interval.lo.str(), e.interval.hi.str()})},
              {"type", Json::array({e.type.first, e.type.second})},
              {"flip", sign_char(e.sign_before) + sign_char(e.sign_after)}};
}

Json report_to_json(const RelationReport& report) {
  Json out{{"relation", report.relation}, {"holds", report.holds}};
  if (report.witness) {
    out["witness"] = Json{{"s", report.witness->s}, {"t", report.witness->t}, {"detail", report.witness->detail}};
  }
  return out;
}

Json span_report_to_json(const SpanReport& report) {
  return Json{{"n", report.n},
              {"r", report.r},
              {"mode", report.mode == SpanMode::pointed ? "pointed" : "general"},
              {"samples_used", report.samples_used},
              {"achieved_rank", report.achieved_rank},
              {"theoretical_dim", report.theoretical_dim},
              {"reached", report.reached()},
              {"structure_holds", report.structure_holds},
              {"basis_seeds", report.basis_seeds}};
}

}  // namespace levels
