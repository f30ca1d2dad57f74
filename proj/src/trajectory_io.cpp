#include "tulczyjew/trajectory_io.hpp"

#include "tulczyjew/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace tulczyjew {

namespace {

double parse_number(const std::string & field)
{
  const char * begin = field.c_str();
  char * end         = nullptr;
  const double x     = std::strtod(begin, &end);
  if (end == begin || *end != '\0') { throw ConfigError("trajectory: malformed number '" + field + "'"); }
  return x;
}

std::vector<std::string> split(const std::string & line)
{
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) { out.push_back(field); }
  return out;
}

Eigen::Index attitude_size(std::size_t entries)
{
  const auto d = static_cast<Eigen::Index>(std::lround(std::sqrt(static_cast<double>(entries))));
  if (static_cast<std::size_t>(d * d) != entries) { throw ConfigError("trajectory: attitude is not a square matrix"); }
  return d;
}

}  // namespace

std::string format_number(double x)
{
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> trajectory_columns(const TrajectoryRecord & rec)
{
  std::vector<std::string> cols{"t"};
  if (rec.has_attitude()) {
    const auto d = rec.rows.front().g->rows();
    for (Eigen::Index r = 0; r < d; ++r) {
      for (Eigen::Index c = 0; c < d; ++c) { cols.push_back("g" + std::to_string(r) + std::to_string(c)); }
    }
  }
  for (std::size_t i = 1; i <= rec.dim(); ++i) { cols.push_back("A_" + std::to_string(i)); }
  for (std::size_t i = 1; i <= rec.dim(); ++i) { cols.push_back("X_" + std::to_string(i)); }
  cols.emplace_back("energy");
  cols.emplace_back("casimir");
  return cols;
}

void write_csv(std::ostream & out, const TrajectoryRecord & rec)
{
  const auto cols = trajectory_columns(rec);
  for (std::size_t i = 0; i < cols.size(); ++i) { out << (i ? "," : "") << cols[i]; }
  out << '\n';
  for (const auto & row : rec.rows) {
    out << format_number(row.t);
    if (row.g) {
      for (Eigen::Index r = 0; r < row.g->rows(); ++r) {
        for (Eigen::Index c = 0; c < row.g->cols(); ++c) { out << ',' << format_number((*row.g)(r, c)); }
      }
    }
    for (std::size_t i = 0; i < row.A.size(); ++i) { out << ',' << format_number(row.A[i]); }
    for (std::size_t i = 0; i < row.X.size(); ++i) { out << ',' << format_number(row.X[i]); }
    out << ',' << format_number(row.energy) << ',' << format_number(row.casimir) << '\n';
  }
}

TrajectoryRecord read_csv(std::istream & in)
{
  std::string line;
  if (!std::getline(in, line)) { throw ConfigError("trajectory: empty input"); }
  const auto header = split(line);
  std::size_t g_cols = 0, a_cols = 0, x_cols = 0;
  for (const auto & h : header) {
    if (h.size() == 3 && h[0] == 'g') { ++g_cols; }
    if (h.rfind("A_", 0) == 0) { ++a_cols; }
    if (h.rfind("X_", 0) == 0) { ++x_cols; }
  }
  if (header.empty() || header.front() != "t" || a_cols != x_cols || header.size() != 3 + g_cols + a_cols + x_cols) {
    throw ConfigError("trajectory: unrecognized header");
  }
  const Eigen::Index d = g_cols ? attitude_size(g_cols) : 0;

  TrajectoryRecord rec;
  while (std::getline(in, line)) {
    if (line.empty()) { continue; }
    const auto fields = split(line);
    if (fields.size() != header.size()) { throw ConfigError("trajectory: row has the wrong number of fields"); }
    std::size_t k = 0;
    TrajectoryRow row;
    row.t = parse_number(fields[k++]);
    if (d > 0) {
      Eigen::MatrixXd g(d, d);
      for (Eigen::Index r = 0; r < d; ++r) {
        for (Eigen::Index c = 0; c < d; ++c) { g(r, c) = parse_number(fields[k++]); }
      }
      row.g = std::move(g);
    }
    row.A = CoalgebraElement::Zero(a_cols);
    row.X = AlgebraElement::Zero(x_cols);
    for (std::size_t i = 0; i < a_cols; ++i) { row.A[i] = parse_number(fields[k++]); }
    for (std::size_t i = 0; i < x_cols; ++i) { row.X[i] = parse_number(fields[k++]); }
    row.energy  = parse_number(fields[k++]);
    row.casimir = parse_number(fields[k++]);
    rec.rows.push_back(std::move(row));
  }
  return rec;
}

void write_json_lines(std::ostream & out, const TrajectoryRecord & rec)
{
  for (const auto & row : rec.rows) {
    nlohmann::json j;
    j["t"] = row.t;
    if (row.g) {
      std::vector<double> g;
      for (Eigen::Index r = 0; r < row.g->rows(); ++r) {
        for (Eigen::Index c = 0; c < row.g->cols(); ++c) { g.push_back((*row.g)(r, c)); }
      }
      j["g"] = g;
    }
    j["A"]       = std::vector<double>(row.A.coords().begin(), row.A.coords().end());
    j["X"]       = std::vector<double>(row.X.coords().begin(), row.X.coords().end());
    j["energy"]  = row.energy;
    j["casimir"] = row.casimir;
    out << j.dump() << '\n';
  }
}

TrajectoryRecord read_json_lines(std::istream & in)
{
  TrajectoryRecord rec;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) { continue; }
    try {
      const auto j = nlohmann::json::parse(line);
      TrajectoryRow row;
      row.t = j.at("t").get<double>();
      if (j.contains("g")) {
        const auto g   = j.at("g").get<std::vector<double>>();
        const auto d   = attitude_size(g.size());
        Eigen::MatrixXd M(d, d);
        for (Eigen::Index r = 0; r < d; ++r) {
          for (Eigen::Index c = 0; c < d; ++c) { M(r, c) = g[static_cast<std::size_t>(r * d + c)]; }
        }
        row.g = std::move(M);
      }
      const auto A = j.at("A").get<std::vector<double>>();
      const auto X = j.at("X").get<std::vector<double>>();
      row.A        = CoalgebraElement(Eigen::Map<const Eigen::VectorXd>(A.data(), static_cast<Eigen::Index>(A.size())));
      row.X        = AlgebraElement(Eigen::Map<const Eigen::VectorXd>(X.data(), static_cast<Eigen::Index>(X.size())));
      row.energy   = j.at("energy").get<double>();
      row.casimir  = j.at("casimir").get<double>();
      rec.rows.push_back(std::move(row));
    } catch (const nlohmann::json::exception & e) {
      throw ConfigError(std::string("trajectory: malformed JSON line: ") + e.what());
    }
  }
  return rec;
}

}  // namespace tulczyjew
