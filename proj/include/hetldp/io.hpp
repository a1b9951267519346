//
// Copyright 2026 The hetldp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef HETLDP_IO_HPP_
#define HETLDP_IO_HPP_

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hetldp/dist_learn.hpp"
#include "hetldp/errors.hpp"
#include "hetldp/harness.hpp"
#include "hetldp/multidim_mech.hpp"
#include "hetldp/numeric.hpp"
#include "hetldp/scalar_mech.hpp"
#include "hetldp/text.hpp"

namespace hetldp {

inline constexpr const char* kToolVersion = "0.1.0";

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

// --- datasets ----------------------------------------------------------------
//
// Scalar and item data arrive as CSV with header `value,epsilon`; item values
// are 1-based over [d] with 0 meaning the null item. Vector data arrives as
// JSON lines {"x":[...],"epsilon":...} with the ball radius declared in the
// config.

struct ScalarDataset {
  std::vector<double> values;
  std::vector<double> epsilons;
};

struct ItemDataset {
  std::vector<std::optional<std::size_t>> items;  // 0-based internally
  std::vector<double> epsilons;
};

struct VectorDataset {
  std::vector<std::vector<double>> points;
  std::vector<double> epsilons;
};

namespace detail {

inline DataError row_error(std::size_t row, const std::string& message) {
  return DataError("row " + std::to_string(row) + ": " + message);
}

inline double row_epsilon(std::string_view field, std::size_t row) {
  auto eps = parse_double(trim(field));
  if (!eps) throw row_error(row, "malformed epsilon '" + std::string(field) + "'");
  if (!(*eps > 0) || !std::isfinite(*eps)) {
    throw row_error(row, "epsilon must be positive and finite, got " + format_double(*eps));
  }
  return *eps;
}

// Splits CSV content with the expected two-column header, invoking fn(row
// number, value field, epsilon field) per data row.
template <typename Fn>
void for_each_csv_row(std::string_view content, std::string_view expected_header, Fn fn) {
  std::size_t row = 0;
  bool saw_header = false;
  for (auto raw : split(content, '\n')) {
    ++row;
    auto line = trim(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != expected_header) {
        throw DataError("row 1: expected header '" + std::string(expected_header) +
                        "', got '" + std::string(line) + "'");
      }
      saw_header = true;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 2) {
      throw row_error(row, "expected 2 fields, got " + std::to_string(fields.size()));
    }
    fn(row, trim(fields[0]), trim(fields[1]));
  }
  if (!saw_header) throw DataError("empty dataset: missing header");
}

}  // namespace detail

inline ScalarDataset ingest_scalar_csv(std::string_view content) {
  ScalarDataset out;
  detail::for_each_csv_row(content, "value,epsilon",
                           [&](std::size_t row, std::string_view v, std::string_view e) {
    auto value = parse_double(v);
    if (!value) throw detail::row_error(row, "malformed value '" + std::string(v) + "'");
    if (!(std::abs(*value) <= 1.0)) {
      throw detail::row_error(row, "scalar value " + format_double(*value) +
                                       " outside [-1,1]");
    }
    out.values.push_back(*value);
    out.epsilons.push_back(detail::row_epsilon(e, row));
  });
  if (out.values.empty()) throw DataError("dataset has no rows");
  return out;
}

inline ItemDataset ingest_item_csv(std::string_view content, std::size_t d) {
  ItemDataset out;
  detail::for_each_csv_row(content, "value,epsilon",
                           [&](std::size_t row, std::string_view v, std::string_view e) {
    auto value = parse_u64(v);
    if (!value) throw detail::row_error(row, "malformed item '" + std::string(v) + "'");
    if (*value > d) {
      throw detail::row_error(row, "item " + std::to_string(*value) +
                                       " outside [0, " + std::to_string(d) + "]");
    }
    if (*value == 0) {
      out.items.push_back(std::nullopt);  // the null item
    } else {
      out.items.push_back(*value - 1);
    }
    out.epsilons.push_back(detail::row_epsilon(e, row));
  });
  if (out.items.empty()) throw DataError("dataset has no rows");
  return out;
}

inline VectorDataset ingest_vector_jsonl(std::string_view content, std::size_t d, double r) {
  VectorDataset out;
  std::size_t row = 0;
  for (auto raw : split(content, '\n')) {
    ++row;
    auto line = trim(raw);
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded() || !obj.is_object() || !obj.contains("x") ||
        !obj.contains("epsilon")) {
      throw detail::row_error(row, "expected {\"x\":[...],\"epsilon\":...}");
    }
    std::vector<double> x;
    for (const auto& c : obj["x"]) {
      if (!c.is_number()) throw detail::row_error(row, "non-numeric coordinate");
      x.push_back(c.get<double>());
    }
    if (x.size() != d) {
      throw detail::row_error(row, "vector has dimension " + std::to_string(x.size()) +
                                       ", expected " + std::to_string(d));
    }
    double norm = l2_norm(x);
    if (!(norm <= r * (1.0 + 1e-9))) {
      throw detail::row_error(row, "vector norm " + format_double(norm) +
                                       " exceeds the declared radius " + format_double(r));
    }
    if (!obj["epsilon"].is_number()) throw detail::row_error(row, "malformed epsilon");
    double eps = obj["epsilon"].get<double>();
    if (!(eps > 0) || !std::isfinite(eps)) {
      throw detail::row_error(row, "epsilon must be positive and finite, got " +
                                       format_double(eps));
    }
    out.points.push_back(std::move(x));
    out.epsilons.push_back(eps);
  }
  if (out.points.empty()) throw DataError("dataset has no rows");
  return out;
}

// --- report files ------------------------------------------------------------

inline std::string write_scalar_reports_csv(std::span<const ScalarReport> reports) {
  std::string out = "value,epsilon,mechanism\n";
  for (const auto& rep : reports) {
    out += format_double(rep.value);
    out += ",";
    out += format_double(rep.epsilon);
    out += ",";
    out += rep.mechanism == ScalarMechanism::kLaplace ? "laplace" : "rr";
    out += "\n";
  }
  return out;
}

inline std::vector<ScalarReport> read_scalar_reports_csv(std::string_view content) {
  std::vector<ScalarReport> reports;
  std::size_t row = 0;
  bool saw_header = false;
  for (auto raw : split(content, '\n')) {
    ++row;
    auto line = trim(raw);
    if (line.empty()) continue;
    if (!saw_header) {
      if (line != "value,epsilon,mechanism") {
        throw DataError("row 1: expected header 'value,epsilon,mechanism'");
      }
      saw_header = true;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 3) throw detail::row_error(row, "expected 3 fields");
    auto value = parse_double(trim(fields[0]));
    if (!value) throw detail::row_error(row, "malformed value");
    double eps = detail::row_epsilon(fields[1], row);
    auto mech = trim(fields[2]);
    ScalarMechanism mechanism;
    if (mech == "laplace") mechanism = ScalarMechanism::kLaplace;
    else if (mech == "rr") mechanism = ScalarMechanism::kRr;
    else throw detail::row_error(row, "unknown mechanism '" + std::string(mech) + "'");
    reports.push_back(ScalarReport{*value, eps, mechanism});
  }
  if (reports.empty()) throw DataError("report file has no rows");
  return reports;
}

struct DuchiReportFile {
  std::vector<DuchiReport> reports;
  std::size_t d = 0;
  double r = 0;
};

inline std::string write_duchi_reports_jsonl(std::span<const DuchiReport> reports,
                                             std::size_t d, double r) {
  nlohmann::ordered_json meta{{"mechanism", "duchi"}, {"d", d}, {"r", r}};
  std::string out = meta.dump() + "\n";
  for (const auto& rep : reports) {
    nlohmann::ordered_json obj{{"y", rep.point.coords},
                               {"epsilon", rep.epsilon},
                               {"b", rep.point.radius}};
    out += obj.dump() + "\n";
  }
  return out;
}

inline DuchiReportFile read_duchi_reports_jsonl(std::string_view content) {
  DuchiReportFile out;
  std::size_t row = 0;
  bool saw_meta = false;
  for (auto raw : split(content, '\n')) {
    ++row;
    auto line = trim(raw);
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded()) throw detail::row_error(row, "malformed JSON");
    if (!saw_meta) {
      if (obj.value("mechanism", "") != "duchi") {
        throw DataError("row 1: expected duchi report metadata");
      }
      out.d = obj.at("d").get<std::size_t>();
      out.r = obj.at("r").get<double>();
      saw_meta = true;
      continue;
    }
    DuchiReport rep;
    rep.point.coords = obj.at("y").get<std::vector<double>>();
    if (rep.point.coords.size() != out.d) {
      throw detail::row_error(row, "report dimension does not match metadata");
    }
    rep.point.radius = obj.at("b").get<double>();
    rep.epsilon = obj.at("epsilon").get<double>();
    rep.ball_radius = out.r;
    out.reports.push_back(std::move(rep));
  }
  if (!saw_meta || out.reports.empty()) throw DataError("report file has no rows");
  return out;
}

struct SparseReportFile {
  std::vector<SparseReport> reports;
  std::size_t m = 0;
  std::size_t d = 0;
  std::uint64_t phi_seed = 0;
  std::string phi_seed_hash;
  double gamma = 0;
};

inline std::string write_sparse_reports_jsonl(std::span<const SparseReport> reports,
                                              const ProjectionMatrix& proj, double gamma) {
  nlohmann::ordered_json meta{{"mechanism", "distlearn"},
                              {"m", proj.m()},
                              {"d", proj.d()},
                              {"phi_seed", proj.seed()},
                              {"phi_seed_hash", to_hex(proj.seed_hash())},
                              {"gamma", gamma}};
  std::string out = meta.dump() + "\n";
  for (const auto& rep : reports) {
    nlohmann::ordered_json obj{
        {"j", rep.index + 1}, {"value", rep.value}, {"epsilon", rep.epsilon}};
    out += obj.dump() + "\n";
  }
  return out;
}

inline SparseReportFile read_sparse_reports_jsonl(std::string_view content) {
  SparseReportFile out;
  std::size_t row = 0;
  bool saw_meta = false;
  for (auto raw : split(content, '\n')) {
    ++row;
    auto line = trim(raw);
    if (line.empty()) continue;
    nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
    if (obj.is_discarded()) throw detail::row_error(row, "malformed JSON");
    if (!saw_meta) {
      if (obj.value("mechanism", "") != "distlearn") {
        throw DataError("row 1: expected distlearn report metadata");
      }
      out.m = obj.at("m").get<std::size_t>();
      out.d = obj.at("d").get<std::size_t>();
      out.phi_seed = obj.at("phi_seed").get<std::uint64_t>();
      out.phi_seed_hash = obj.value("phi_seed_hash", "");
      out.gamma = obj.value("gamma", 0.0);
      // Reject reports produced against a different projection.
      ProjectionMatrix proj(out.m, out.d, out.phi_seed);
      if (!out.phi_seed_hash.empty() && out.phi_seed_hash != to_hex(proj.seed_hash())) {
        throw DataError("row 1: projection fingerprint mismatch");
      }
      saw_meta = true;
      continue;
    }
    SparseReport rep;
    std::size_t j = obj.at("j").get<std::size_t>();
    if (j < 1 || j > out.m) throw detail::row_error(row, "coordinate index out of range");
    rep.index = j - 1;
    rep.value = obj.at("value").get<double>();
    rep.epsilon = obj.at("epsilon").get<double>();
    out.reports.push_back(rep);
  }
  if (!saw_meta || out.reports.empty()) throw DataError("report file has no rows");
  return out;
}

// --- artifact directory with manifest ----------------------------------------

// Collects emitted files and finishes with a manifest listing each file's
// size and content hash, so a run's outputs are self-describing and byte
// comparisons have a single anchor.
class ArtifactWriter {
 public:
  explicit ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  void write(const std::string& name, std::string_view content) {
    std::ofstream out(dir_ / name, std::ios::binary);
    if (!out) throw DataError("cannot write file: " + (dir_ / name).string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    files_.push_back({name, content.size(), to_hex(fnv1a64(content))});
  }

  void write_manifest(const std::string& command, std::uint64_t master_seed,
                      nlohmann::ordered_json extra = nlohmann::ordered_json::object()) {
    nlohmann::ordered_json manifest;
    manifest["tool"] = "hetldp";
    manifest["version"] = kToolVersion;
    manifest["command"] = command;
    manifest["master_seed"] = master_seed;
    for (auto& [key, value] : extra.items()) manifest[key] = value;
    manifest["files"] = nlohmann::ordered_json::array();
    for (const auto& f : files_) {
      manifest["files"].push_back(nlohmann::ordered_json{
          {"name", f.name}, {"bytes", f.bytes}, {"fnv1a64", f.hash}});
    }
    std::string content = manifest.dump(2) + "\n";
    std::ofstream out(dir_ / "manifest.json", std::ios::binary);
    if (!out) throw DataError("cannot write manifest");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
  }

  const std::filesystem::path& dir() const { return dir_; }

 private:
  struct Entry {
    std::string name;
    std::size_t bytes;
    std::string hash;
  };
  std::filesystem::path dir_;
  std::vector<Entry> files_;
};

}  // namespace hetldp

#endif  // HETLDP_IO_HPP_
