#include "hopf/fileio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hopf {

using nlohmann::json;

namespace {

json sparse_entries(const Tensor& t) {
  json out = json::array();
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t[k].is_zero()) continue;
    json row = json::array();
    for (auto i : t.multi_index(k)) row.push_back(i);
    row.push_back(t[k].to_string());
    out.push_back(std::move(row));
  }
  return out;
}

Tensor read_entries(const json& j, std::vector<std::size_t> dims, Field f, const char* key) {
  Tensor t(dims, f);
  if (!j.is_array()) throw FileError(std::string("'") + key + "' must be an array");
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dims.size() + 1 || !row.back().is_string())
      throw FileError(std::string("malformed entry in '") + key + "'");
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < dims.size(); ++a) {
      auto i = row[a].get<std::int64_t>();
      if (i < 0 || static_cast<std::size_t>(i) >= dims[a])
        throw FileError(std::string("index out of range in '") + key + "'");
      idx.push_back(static_cast<std::size_t>(i));
    }
    t[t.flat_index(idx)] += Scalar::parse(f, row.back().get<std::string>());
  }
  return t;
}

}  // namespace

std::string to_json(const HopfData& h) {
  json j;
  j["name"] = h.name();
  j["field"] = h.field().name();
  j["dim"] = h.dim();
  j["labels"] = h.labels();
  j["mult"] = sparse_entries(h.mult());
  j["unit"] = sparse_entries(h.unit());
  j["comult"] = sparse_entries(h.comult());
  j["counit"] = sparse_entries(h.counit());
  j["antipode"] = sparse_entries(h.antipode());
  return j.dump(2) + "\n";
}

HopfData from_json(const std::string& text, bool verify) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw FileError(std::string("invalid JSON: ") + e.what());
  }
  try {
    const Field f = Field::parse(j.at("field").get<std::string>());
    const auto n = j.at("dim").get<std::size_t>();
    auto labels = j.at("labels").get<std::vector<std::string>>();
    if (labels.size() != n) throw FileError("label count does not match dim");
    HopfData h(j.at("name").get<std::string>(), f, std::move(labels),
               read_entries(j.at("mult"), {n, n, n}, f, "mult"),
               read_entries(j.at("unit"), {n}, f, "unit"),
               read_entries(j.at("comult"), {n, n, n}, f, "comult"),
               read_entries(j.at("counit"), {n}, f, "counit"),
               read_entries(j.at("antipode"), {n, n}, f, "antipode"));
    if (verify) {
      AxiomReport r = verify_hopf(h);
      if (!r.ok()) throw FileError("not a Hopf algebra: " + r.first_failure());
    }
    return h;
  } catch (const json::exception& e) {
    throw FileError(std::string("bad algebra file: ") + e.what());
  }
}

HopfData load_algebra(const std::filesystem::path& p, bool verify) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FileError("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json(ss.str(), verify);
}

void save_algebra(const HopfData& h, const std::filesystem::path& p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw FileError("cannot write " + p.string());
  out << to_json(h);
}

}  // namespace hopf
