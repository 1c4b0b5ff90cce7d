// Copyright 2026 The sicdet developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sicdet/criteria.hpp"
#include "sicdet/matrix.hpp"
#include "sicdet/povm.hpp"
#include "sicdet/state.hpp"

namespace sicdet {

using json = nlohmann::ordered_json;

// 17 significant digits: enough to reproduce any double bit for bit, and
// locale independent so reruns emit identical bytes.
inline std::string format_double(double x) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), x,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const json& rows) {
  if (!rows.is_array() || rows.empty())
    throw std::invalid_argument("matrix: expected a non-empty array of rows");
  const std::size_t nr = rows.size();
  const std::size_t nc = rows.at(0).size();
  Matrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i) {
    const json& row = rows.at(i);
    if (row.size() != nc)
      throw std::invalid_argument("matrix: ragged rows");
    for (std::size_t j = 0; j < nc; ++j) {
      const json& e = row.at(j);
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("matrix: entries must be [re, im] pairs");
      m(i, j) = cplx{e.at(0).get<double>(), e.at(1).get<double>()};
    }
  }
  return m;
}

inline json povm_to_json(const Povm& p) {
  json doc;
  doc["kind"] = "povm";
  doc["dim"] = p.dim;
  switch (p.kind) {
    case PovmKind::SicQubit: doc["family"] = "sic_qubit"; break;
    case PovmKind::Gsic: doc["family"] = "gsic"; break;
    default: doc["family"] = "custom"; break;
  }
  if (p.parameter) doc["parameter"] = *p.parameter;
  doc["renormalized"] = p.renormalized;
  json els = json::array();
  for (const Matrix& m : p.elements) els.push_back(matrix_to_json(m));
  doc["elements"] = std::move(els);
  return doc;
}

inline Povm povm_from_json(const json& doc) {
  if (doc.value("kind", "") != "povm")
    throw std::invalid_argument("povm document: missing kind=povm");
  Povm p;
  p.dim = doc.at("dim").get<std::size_t>();
  const std::string family = doc.value("family", "custom");
  p.kind = family == "sic_qubit" ? PovmKind::SicQubit
           : family == "gsic"    ? PovmKind::Gsic
                                 : PovmKind::Custom;
  if (doc.contains("parameter")) p.parameter = doc.at("parameter").get<double>();
  p.renormalized = doc.value("renormalized", false);
  for (const json& e : doc.at("elements")) {
    Matrix m = matrix_from_json(e);
    if (m.rows() != p.dim || m.cols() != p.dim)
      throw std::invalid_argument("povm document: element dimension mismatch");
    p.elements.push_back(std::move(m));
  }
  if (p.elements.empty())
    throw std::invalid_argument("povm document: no elements");
  return p;
}

inline json state_to_json(const DensityState& st) {
  json doc;
  doc["kind"] = "state";
  doc["dims"] = st.dims();
  doc["matrix"] = matrix_to_json(st.matrix());
  return doc;
}

inline DensityState state_from_json(const json& doc,
                                    StateTolerances tol = StateTolerances{}) {
  if (doc.value("kind", "") != "state")
    throw std::invalid_argument("state document: missing kind=state");
  std::vector<std::size_t> dims = doc.at("dims").get<std::vector<std::size_t>>();
  return DensityState(dims, matrix_from_json(doc.at("matrix")), tol);
}

inline json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json doc;
  in >> doc;
  return doc;
}

inline void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

inline void save_json(const std::string& path, const json& doc) {
  save_text(path, doc.dump(2) + "\n");
}

// One line per report, fixed field order.
inline std::string format_report(const CriterionReport& r) {
  std::string out;
  out += "state=" + (r.state.empty() ? std::string("-") : r.state);
  out += " partition=" + r.partition;
  out += " mode=" + r.mode;
  out += " povm=" + r.povm;
  out += " trace_norm=" + format_double(r.trace_norm);
  out += " bound=" + format_double(r.bound);
  out += " margin=" + format_double(r.margin);
  out += std::string(" verdict=") + verdict_name(r.verdict);
  return out;
}

inline json report_to_json(const CriterionReport& r) {
  json doc;
  doc["state"] = r.state;
  doc["partition"] = r.partition;
  doc["mode"] = r.mode;
  doc["povm"] = r.povm;
  doc["trace_norm"] = r.trace_norm;
  doc["bound"] = r.bound;
  doc["margin"] = r.margin;
  doc["verdict"] = verdict_name(r.verdict);
  return doc;
}

// Minimal CSV accumulator: one header line, comma separation, no quoting
// (cells never contain commas), trailing newline on every row.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header)
      : columns_(header.size()) {
    append(header);
  }

  void row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_)
      throw std::invalid_argument("csv row width mismatch");
    append(cells);
  }

  const std::string& text() const { return text_; }

  void write(const std::string& path) const { save_text(path, text_); }

 private:
  void append(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) text_ += ",";
      text_ += cells[i];
    }
    text_ += "\n";
  }

  std::size_t columns_;
  std::string text_;
};

}  // namespace sicdet
