// Copyright The linrel Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "linrel/relation.hpp"

namespace linrel::io
{

using json = nlohmann::json;

// Malformed input files: syntax errors carry line/column, schema errors a JSON pointer.
class InputError : public Error
{
public:
  using Error::Error;
};

struct RelationSpec
{
  std::string mode;
  std::string label;
  Index n1 = 0, n2 = 0;
  LinearRelation relation;
  json source;
};

namespace detail
{
inline std::string line_column(const std::string &text, std::size_t byte)
{
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
  {
    if (text[i] == '\n')
    {
      ++line;
      col = 1;
    }
    else
      ++col;
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline const json &require(const json &obj, const std::string &key, const std::string &path)
{
  if (!obj.is_object() || !obj.contains(key))
    throw InputError("schema error at " + path + ": missing key \"" + key + "\"");
  return obj.at(key);
}

inline Index require_dim(const json &obj, const std::string &key, const std::string &path)
{
  const json &v = require(obj, key, path);
  if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > 4096)
    throw InputError("schema error at " + path + "/" + key + ": expected a nonnegative integer");
  return static_cast<Index>(v.get<long long>());
}

inline Scalar parse_complex(const json &v, const std::string &path)
{
  if (v.is_number())
  {
    const double re = v.get<double>();
    if (!std::isfinite(re))
      throw InputError("schema error at " + path + ": entry is not finite");
    return {re, 0.0};
  }
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw InputError("schema error at " + path + ": expected a complex entry [re, im]");
  const double re = v[0].get<double>(), im = v[1].get<double>();
  if (!std::isfinite(re) || !std::isfinite(im))
    throw InputError("schema error at " + path + ": entry is not finite");
  return {re, im};
}
} // namespace detail

// Matrix stored as an array of rows; an empty dimension is given by `rows`/`cols`.
inline Mat parse_matrix(const json &v, Index rows, Index cols, const std::string &path)
{
  if (!v.is_array())
    throw InputError("schema error at " + path + ": expected an array of rows");
  if (static_cast<Index>(v.size()) != rows)
    throw InputError("schema error at " + path + ": expected " + std::to_string(rows) + " rows, found " +
                     std::to_string(v.size()));
  Mat M(rows, cols);
  for (Index i = 0; i < rows; ++i)
  {
    const json &r = v[static_cast<std::size_t>(i)];
    const std::string rp = path + "/" + std::to_string(i);
    if (!r.is_array() || static_cast<Index>(r.size()) != cols)
      throw InputError("schema error at " + rp + ": expected a row of " + std::to_string(cols) + " entries");
    for (Index j = 0; j < cols; ++j)
      M(i, j) = detail::parse_complex(r[static_cast<std::size_t>(j)], rp + "/" + std::to_string(j));
  }
  return M;
}

// Column count of a matrix given as rows; `fallback` when there are no rows to inspect.
inline Index column_count(const json &v, Index fallback)
{
  if (v.is_array() && !v.empty() && v[0].is_array())
    return static_cast<Index>(v[0].size());
  return fallback;
}

inline RelationSpec spec_from_json(const json &doc, const ToleranceConfig &cfg = {})
{
  RelationSpec s;
  s.source = doc;
  if (!doc.is_object())
    throw InputError("schema error at /: expected an object");
  const json &mode = detail::require(doc, "mode", "");
  if (!mode.is_string())
    throw InputError("schema error at /mode: expected a string");
  s.mode = mode.get<std::string>();
  s.n1 = detail::require_dim(doc, "n1", "");
  s.n2 = detail::require_dim(doc, "n2", "");
  if (doc.contains("label"))
  {
    if (!doc["label"].is_string())
      throw InputError("schema error at /label: expected a string");
    s.label = doc["label"].get<std::string>();
  }
  const json &m = detail::require(doc, "matrices", "");
  if (!m.is_object())
    throw InputError("schema error at /matrices: expected an object");

  if (s.mode == "operator")
  {
    const json &A = detail::require(m, "A", "/matrices");
    s.relation = from_operator(parse_matrix(A, s.n2, s.n1, "/matrices/A"), cfg);
  }
  else if (s.mode == "kernel_pair")
  {
    const json &C = detail::require(m, "C", "/matrices");
    const json &D = detail::require(m, "D", "/matrices");
    Index p = column_count(C, column_count(D, 0));
    if (m.contains("p"))
    {
      if (!m["p"].is_number_integer() || m["p"].get<long long>() < 0)
        throw InputError("schema error at /matrices/p: expected a nonnegative integer");
      p = static_cast<Index>(m["p"].get<long long>());
    }
    s.relation = from_kernel_pair(parse_matrix(C, s.n1, p, "/matrices/C"), parse_matrix(D, s.n2, p, "/matrices/D"),
                                  cfg);
  }
  else if (s.mode == "graph_basis")
  {
    const json &B = detail::require(m, "basis", "/matrices");
    const Index d = column_count(B, 0);
    s.relation = from_graph_basis(s.n1, s.n2, parse_matrix(B, s.n1 + s.n2, d, "/matrices/basis"), cfg);
  }
  else
    throw InputError("schema error at /mode: expected \"operator\", \"kernel_pair\" or \"graph_basis\", found \"" +
                     s.mode + "\"");
  return s;
}

inline RelationSpec parse_spec(const std::string &text, const ToleranceConfig &cfg = {})
{
  json doc;
  try
  {
    doc = json::parse(text);
  }
  catch (const json::parse_error &e)
  {
    throw InputError("JSON syntax error at " + detail::line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " +
                     e.what());
  }
  return spec_from_json(doc, cfg);
}

inline std::string read_file(const std::string &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline RelationSpec load_spec(const std::string &path, const ToleranceConfig &cfg = {})
{
  try
  {
    return parse_spec(read_file(path), cfg);
  }
  catch (const InputError &e)
  {
    throw InputError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// output
// ---------------------------------------------------------------------------

inline json to_json(Scalar z) { return json::array({z.real(), z.imag()}); }

inline json to_json(const Mat &M)
{
  json rows = json::array();
  for (Index i = 0; i < M.rows(); ++i)
  {
    json r = json::array();
    for (Index j = 0; j < M.cols(); ++j)
      r.push_back(to_json(M(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline json to_json(const Subspace &U)
{
  return {{"ambient_dim", U.ambient_dim()}, {"dim", U.dim()}, {"basis", to_json(U.basis())}};
}

// A relation as a graph_basis spec, so that it can be read back with parse_spec.
inline json to_json(const LinearRelation &R, const std::string &label = "")
{
  json j = {{"mode", "graph_basis"},
            {"n1", R.n1()},
            {"n2", R.n2()},
            {"matrices", {{"basis", to_json(R.graph().basis())}}}};
  if (!label.empty())
    j["label"] = label;
  return j;
}

inline json to_json(const ToleranceConfig &cfg)
{
  return {{"rank_tol", cfg.rank_tol}, {"angle_tol", cfg.angle_tol}, {"psd_floor", cfg.psd_floor}};
}

inline json to_json(const SubspaceComparison &c)
{
  return {{"verdict", to_string(c.verdict)}, {"max_angle", c.max_angle}};
}

// JSON has no infinities or NaN; those become the strings "inf", "-inf", "nan".
inline json number(double x)
{
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  return x;
}

// Shortest round-trip text for a double.
inline std::string format_double(double x)
{
  if (std::isnan(x))
    return "nan";
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  if (x == 0.0)
    return "0";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// RFC 4180 field quoting.
inline std::string csv_field(const std::string &s)
{
  if (s.find_first_of(",\"\r\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s)
  {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  return out + "\"";
}

inline void write_csv_row(std::ostream &os, const std::vector<std::string> &fields)
{
  for (std::size_t i = 0; i < fields.size(); ++i)
  {
    if (i)
      os << ',';
    os << csv_field(fields[i]);
  }
  os << "\r\n";
}

} // namespace linrel::io
