#include "nilgeo/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "nilgeo/errors.hpp"

namespace nilgeo::io {

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw BadInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw BadInput("cannot open '" + path + "' for writing");
  out << content;
}

namespace {

const json& rows_of(const json& j, const std::string& context) {
  if (j.is_array()) return j;
  if (j.is_object()) {
    if (!j.contains("rows"))
      throw BadInput(context + ": matrix object has no 'rows' field");
    return j.at("rows");
  }
  throw BadInput(context + ": expected a matrix object or a rows array");
}

int checked_dim(const json& rows, const json& parent, const std::string& context) {
  if (!rows.is_array() || rows.empty())
    throw BadInput(context + ": 'rows' must be a non-empty array");
  int q = static_cast<int>(rows.size());
  if (parent.is_object() && parent.contains("q")) {
    if (!parent.at("q").is_number_integer())
      throw BadInput(context + ": 'q' must be an integer");
    if (parent.at("q").get<int>() != q)
      throw BadInput(context + ": 'q' is " + parent.at("q").dump() + " but there are " +
                     std::to_string(q) + " rows");
  }
  return q;
}

}  // namespace

Mat dense_from_json(const json& j, const std::string& context) {
  const json& rows = rows_of(j, context);
  if (!rows.is_array() || rows.empty())
    throw BadInput(context + ": 'rows' must be a non-empty array");
  int r = static_cast<int>(rows.size());
  if (!rows.at(0).is_array())
    throw BadInput(context + ": each row must be an array");
  int c = static_cast<int>(rows.at(0).size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != c)
      throw BadInput(context + ": row " + std::to_string(i) + " has " +
                     std::to_string(row.size()) + " entries, expected " +
                     std::to_string(c));
    for (int k = 0; k < c; ++k) {
      const json& cell = row.at(k);
      if (cell.is_number()) {
        m(i, k) = cell.get<double>();
      } else if (cell.is_string()) {
        m(i, k) = rational_from_string(cell.get<std::string>()).get_d();
      } else {
        throw BadInput(context + ": entry (" + std::to_string(i) + ", " +
                       std::to_string(k) + ") is neither a number nor a string");
      }
    }
  }
  return m;
}

SkewMatrix skew_from_json(const json& j) {
  const json& rows = rows_of(j, "matrix");
  checked_dim(rows, j, "matrix");
  return SkewMatrix(dense_from_json(rows, "matrix"));
}

RationalSkewMatrix rational_skew_from_json(const json& j) {
  const json& rows = rows_of(j, "matrix");
  int q = checked_dim(rows, j, "matrix");
  std::vector<Rational> entries;
  entries.reserve(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i) {
    const json& row = rows.at(i);
    if (!row.is_array() || static_cast<int>(row.size()) != q)
      throw BadInput("matrix: row " + std::to_string(i) + " has " +
                     std::to_string(row.size()) + " entries, expected " +
                     std::to_string(q));
    for (int k = 0; k < q; ++k) {
      const json& cell = row.at(k);
      if (cell.is_number_integer()) {
        entries.emplace_back(cell.get<long>());
      } else if (cell.is_string()) {
        entries.push_back(rational_from_string(cell.get<std::string>()));
      } else if (cell.is_number()) {
        // exact binary value of the double; use strings for exact decimals
        entries.emplace_back(cell.get<double>());
      } else {
        throw BadInput("matrix: entry (" + std::to_string(i) + ", " + std::to_string(k) +
                       ") is neither a number nor a string");
      }
    }
  }
  return RationalSkewMatrix(q, std::move(entries));
}

json skew_to_json(const SkewMatrix& z) {
  json rows = json::array();
  for (int i = 0; i < z.dim(); ++i) {
    json row = json::array();
    for (int j = 0; j < z.dim(); ++j) row.push_back(z(i, j));
    rows.push_back(row);
  }
  return json{{"q", z.dim()}, {"rows", rows}};
}

StandardAlgebra algebra_from_json(const json& j) {
  if (!j.is_object()) throw BadInput("algebra: expected an object");
  if (!j.contains("q") || !j.at("q").is_number_integer())
    throw BadInput("algebra: missing integer field 'q'");
  if (!j.contains("basis") || !j.at("basis").is_array() || j.at("basis").empty())
    throw BadInput("algebra: missing non-empty array field 'basis'");
  int q = j.at("q").get<int>();
  std::vector<SkewMatrix> basis;
  for (std::size_t k = 0; k < j.at("basis").size(); ++k) {
    Mat m = dense_from_json(j.at("basis").at(k), "basis[" + std::to_string(k) + "]");
    if (m.rows() != q || m.cols() != q)
      throw BadInput("basis[" + std::to_string(k) + "]: expected a " + std::to_string(q) +
                     "x" + std::to_string(q) + " matrix");
    basis.emplace_back(m);
  }
  return make_standard(q, basis);
}

json algebra_to_json(const StandardAlgebra& alg) {
  json basis = json::array();
  for (const SkewMatrix& z : alg.W.basis) {
    json rows = json::array();
    for (int i = 0; i < z.dim(); ++i) {
      json row = json::array();
      for (int j = 0; j < z.dim(); ++j) row.push_back(z(i, j));
      rows.push_back(row);
    }
    basis.push_back(rows);
  }
  return json{{"q", alg.q}, {"basis", basis}};
}

json locus_to_json(const ConjugateLocusReport& rep) {
  json values = json::array();
  for (const ConjugateValue& v : rep.values) {
    json contributors = json::array();
    for (const Contributor& c : v.contributors)
      contributors.push_back(json::array({c.lambda, c.k}));
    values.push_back(json{{"t", v.t}, {"mult", v.mult}, {"contributors", contributors}});
  }
  json primitives = json::array();
  for (const PrimitiveValue& p : rep.primitives)
    primitives.push_back(json::array({p.t, p.lambda}));
  return json{{"horizon", rep.horizon},
              {"values", values},
              {"primitives", primitives},
              {"P", rep.P},
              {"maximal", rep.maximal}};
}

ConjugateLocusReport locus_from_json(const json& j) {
  if (!j.is_object()) throw BadInput("locus report: expected an object");
  for (const char* field : {"horizon", "values", "primitives", "P", "maximal"})
    if (!j.contains(field))
      throw BadInput(std::string("locus report: missing field '") + field + "'");
  ConjugateLocusReport rep;
  rep.horizon = j.at("horizon").get<double>();
  rep.P = j.at("P").get<int>();
  rep.maximal = j.at("maximal").get<bool>();
  for (const json& v : j.at("values")) {
    ConjugateValue val;
    val.t = v.at("t").get<double>();
    val.mult = v.at("mult").get<int>();
    for (const json& c : v.at("contributors")) {
      Contributor contrib;
      contrib.lambda = c.at(0).get<double>();
      contrib.k = c.at(1).get<int>();
      val.contributors.push_back(contrib);
    }
    rep.values.push_back(val);
  }
  for (const json& p : j.at("primitives"))
    rep.primitives.push_back(PrimitiveValue{p.at(0).get<double>(), p.at(1).get<double>()});
  return rep;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string locus_to_csv(const ConjugateLocusReport& rep) {
  std::ostringstream out;
  out << "t,mult\n";
  for (const ConjugateValue& v : rep.values)
    out << format_double(v.t) << "," << v.mult << "\n";
  return out.str();
}

json genericity_to_json(const GenericityReport& rep) {
  json ratios = json::array();
  for (const BadRatio& r : rep.bad_ratios)
    ratios.push_back(json::array({r.lambda_a, r.lambda_b, r.m}));
  return json{{"distinct", rep.distinct},
              {"bad_ratios", ratios},
              {"m_max_tested", rep.m_max_tested},
              {"exact", rep.exact},
              {"member", rep.member()}};
}

GenericityReport genericity_from_json(const json& j) {
  if (!j.is_object()) throw BadInput("genericity report: expected an object");
  for (const char* field : {"distinct", "bad_ratios", "m_max_tested", "exact"})
    if (!j.contains(field))
      throw BadInput(std::string("genericity report: missing field '") + field + "'");
  GenericityReport rep;
  rep.distinct = j.at("distinct").get<bool>();
  rep.m_max_tested = j.at("m_max_tested").get<int>();
  rep.exact = j.at("exact").get<bool>();
  for (const json& r : j.at("bad_ratios"))
    rep.bad_ratios.push_back(BadRatio{r.at(0).get<double>(), r.at(1).get<double>(),
                                      r.at(2).get<int>()});
  return rep;
}

}  // namespace nilgeo::io
