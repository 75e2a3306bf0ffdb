#pragma once

#include <string>

#include <json.hpp>

#include "nilgeo/algebra.hpp"
#include "nilgeo/conjugate.hpp"
#include "nilgeo/genericity.hpp"

// File formats.
//   matrix:  {"q": 4, "rows": [[0, 1, ...], ...]}; on the exact path
//            entries may be strings like "3/4"
//   algebra: {"q": 4, "basis": [rows, ...]} with each element either a
//            bare rows array or a matrix object
// Parsers throw BadInput naming the offending field. Doubles in CSV are
// written with 17 significant digits so values round-trip.
namespace nilgeo::io {

using json = nlohmann::json;

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

Mat dense_from_json(const json& j, const std::string& context);
SkewMatrix skew_from_json(const json& j);
RationalSkewMatrix rational_skew_from_json(const json& j);
json skew_to_json(const SkewMatrix& z);

StandardAlgebra algebra_from_json(const json& j);
json algebra_to_json(const StandardAlgebra& alg);

json locus_to_json(const ConjugateLocusReport& rep);
ConjugateLocusReport locus_from_json(const json& j);
std::string locus_to_csv(const ConjugateLocusReport& rep);

json genericity_to_json(const GenericityReport& rep);
GenericityReport genericity_from_json(const json& j);

std::string format_double(double x);

}  // namespace nilgeo::io
