#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "eo/curve.hpp"
#include "eo/derham.hpp"
#include "eo/eotype.hpp"
#include "eo/survey.hpp"

namespace eo {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `hyper p=3 k=2 f=[0,1,...]` or `cyclic p=7 k=2 m=5 a=[1,1,1,2] xi=[0,1,e]`
/// (coefficients and xi as element encodings). Throws ParseError on syntax,
/// InvalidModel or std::invalid_argument on bad values.
CurveModel parse_curve(const std::string& text);

/// Inverse of parse_curve.
std::string format_curve(const CurveModel& model);

nlohmann::json matrix_json(const Matrix& m);
nlohmann::json classification_json(const CurveModel& model, const Classification& c);
nlohmann::json basis_json(const CurveModel& model, const DeRhamBasis& basis, const Matrix& v);

/// family,p,k,mode,eo_type,a_number,p_rank,count with one row per stratum.
std::string tally_csv(const Tally& t);
nlohmann::json tally_json(const Tally& t, const std::vector<ClaimResult>& claims = {},
                          const std::vector<DimensionRow>& dims = {});

}  // namespace eo
