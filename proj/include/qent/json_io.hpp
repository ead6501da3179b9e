#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qent/complex_matrix.hpp"
#include "qent/optimizer.hpp"
#include "qent/prob.hpp"
#include "qent/report.hpp"
#include "qent/tomogram.hpp"

namespace qent {

// %.17g -- every double round-trips losslessly through this form.
std::string format_double17(double x);

// Shared matrix format: {"dim": N, "entries": [[re, im] x N^2]} row-major.
// Emission prints each component at 17 significant digits so parse/emit is
// lossless and byte-stable.
std::string matrix_to_json_text(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j);
ComplexMatrix matrix_from_json_text(const std::string& text);

// {"probs": [...]}
std::string probability_vector_to_json_text(const ProbabilityVector& p);
ProbabilityVector probability_vector_from_json_text(const std::string& text);

nlohmann::ordered_json report_to_json(const InequalityReport& r);

// name,lhs,rhs,margin,q,shape_n,shape_m,satisfied,seed,unitary_label
std::string reports_to_csv(const std::vector<InequalityReport>& reports);

nlohmann::ordered_json optimization_result_to_json(const OptimizationResult& r);

// {"labels": [...], "probs": [...], "unitary": <matrix object or label>}
nlohmann::ordered_json tomogram_to_json(const Tomogram& t, const nlohmann::ordered_json& unitary);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qent
