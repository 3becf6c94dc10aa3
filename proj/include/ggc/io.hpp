#pragma once

#include "ggc/coefficients.hpp"

#include <string>

namespace ggc {

// {"name", "dim", "weights", "brackets": [{"i","j","k","c"}]} with 1-based indices
GradedLieAlgebra parse_group_json(const std::string& text);
std::string group_to_json(const GradedLieAlgebra& alg);

// {"law": ["R_1", ...]}
std::string law_to_json(const GroupLaw& law);

// {"tau": ["<poly>", ...]} over the x-block
QuantizingFunction parse_tau_json(const std::string& text, std::string name);
std::string tau_to_json(const QuantizingFunction& tau);

std::string table_to_json(const CoefficientTable& t);
CoefficientTable parse_table_json(const std::string& text);

// throws ParseError when the file cannot be read
std::string read_text_file(const std::string& path);

} // namespace ggc
