#pragma once

#include <string>

#include "udelta/matrix.hpp"

namespace udelta {

// Matrix text format: rows separated by ';', entries by ',', each entry
// "p" or "p/q" in base 10. Example: "1,0;0,1".
RatMat parse_rat_matrix(const std::string& text);
std::string matrix_string(const RatMat& m);

// Siegel point text: "re=<matrix>;im=<matrix>".
std::pair<RatMat, RatMat> parse_siegel_text(const std::string& text);

// Lagrangian text: "x=<matrix>;y=<matrix>".
std::pair<RatMat, RatMat> parse_lagrangian_text(const std::string& text);

}  // namespace udelta
