#pragma once

/*
 * json_io.hpp — function descriptions on disk.
 *
 * Schema:
 *   {
 *     "base": {"kind": "sin", "b": <real>},
 *     "poly": [[re, im], ...],            // ascending coefficients of P_N
 *     "tail": {"M": <int>, "modes": {"<k>": [re, im], ...}}
 *   }
 * Complex numbers are always two-element [re, im] arrays.  Parse failures
 * surface as std::invalid_argument with the offending key in the message.
 */

#include <string>

#include "sinetype/model.hpp"

namespace sinetype {

ThetaFunction parse_theta(const std::string& json_text);
ThetaFunction read_theta(const std::string& path);

std::string theta_to_json(const ThetaFunction& theta);
std::string tail_to_json(const FourierTail& tail); // the "tail" sub-schema

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace sinetype
