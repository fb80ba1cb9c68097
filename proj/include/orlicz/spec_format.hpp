#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orlicz/integrand.hpp"
#include "orlicz/young_function.hpp"

namespace orlicz {

/// Names bound by `name = fn` lines in a spec file.
using SpecEnvironment = std::map<std::string, YoungFunction>;

/// Parses one Young-function spec, e.g. `catalog(power_log, 2, 1)` or
/// `splice([(0,1): power(0.5,2,0)], [(1,inf): power(1,1,-0.5)])`.
/// Throws ParseError on syntax errors and on splice knots that do not tile [0, inf);
/// throws DomainError when the result violates an axiom other than C^1 matching at knots.
YoungFunction parse_function(std::string_view text, const SpecEnvironment& env = {});

/// Parses a file of `name = fn` definitions; `#` starts a comment. Later lines may
/// refer to earlier names.
SpecEnvironment parse_function_file(std::string_view text);

/// Parses an integrand spec such as `cauchy_power(0.25)` or `sum(1, indicator(1,2), 0.5, zero)`.
Integrand parse_integrand(std::string_view text);

/// 17 significant digits; `inf` for infinity.
std::string format_number(double x);

std::string render(const YoungFunction& phi);
std::string render(const Integrand& f);

}  // namespace orlicz
