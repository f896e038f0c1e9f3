// cli.hpp — command-line front end, exposed as a library call so the
// dispatch surface is testable in-process.

#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace phasediff::cli {

/// Radians parser accepting plain decimals and pi literals
/// ("pi", "pi/9", "2*pi/9", "-pi/18", "0.35").
double parse_angle(const std::string& text);

/// Runs one subcommand (`qfi`, `simulate`, `estimate`, `fig3`,
/// `fig4-delta`, `fig4-n`). args excludes the program name.
/// Returns the process exit status; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out = std::cout,
             std::ostream& err = std::cerr);

}  // namespace phasediff::cli
