#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "barbell/report.hpp"

namespace barbell {

enum class Format { Table, Machine };

Format parseFormat(const std::string& text);
std::string emitReport(const Report& r, Format format);
/// Inverse of emitReport(r, Format::Machine).
Report parseMachineReport(const std::string& text);
/// Recomputes a report from the theorem name, params and scenario echo it carries.
Report rerunReport(const Report& r);

/// Exit codes: 0 all checks pass, 1 a check failed, 2 invalid input or hypothesis violation.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barbell
