#pragma once

#include <string>
#include <vector>

namespace primecomp {

// Runs one CLI invocation. Exit status: 0 success, 2 argument/validation
// error, 3 resource-ceiling violation, 4 internal failure. Errors are
// reported as one JSON line on stderr; stdout carries only data.
int cli_run(const std::vector<std::string>& args);

}  // namespace primecomp
