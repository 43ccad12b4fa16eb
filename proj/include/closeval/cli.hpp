#pragma once

namespace closeval {

/// Entry point for the command-line driver; returns the process exit code.
int cli_main(int argc, const char* const* argv);

}  // namespace closeval
