#pragma once

#include <string>
#include <vector>

namespace aupc {

// Exit codes shared by all subcommands.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // invalid arguments, usage errors
  kExitSchema = 2,   // malformed spec or request documents
  kExitIo = 3,       // unreadable input, unwritable output, busy port
  kExitNumeric = 4,  // limit evaluation did not converge
};

// Entry point of the aupc tool; returns the process exit code.
int run_cli(int argc, char** argv);

}  // namespace aupc
