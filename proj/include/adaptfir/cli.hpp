#pragma once

namespace adaptfir {

// Entry point for the adaptfir command-line tool. Exit codes: 0 success,
// 1 I/O failure, 2 usage error, 3 numeric failure.
int cli_main(int argc, const char* const* argv);

}  // namespace adaptfir
