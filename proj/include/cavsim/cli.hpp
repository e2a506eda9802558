#pragma once

// Command-line front end. Returns the process exit code:
//   0  success
//   2  configuration error (bad flags, bad config file, bad parameters)
//   3  integration error
//   4  I/O error
namespace cavsim::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIntegration = 3;
inline constexpr int kExitIo = 4;

int run_cli(int argc, const char* const* argv);

}  // namespace cavsim::cli
