#ifndef GSM_CLI_APP_HPP
#define GSM_CLI_APP_HPP

namespace gsm::cli {

/// Full command-line front end. Returns the process exit code:
/// 0 success, 1 usage/config error, 2 numeric or I/O failure.
int run_command(int argc, const char* const* argv);

}  // namespace gsm::cli

#endif  // GSM_CLI_APP_HPP
