#ifndef MACQ_CLI_HPP
#define MACQ_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "macq/partitions.hpp"

namespace macq {

enum class Command { compute, norm, verify };

/// Parsed command line. Optional fields are unset when the flag was not given;
/// each command then falls back to its own default.
struct RunConfig {
    Command command = Command::compute;
    std::string target;
    std::optional<int> n;
    std::optional<int> k;
    std::string lambda_text;
    std::optional<int> max_weight;
    std::optional<int> degree;
    int samples = 3;
    std::uint64_t seed = 1;
    bool json = false;
    std::string cache_path = ".cache";
    bool use_cache = true;
};

/// Verification targets accepted by `verify`.
const std::vector<std::string>& verify_targets();

/// Runs one invocation. Returns the process exit code: 0 when every checked
/// identity holds, 1 when one fails, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace macq

#endif
