#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pwlent/cover.hpp"
#include "pwlent/graphs.hpp"
#include "pwlent/transition.hpp"

namespace pwlent::cli {

// Exit codes: 0 ok, 1 an internal cross-check failed, 2 bad input.
enum Status { Ok = 0, CheckFailed = 1, BadInput = 2 };

struct CommandResult {
    std::string body;
    int status = Ok;
};

// F_{a,b} with a < 0 is conjugate to F_{-1,b/|a|} by scaling; returns that b.
// Without `a`, b is taken as is (a = -1).
BigRational reduce_parameter(const std::optional<BigRational>& a, const BigRational& b);

// `path` relative to $PWLENT_OUTPUT_DIR when that is set and path is relative.
std::filesystem::path resolve_output(const std::string& path);

CommandResult cmd_entropy(const BigRational& b, unsigned digits, bool json);
CommandResult cmd_table1(unsigned levels, unsigned digits);
CommandResult cmd_certify(Transition t, unsigned upper_period, unsigned lower_period);
CommandResult cmd_graph(Regime r, const BigRational& b, const std::string& format);
CommandResult cmd_digraph(const BigRational& b, CoverMode mode, const std::string& format);
CommandResult cmd_measure(Regime r, const BigRational& b, std::size_t depth);

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

std::vector<Check> run_property_suite();
CommandResult cmd_verify();

}  // namespace pwlent::cli
