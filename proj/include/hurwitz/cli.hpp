#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hurwitz/oracle.hpp"
#include "hurwitz/witness.hpp"

namespace hurwitz::cli {

/// Semicolon-separated bracketed partitions: "[2,2];[2,2];[3,1]".
Profile parse_profile(const std::string& text, int degree);

/// Comma-separated positive integers: "4,3,2".
std::vector<int> parse_orders(const std::string& text);

/// The witness wire format: one JSON object per line with keys
/// {degree, genus, orders, cycles, checks}; cycles are arrays of support
/// points in canonical rotation, the identity being the empty array.
struct WitnessRecord {
  int degree = 0;
  int genus = 0;
  std::vector<int> orders;
  std::vector<Cycle> cycles;
};

std::string serialize_witness(int genus, const std::vector<int>& orders,
                              const WitnessTuple& witness);

WitnessRecord parse_witness(const std::string& json_line);

/// Dispatches one subcommand. Exit codes: 0 success/exists/valid,
/// 1 non-existent/invalid/not-admissible, 2 usage or input error,
/// 3 degree cap exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace hurwitz::cli
