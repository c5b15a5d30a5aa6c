#include "hurwitz/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hurwitz/error.hpp"

namespace hurwitz::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAdmissible:
    case ErrorCode::NegativeGenus:
    case ErrorCode::ParityError:
    case ErrorCode::Vacuous:
    case ErrorCode::NotApplicable:
      return 1;
    case ErrorCode::TooLarge:
      return 3;
    case ErrorCode::ConstructionBug:
      return 4;
    default:
      return 2;
  }
}

std::string trimmed(const std::string& text) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = text.find_last_not_of(" \t");
  return text.substr(first, last - first + 1);
}

std::vector<int> parse_int_list(const std::string& text, char separator) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, separator)) {
    item = trimmed(item);
    if (item.empty()) fail(ErrorCode::ParseError, "empty entry in list '" + text + "'");
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "'" + item + "' is not an integer");
    }
    if (used != item.size()) fail(ErrorCode::ParseError, "'" + item + "' is not an integer");
    if (value < 1) fail(ErrorCode::ParseError, "'" + item + "' must be positive");
    values.push_back(value);
  }
  if (values.empty()) fail(ErrorCode::ParseError, "empty list");
  return values;
}

json checks_to_json(const VerificationReport& report) {
  json checks{{"lengths", report.lengths},
              {"product", report.product},
              {"transitive", report.transitive},
              {"genus", report.genus}};
  if (report.nondisjoint) checks["nondisjoint"] = *report.nondisjoint;
  return checks;
}

json cycles_to_json(const std::vector<Cycle>& cycles) {
  json out = json::array();
  for (const auto& cycle : cycles) out.push_back(cycle.support());
  return out;
}

json witness_perms_to_json(const std::vector<Permutation>& perms) {
  json out = json::array();
  for (const auto& sigma : perms) out.push_back(sigma.images());
  return out;
}

void require_int(const json& value, const std::string& key) {
  if (!value.is_number_integer())
    fail(ErrorCode::ParseError, "witness record field '" + key + "' must be an integer");
}

std::vector<int> int_array(const json& value, const std::string& key) {
  if (!value.is_array())
    fail(ErrorCode::ParseError, "witness record field '" + key + "' must be an array");
  std::vector<int> out;
  for (const auto& entry : value) {
    require_int(entry, key);
    out.push_back(entry.get<int>());
  }
  return out;
}

struct OracleOptions {
  int max_degree = 0;
  bool acknowledged = false;
  int threads = 0;

  SearchLimits limits() const {
    SearchLimits limits;
    if (max_degree > 0) {
      if (!acknowledged)
        fail(ErrorCode::ParseError, "--max-degree requires --i-know-this-is-factorial");
      limits.max_degree_exists = max_degree;
      limits.max_degree_count = max_degree;
    }
    limits.threads = threads;
    return limits;
  }

  void attach(CLI::App* app) {
    app->add_option("--max-degree", max_degree,
                    "Override the search degree cap (enumeration is factorial)");
    app->add_flag("--i-know-this-is-factorial", acknowledged,
                  "Acknowledge the cost of raising the degree cap");
    app->add_option("--threads", threads, "Worker threads for the search (0 = auto)");
  }
};

void print_search_text(std::ostream& out, const SearchOutcome& outcome,
                       bool with_classes) {
  out << (outcome.exists ? "cover exists" : "no cover exists") << "\n";
  out << "tuples_with_first_fixed " << outcome.tuples_with_first_fixed << "\n";
  out << "raw_tuple_count " << outcome.raw_tuple_count << "\n";
  if (with_classes && outcome.class_count)
    out << "class_count " << *outcome.class_count << "\n";
  if (outcome.witness) {
    out << "witness";
    for (const auto& sigma : *outcome.witness) out << ' ' << to_string(sigma);
    out << "\n";
  }
}

json search_to_json(int degree, const Profile& profile, const SearchOutcome& outcome,
                    bool with_classes) {
  json profiles = json::array();
  for (const auto& partition : profile.partitions) profiles.push_back(partition.parts());
  json record{{"degree", degree},
              {"exists", outcome.exists},
              {"profiles", profiles},
              {"tuples_with_first_fixed", outcome.tuples_with_first_fixed},
              {"raw_tuple_count", outcome.raw_tuple_count}};
  if (with_classes && outcome.class_count) record["class_count"] = *outcome.class_count;
  if (outcome.witness) record["witness"] = witness_perms_to_json(*outcome.witness);
  return record;
}

}  // namespace

Profile parse_profile(const std::string& text, int degree) {
  std::vector<CycleType> partitions;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ';')) {
    item = trimmed(item);
    if (item.size() < 2 || item.front() != '[' || item.back() != ']')
      fail(ErrorCode::ParseError, "partition '" + item + "' must look like [a,b,...]");
    std::vector<int> parts = parse_int_list(item.substr(1, item.size() - 2), ',');
    CycleType partition(std::move(parts));
    if (partition.sum() != degree)
      fail(ErrorCode::SumError, "partition " + to_string(partition) + " does not sum to " +
                                    std::to_string(degree));
    partitions.push_back(std::move(partition));
  }
  if (partitions.empty()) fail(ErrorCode::ParseError, "empty profile list");
  return Profile::make(degree, std::move(partitions));
}

std::vector<int> parse_orders(const std::string& text) {
  return parse_int_list(text, ',');
}

std::string serialize_witness(int genus, const std::vector<int>& orders,
                              const WitnessTuple& witness) {
  const json record{{"degree", witness.degree},
                    {"genus", genus},
                    {"orders", orders},
                    {"cycles", cycles_to_json(witness.cycles)},
                    {"checks", checks_to_json(witness.verified)}};
  return record.dump();
}

WitnessRecord parse_witness(const std::string& json_line) {
  const json record = json::parse(json_line, nullptr, false);
  if (record.is_discarded() || !record.is_object())
    fail(ErrorCode::ParseError, "witness record is not a JSON object");
  for (const char* key : {"degree", "genus", "orders", "cycles"})
    if (!record.contains(key))
      fail(ErrorCode::ParseError, std::string("witness record misses key '") + key + "'");

  WitnessRecord out;
  require_int(record["degree"], "degree");
  require_int(record["genus"], "genus");
  out.degree = record["degree"].get<int>();
  out.genus = record["genus"].get<int>();
  if (out.degree < 1) fail(ErrorCode::ParseError, "witness record degree must be >= 1");
  out.orders = int_array(record["orders"], "orders");
  if (!record["cycles"].is_array())
    fail(ErrorCode::ParseError, "witness record field 'cycles' must be an array");
  for (const auto& entry : record["cycles"])
    out.cycles.push_back(Cycle::from_support(out.degree, int_array(entry, "cycles")));
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Existence of branched covers of the line with one ramification "
               "point per branch point: construction, verification, and "
               "brute-force search of monodromy tuples"};
  app.fallthrough();
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  int degree = 0;
  std::string orders_text;
  std::string profiles_text;

  auto* admissible_cmd =
      app.add_subcommand("admissible", "Check admissibility of an order sequence");
  admissible_cmd->add_option("--d", degree, "Cover degree")->required();
  admissible_cmd->add_option("--orders", orders_text, "Ramification orders, e.g. 4,3,2")
      ->required();

  auto* genus_cmd = app.add_subcommand("genus", "Genus forced by the Riemann-Hurwitz formula");
  genus_cmd->add_option("--d", degree, "Cover degree")->required();
  genus_cmd->add_option("--orders", orders_text, "Ramification orders, e.g. 4,3,2");
  genus_cmd->add_option("--profiles", profiles_text,
                        "Ramification profiles, e.g. \"[2,2];[2,2];[3,1]\"");

  auto* construct_cmd =
      app.add_subcommand("construct", "Construct a verified monodromy witness");
  construct_cmd->add_option("--d", degree, "Cover degree")->required();
  construct_cmd->add_option("--orders", orders_text, "Ramification orders")->required();

  bool strict = false;
  std::string input_path = "-";
  auto* verify_cmd = app.add_subcommand("verify", "Verify a witness record");
  verify_cmd->add_option("--input", input_path, "Witness record file ('-' = stdin)");
  verify_cmd->add_flag("--strict", strict,
                       "Also require consecutive cycles to share a moved point");

  bool want_witness = false;
  OracleOptions search_opts;
  auto* search_cmd =
      app.add_subcommand("search", "Brute-force search for a monodromy tuple");
  search_cmd->add_option("--d", degree, "Cover degree")->required();
  search_cmd->add_option("--profiles", profiles_text, "Ramification profiles")->required();
  search_cmd->add_flag("--witness", want_witness, "Report the first tuple found");
  search_opts.attach(search_cmd);

  OracleOptions count_opts;
  auto* count_cmd =
      app.add_subcommand("count", "Count monodromy tuples and conjugation classes");
  count_cmd->add_option("--d", degree, "Cover degree")->required();
  count_cmd->add_option("--profiles", profiles_text, "Ramification profiles")->required();
  count_opts.attach(count_cmd);

  OracleOptions cross_opts;
  auto* cross_cmd = app.add_subcommand(
      "cross-check", "Compare brute-force existence with the Riemann-Hurwitz condition");
  cross_cmd->add_option("--d", degree, "Cover degree")->required();
  cross_cmd->add_option("--orders", orders_text, "Ramification orders")->required();
  cross_opts.attach(cross_cmd);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("hurwitz");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(argv_storage.size());
  for (const auto& arg : argv_storage) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const bool structured = format == "structured";

  try {
    if (*admissible_cmd) {
      const std::vector<int> orders = parse_orders(orders_text);
      const bool ok = is_admissible(degree, orders);
      if (structured)
        out << json{{"admissible", ok}, {"degree", degree}, {"orders", orders}}.dump()
            << "\n";
      else
        out << (ok ? "admissible" : "not admissible") << "\n";
      return ok ? 0 : 1;
    }

    if (*genus_cmd) {
      if (orders_text.empty() == profiles_text.empty()) {
        err << "error: genus needs exactly one of --orders and --profiles\n";
        return 2;
      }
      int genus = 0;
      json detail;
      if (!orders_text.empty()) {
        const std::vector<int> orders = parse_orders(orders_text);
        genus = riemann_hurwitz_genus(degree, orders);
        detail = json{{"degree", degree}, {"genus", genus}, {"orders", orders}};
      } else {
        const Profile profile = parse_profile(profiles_text, degree);
        genus = genus_from_profile(profile);
        json profiles = json::array();
        for (const auto& partition : profile.partitions)
          profiles.push_back(partition.parts());
        detail = json{{"degree", degree}, {"genus", genus}, {"profiles", profiles}};
      }
      if (structured)
        out << detail.dump() << "\n";
      else
        out << "g = " << genus << "\n";
      return 0;
    }

    if (*construct_cmd) {
      const std::vector<int> orders = parse_orders(orders_text);
      const auto [genus, witness] = construct_witness(degree, orders);
      if (structured) {
        out << serialize_witness(genus, orders, witness) << "\n";
      } else {
        out << "g = " << genus << "\n";
        out << "witness";
        for (const auto& cycle : witness.cycles) out << ' ' << to_string(cycle);
        out << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      std::string line;
      if (input_path == "-") {
        while (std::getline(in, line) && trimmed(line).empty()) {
        }
      } else {
        std::ifstream file(input_path);
        if (!file) fail(ErrorCode::ParseError, "cannot open '" + input_path + "'");
        while (std::getline(file, line) && trimmed(line).empty()) {
        }
      }
      if (trimmed(line).empty()) fail(ErrorCode::ParseError, "no witness record on input");

      const WitnessRecord record = parse_witness(line);
      const auto data = RamificationData::with_claimed_genus(record.degree, record.orders,
                                                             record.genus);
      WitnessTuple witness = WitnessTuple::make(record.degree, record.cycles);
      witness.verified = verify_witness(witness, data, strict);
      const auto& report = witness.verified;
      if (structured) {
        out << serialize_witness(record.genus, record.orders, witness) << "\n";
      } else {
        auto line_for = [&](const char* name, bool ok) {
          out << name << ' ' << (ok ? "pass" : "FAIL") << "\n";
        };
        line_for("lengths", report.lengths);
        line_for("product", report.product);
        line_for("transitive", report.transitive);
        line_for("genus", report.genus);
        if (report.nondisjoint) line_for("nondisjoint", *report.nondisjoint);
        out << (report.passed() ? "witness valid" : "witness INVALID") << "\n";
      }
      return report.passed() ? 0 : 1;
    }

    if (*search_cmd) {
      const Profile profile = parse_profile(profiles_text, degree);
      const SearchOutcome outcome =
          search_exists(profile, want_witness, search_opts.limits());
      if (structured)
        out << search_to_json(degree, profile, outcome, false).dump() << "\n";
      else
        print_search_text(out, outcome, false);
      return outcome.exists ? 0 : 1;
    }

    if (*count_cmd) {
      const Profile profile = parse_profile(profiles_text, degree);
      SearchOutcome outcome = count_classes(profile, count_opts.limits());
      outcome.witness.reset();
      if (structured)
        out << search_to_json(degree, profile, outcome, true).dump() << "\n";
      else
        print_search_text(out, outcome, true);
      return outcome.exists ? 0 : 1;
    }

    if (*cross_cmd) {
      const std::vector<int> orders = parse_orders(orders_text);
      const bool consistent = cross_check(degree, orders, cross_opts.limits());
      if (structured)
        out << json{{"consistent", consistent}, {"degree", degree}, {"orders", orders}}.dump()
            << "\n";
      else
        out << (consistent ? "consistent" : "INCONSISTENT") << "\n";
      return consistent ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace hurwitz::cli
