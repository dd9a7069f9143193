// leoq: exact Leonardo-family sequences, their quaternion lifts, zero-divisor
// classification over prime fields, and a brute-force identity verifier.

#include <chrono>
#include <cstdint>
#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leoq/classification.hpp"
#include "leoq/quaternion.hpp"
#include "leoq/quaternion_sequences.hpp"
#include "leoq/sequences.hpp"
#include "leoq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace leoq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

std::int64_t parse_int(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw std::domain_error("not an integer: '" + text + "'");
  }
  return value;
}

// "a..b" (inclusive) or a single "n"
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto pos = text.find("..");
  if (pos == std::string::npos) {
    const std::int64_t n = parse_int(text);
    return {n, n};
  }
  return {parse_int(text.substr(0, pos)), parse_int(text.substr(pos + 2))};
}

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char ch : value) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

template <typename T>
std::string join(const std::vector<T>& values, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ----- seq -----

int cmd_seq(const std::string& family_name, int p, const std::string& range,
            const std::string& format) {
  const SequenceFamily family = family_from_name(family_name, p);
  const auto [n_start, n_end] = parse_range(range);
  const auto values = terms(family, n_start, n_end);

  if (format == "json") {
    json doc;
    doc["family"] = family.name();
    doc["p"] = p;
    doc["n_start"] = n_start;
    doc["n_end"] = n_end;
    json list = json::array();
    for (std::size_t i = 0; i < values.size(); ++i) {
      list.push_back({{"n", n_start + static_cast<std::int64_t>(i)},
                      {"value", values[i].str()}});
    }
    doc["terms"] = std::move(list);
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << n_start + static_cast<std::int64_t>(i) << "," << values[i].str() << "\n";
    }
  } else {
    for (std::size_t i = 0; i < values.size(); ++i) {
      std::cout << n_start + static_cast<std::int64_t>(i) << "\t" << values[i].str() << "\n";
    }
  }
  return kExitOk;
}

// ----- quat -----

int cmd_quat(const std::string& family_name, int p, std::int64_t n, bool exact,
             std::int64_t mod_q, const std::string& format) {
  const SequenceFamily family = family_from_name(family_name, p);
  if (exact == (mod_q > 0)) {
    throw std::domain_error("choose exactly one of --exact and --mod");
  }

  json doc;
  doc["family"] = family.name();
  doc["p"] = p;
  doc["n"] = n;

  std::string table;
  table += "family: " + family.name() + "\n";
  table += "p: " + std::to_string(p) + "\n";
  table += "n: " + std::to_string(n) + "\n";

  if (exact) {
    const auto x = quaternion_term(family, n);
    doc["ring"] = "exact";
    doc["coefficients"] = {x.coefficient(0).str(), x.coefficient(1).str(),
                           x.coefficient(2).str(), x.coefficient(3).str()};
    doc["norm"] = x.norm().str();
    table += "ring: exact\n";
    table += "quaternion: " + to_string(x) + "\n";
    table += "norm: " + x.norm().str() + "\n";
  } else {
    const PrimeField field(static_cast<std::uint64_t>(mod_q));
    const auto x = quaternion_term(family, n, field);
    std::vector<std::uint64_t> coeffs;
    for (int idx = 0; idx < 4; ++idx) coeffs.push_back(x.coefficient(idx).value());

    doc["ring"] = "mod";
    doc["q"] = field.modulus();
    doc["coefficients"] = coeffs;
    doc["norm"] = x.norm().value();
    table += "ring: Z_" + std::to_string(field.modulus()) + "\n";
    table += "quaternion: " + to_string(x) + "\n";
    table += "norm: " + std::to_string(x.norm().value()) + "\n";

    if (x.is_zero()) {
      doc["verdict"] = "zero";
      table += "verdict: zero\n";
    } else if (is_zero_divisor(x)) {
      const auto witness = annihilator_witness(x);
      std::vector<std::uint64_t> w;
      for (int idx = 0; idx < 4; ++idx) w.push_back(witness.coefficient(idx).value());
      doc["verdict"] = "zero-divisor";
      doc["witness"] = w;
      table += "verdict: zero-divisor\n";
      table += "witness: " + to_string(witness) + "\n";
    } else {
      const auto inv = inverse(x);
      std::vector<std::uint64_t> w;
      for (int idx = 0; idx < 4; ++idx) w.push_back(inv.coefficient(idx).value());
      doc["verdict"] = "invertible";
      doc["inverse"] = w;
      table += "verdict: invertible\n";
      table += "inverse: " + to_string(inv) + "\n";
    }
  }

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::string header, row;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
      if (!header.empty()) {
        header += ",";
        row += ",";
      }
      header += it.key();
      const json& v = it.value();
      if (v.is_array()) {
        std::string cell;
        for (const auto& element : v) {
          if (!cell.empty()) cell += ";";
          cell += element.is_string() ? element.get<std::string>() : element.dump();
        }
        row += csv_cell(cell);
      } else if (v.is_string()) {
        row += csv_cell(v.get<std::string>());
      } else {
        row += v.dump();
      }
    }
    std::cout << header << "\n" << row << "\n";
  } else {
    std::cout << table;
  }
  return kExitOk;
}

// ----- classify -----

int cmd_classify(const std::string& family_name, int p, std::int64_t q,
                 const std::string& format) {
  const SequenceFamily family = family_from_name(family_name, p);
  if (q < 3) throw std::domain_error("-q must be an odd prime");
  const auto cls = classify(family, static_cast<std::uint64_t>(q));

  if (format == "json") {
    json doc;
    doc["family"] = family.name();
    doc["p"] = p;
    doc["q"] = cls.q;
    doc["modulus"] = cls.modulus;
    doc["zero_divisor_residues"] = cls.residues;
    doc["all_invertible"] = cls.all_invertible;
    if (!cls.vanishing.empty()) doc["vanishing_residues"] = cls.vanishing;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "family,p,q,modulus,zero_divisor_residues,all_invertible\n";
    std::cout << family.name() << "," << p << "," << cls.q << "," << cls.modulus << ","
              << csv_cell(join(cls.residues, ";")) << ","
              << (cls.all_invertible ? "true" : "false") << "\n";
  } else {
    std::cout << "family: " << family.name() << "\n";
    std::cout << "p: " << p << "\n";
    std::cout << "q: " << cls.q << "\n";
    std::cout << "modulus: " << cls.modulus << "\n";
    if (cls.residues.empty()) {
      std::cout << "zero-divisor residues: (none)\n";
    } else {
      std::cout << "zero-divisor residues: " << join(cls.residues, " ") << "\n";
    }
    if (!cls.vanishing.empty()) {
      std::cout << "vanishing residues: " << join(cls.vanishing, " ") << "\n";
    }
    std::cout << "all invertible: " << (cls.all_invertible ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

// ----- pisano -----

int cmd_pisano(std::int64_t m, const std::string& format) {
  if (m < 2) throw std::domain_error("pisano: m must be >= 2");
  const auto period = pisano_period(static_cast<std::uint64_t>(m));

  if (format == "json") {
    json doc;
    doc["m"] = period.modulus;
    doc["length"] = period.length;
    doc["cycle"] = period.cycle;
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "index,residue\n";
    for (std::size_t i = 0; i < period.cycle.size(); ++i) {
      std::cout << i << "," << period.cycle[i] << "\n";
    }
  } else {
    std::cout << "m: " << period.modulus << "\n";
    std::cout << "length: " << period.length << "\n";
    std::cout << "cycle: " << join(period.cycle, ",") << "\n";
  }
  return kExitOk;
}

// ----- verify -----

const char* expectation_name(Expectation e) {
  return e == Expectation::Hold ? "hold" : "fail-as-printed";
}

json counterexample_json(const Counterexample& ce) {
  return {{"p", ce.p}, {"n", ce.n}, {"lhs", ce.lhs}, {"rhs", ce.rhs}};
}

int cmd_verify(int p_max, std::int64_t n_max, const std::vector<std::string>& ids,
               const std::string& format) {
  const auto start = std::chrono::steady_clock::now();
  const VerificationSummary summary =
      ids.empty() ? run_all(p_max, n_max) : run_selected(ids, p_max, n_max);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  if (format == "json") {
    json doc;
    doc["p_max"] = summary.p_max;
    doc["n_max"] = summary.n_max;
    doc["success"] = summary.success;
    json reports = json::array();
    for (const auto& report : summary.reports) {
      json entry;
      entry["id"] = report.id;
      entry["expectation"] = expectation_name(report.expectation);
      entry["grid"] = report.grid;
      entry["holds"] = report.holds;
      entry["first_counterexample"] =
          report.first_counterexample ? counterexample_json(*report.first_counterexample)
                                      : json(nullptr);
      reports.push_back(std::move(entry));
    }
    doc["reports"] = std::move(reports);
    json ledger = json::array();
    for (const auto& entry : summary.discrepancy_ledger) {
      ledger.push_back({{"printed_id", entry.printed_id},
                        {"corrected_id", entry.corrected_id},
                        {"counterexample", counterexample_json(entry.counterexample)},
                        {"corrected_holds", entry.corrected_holds}});
    }
    doc["discrepancy_ledger"] = std::move(ledger);
    std::cout << doc.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,expectation,grid,holds,counterexample_p,counterexample_n,lhs,rhs\n";
    for (const auto& report : summary.reports) {
      std::cout << report.id << "," << expectation_name(report.expectation) << ","
                << csv_cell(report.grid) << "," << (report.holds ? "true" : "false");
      if (report.first_counterexample) {
        const auto& ce = *report.first_counterexample;
        std::cout << "," << ce.p << "," << ce.n << "," << csv_cell(ce.lhs) << ","
                  << csv_cell(ce.rhs) << "\n";
      } else {
        std::cout << ",,,,\n";
      }
    }
  } else {
    for (const auto& report : summary.reports) {
      const bool expected_failure = report.expectation == Expectation::FailAsPrinted;
      std::string status;
      if (report.holds) {
        status = expected_failure ? "XPASS" : "PASS ";
      } else {
        status = expected_failure ? "XFAIL" : "FAIL ";
      }
      std::cout << status << " " << report.id;
      for (std::size_t pad = report.id.size(); pad < 34; ++pad) std::cout << ' ';
      std::cout << " " << report.grid;
      if (report.first_counterexample) {
        const auto& ce = *report.first_counterexample;
        std::cout << "  counterexample at p=" << ce.p << ", n=" << ce.n << ": lhs = " << ce.lhs
                  << ", rhs = " << ce.rhs;
      }
      std::cout << "\n";
    }
    for (const auto& entry : summary.discrepancy_ledger) {
      std::cout << "discrepancy: " << entry.printed_id << " fails as printed and "
                << entry.corrected_id
                << (entry.corrected_holds ? " repairs it" : " DOES NOT repair it") << "\n";
    }
    std::cout << "result: " << (summary.success ? "OK" : "FAILED") << "\n";
  }

  std::cerr << "elapsed: " << elapsed << "s\n";
  return summary.success ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leonardo-family sequences and their quaternions, exactly"};
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  std::string family = "lucas-leonardo";
  int p = 1;
  std::string range = "0..10";
  std::int64_t n = 0;
  bool exact = false;
  std::int64_t mod_q = 0;
  std::int64_t q = 0;
  std::int64_t pisano_m = 0;
  int p_max = 6;
  std::int64_t n_max = 200;
  std::vector<std::string> filter_ids;

  auto* seq = app.add_subcommand("seq", "print a window of sequence terms");
  seq->fallthrough();
  seq->add_option("--family", family, "fibonacci, lucas, leonardo, lucas-leonardo, francois")
      ->required();
  seq->add_option("-p,--p", p, "sequence order")->capture_default_str();
  seq->add_option("-n,--n", range, "index or inclusive range start..end")->required();

  auto* quat = app.add_subcommand("quat", "inspect one sequence quaternion");
  quat->fallthrough();
  quat->add_option("--family", family)->required();
  quat->add_option("-p,--p", p)->capture_default_str();
  quat->add_option("-n,--n", n, "index")->required();
  quat->add_flag("--exact", exact, "exact integer coefficients");
  quat->add_option("--mod", mod_q, "reduce mod an odd prime q");

  auto* classify_cmd = app.add_subcommand("classify", "zero-divisor residue classes mod q");
  classify_cmd->fallthrough();
  classify_cmd->add_option("--family", family)->required();
  classify_cmd->add_option("-p,--p", p)->capture_default_str();
  classify_cmd->add_option("-q,--q", q, "odd prime modulus")->required();

  auto* pisano = app.add_subcommand("pisano", "Fibonacci period mod m");
  pisano->fallthrough();
  pisano->add_option("m", pisano_m, "modulus >= 2")->required();

  auto* verify = app.add_subcommand("verify", "run the identity registry");
  verify->fallthrough();
  verify->add_option("--p-max", p_max, "largest order")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest index")->capture_default_str();
  verify->add_option("--id", filter_ids, "run only these identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(family, p, range, format);
    if (quat->parsed()) return cmd_quat(family, p, n, exact, mod_q, format);
    if (classify_cmd->parsed()) return cmd_classify(family, p, q, format);
    if (pisano->parsed()) return cmd_pisano(pisano_m, format);
    if (verify->parsed()) return cmd_verify(p_max, n_max, filter_ids, format);
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
