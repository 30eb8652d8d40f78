// cif: build, verify, and count correlation-immune / resilient Boolean
// functions obtained from hypercube face splittings.
//
// Exit codes: 0 ok, 1 verification failure, 2 input error, 3 capacity
// exceeded.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <cif/cif.hpp>

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << content;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string check_verdict(const cif::truth_table& f, unsigned order) {
  if (order > f.arity())
    throw std::invalid_argument("order " + std::to_string(order) + " exceeds arity " +
                                std::to_string(f.arity()));

  const bool balanced = cif::is_balanced(f);
  const bool ci_definition = cif::is_correlation_immune(f, order);
  const auto max_order = cif::max_resiliency_order(f);

  std::ostringstream out;
  out << "q: " << f.alphabet() << "\n";
  out << "n: " << f.arity() << "\n";
  out << "weight: " << f.weight() << "\n";
  out << "balanced: " << yes_no(balanced) << "\n";
  out << "correlation_immune_order_" << order << ": " << yes_no(ci_definition) << "\n";
  out << "resilient_order_" << order << ": " << yes_no(balanced && ci_definition) << "\n";
  out << "max_resilient_order: ";
  if (max_order)
    out << *max_order;
  else
    out << "none";
  out << "\n";

  if (f.alphabet() == 2) {
    const bool ci_spectral = cif::is_ci_spectral(f, order);
    if (ci_spectral != ci_definition)
      throw cif::verification_error(
          "checker mismatch: definition says " + yes_no(ci_definition) +
          ", spectrum says " + yes_no(ci_spectral) + " for order " + std::to_string(order));
    const cif::walsh_spectrum spectrum = cif::walsh_transform(f);
    std::uint64_t nonzero = 0;
    std::optional<unsigned> min_weight;
    for (std::uint64_t w = 1; w < spectrum.coefficients.size(); ++w) {
      if (spectrum.coefficients[w] == 0) continue;
      ++nonzero;
      const unsigned wt = cif::popcount64(w);
      if (!min_weight || wt < *min_weight) min_weight = wt;
    }
    out << "spectrum: W0=" << spectrum.coefficients[0] << " nonzero_nontrivial=" << nonzero
        << " min_nonzero_mask_weight=";
    if (min_weight)
      out << *min_weight;
    else
      out << "none";
    out << "\n";
    out << "checkers_agree: yes\n";
  } else {
    out << "spectrum: not available for q=4\n";
  }
  return out.str();
}

cif::truth_table verified_lift(const cif::splitting& s, const cif::phi_map& phi) {
  if (s.n < 1) throw std::invalid_argument("construction needs a splitting with n >= 1");
  const cif::truth_table lifted = cif::splitting_to_resilient(s, phi);
  const unsigned order = s.n - 1;
  if (!cif::is_resilient(lifted, order) || !cif::is_resilient_spectral(lifted, order))
    throw cif::verification_error(
        "constructed table failed its promised resilience order " + std::to_string(order) +
        "; refusing to write it");
  return lifted;
}

std::string splittings_jsonl(unsigned n, bool no_zero_faces) {
  std::string out;
  cif::for_each_splitting(n, [&](const cif::splitting& s) {
    if (no_zero_faces) {
      for (const cif::face& L : s.faces)
        if (L.dimension() == 0) return;
    }
    out += cif::splitting_to_json(s) + "\n";
  });
  return out;
}

std::string matchings_jsonl(unsigned n) {
  std::string out;
  cif::for_each_matching(
      n, [&](const cif::splitting& s) { out += cif::splitting_to_json(s) + "\n"; });
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"correlation-immune function toolkit"};
  app.require_subcommand(1);

  unsigned n = 0;
  unsigned order = 0;
  unsigned m = 0;
  std::string phi_digits = "0123";
  std::string format = "csv";
  std::string out_path;
  std::string table_path;
  std::string splitting_path;
  std::string simple_lift_path;
  std::string code_text;
  bool no_zero_faces = false;
  bool batch = false;

  auto* census = app.add_subcommand("census", "exact counting chain for one arity");
  census->add_option("--n", n, "splitting arity")->required();
  census->add_option("--phi", phi_digits, "pairing permutation, 4 digits");
  census->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  census->add_option("--out", out_path, "write to file instead of stdout");

  auto* check = app.add_subcommand("check", "verdict for a truth table file");
  check->add_option("file", table_path, "truth table file")->required();
  check->add_option("--order", order, "immunity order to test")->required();
  check->add_option("--out", out_path, "write to file instead of stdout");

  auto* construct = app.add_subcommand("construct", "build a resilient function");
  construct->add_option("--splitting", splitting_path, "splitting JSON file");
  construct->add_option("--simple-lift", simple_lift_path,
                        "binary truth table file for the parity lift");
  construct->add_flag("--batch", batch, "lift every splitting of Q_2^n (needs --n)");
  construct->add_option("--n", n, "arity for --batch");
  construct->add_option("--phi", phi_digits, "pairing permutation, 4 digits");
  construct->add_option("--out", out_path, "write to file instead of stdout");

  auto* splittings = app.add_subcommand("splittings", "splittings of Q_2^n");
  splittings->require_subcommand(1);
  auto* splittings_list = splittings->add_subcommand("list", "one canonical JSON per line");
  auto* splittings_count = splittings->add_subcommand("count", "dual-strategy count");
  for (CLI::App* sub : {splittings_list, splittings_count}) {
    sub->add_option("--n", n, "arity")->required();
    sub->add_flag("--no-zero-faces", no_zero_faces, "exclude splittings with 0-faces");
    sub->add_option("--out", out_path, "write to file instead of stdout");
  }

  auto* matchings = app.add_subcommand("matchings", "perfect matchings of Q_2^n");
  matchings->require_subcommand(1);
  auto* matchings_list = matchings->add_subcommand("list", "one canonical JSON per line");
  auto* matchings_count = matchings->add_subcommand("count", "dual-strategy count");
  for (CLI::App* sub : {matchings_list, matchings_count}) {
    sub->add_option("--n", n, "arity")->required();
    sub->add_option("--out", out_path, "write to file instead of stdout");
  }

  auto* encode = app.add_subcommand("encode", "direction word of a splitting");
  encode->add_option("file", splitting_path, "splitting JSON file")->required();
  encode->add_option("--out", out_path, "write to file instead of stdout");

  auto* decode = app.add_subcommand("decode", "splittings consistent with a direction word");
  decode->add_option("--n", n, "arity")->required();
  decode->add_option("--code", code_text, "comma-separated labels");
  decode->add_option("--out", out_path, "write to file instead of stdout");

  auto* audit = app.add_subcommand("audit", "direction-word injectivity audit");
  audit->add_option("--n", n, "arity")->required();
  audit->add_option("--out", out_path, "write to file instead of stdout");

  auto* bounds = app.add_subcommand("bounds", "bound comparison table");
  bounds->add_option("--n", n, "splitting arity")->required();
  auto* m_option = bounds->add_option("--m", m, "inner arity of the parity lift (default n)");
  bounds->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  bounds->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (census->parsed()) {
      const cif::census_report report = cif::build_census(n, cif::phi_map::from_digits(phi_digits));
      write_output(out_path, format == "json" ? cif::census_json(report)
                                              : cif::census_csv(report));
    } else if (check->parsed()) {
      const cif::truth_table f = cif::parse_truth_table(read_file(table_path));
      write_output(out_path, check_verdict(f, order));
    } else if (construct->parsed()) {
      const cif::phi_map phi = cif::phi_map::from_digits(phi_digits);
      const int sources = (splitting_path.empty() ? 0 : 1) +
                          (simple_lift_path.empty() ? 0 : 1) + (batch ? 1 : 0);
      if (sources != 1)
        throw std::invalid_argument(
            "construct needs exactly one of --splitting, --simple-lift, --batch");
      if (!splitting_path.empty()) {
        const cif::splitting s = cif::parse_splitting_json(read_file(splitting_path));
        write_output(out_path, cif::truth_table_text(verified_lift(s, phi)));
      } else if (!simple_lift_path.empty()) {
        const cif::truth_table inner = cif::parse_truth_table(read_file(simple_lift_path));
        if (inner.alphabet() != 2)
          throw std::invalid_argument("--simple-lift expects a binary truth table");
        const cif::truth_table lifted = cif::simple_lift(inner);
        const unsigned promised = inner.arity() - 1;
        if (!cif::is_resilient(lifted, promised) ||
            !cif::is_resilient_spectral(lifted, promised))
          throw cif::verification_error(
              "constructed table failed its promised resilience order " +
              std::to_string(promised) + "; refusing to write it");
        write_output(out_path, cif::truth_table_text(lifted));
      } else {
        if (construct->count("--n") == 0)
          throw std::invalid_argument("construct --batch needs --n");
        std::string lines;
        cif::for_each_splitting(n, [&](const cif::splitting& s) {
          lines += cif::splitting_hash(s) + " " + verified_lift(s, phi).bit_string() + "\n";
        });
        write_output(out_path, lines);
      }
    } else if (splittings_list->parsed()) {
      write_output(out_path, splittings_jsonl(n, no_zero_faces));
    } else if (splittings_count->parsed()) {
      const std::uint64_t count =
          no_zero_faces ? cif::count_splittings_no_zero_faces(n) : cif::count_splittings(n);
      write_output(out_path, std::to_string(count) + "\n");
    } else if (matchings_list->parsed()) {
      write_output(out_path, matchings_jsonl(n));
    } else if (matchings_count->parsed()) {
      write_output(out_path, std::to_string(cif::count_matchings(n)) + "\n");
    } else if (encode->parsed()) {
      const cif::splitting s = cif::parse_splitting_json(read_file(splitting_path));
      write_output(out_path, cif::code_to_string(cif::encode_splitting(s)) + "\n");
    } else if (decode->parsed()) {
      const cif::direction_code code = cif::parse_code(n, code_text);
      std::string lines;
      for (const cif::splitting& s : cif::consistent_splittings(code))
        lines += cif::splitting_to_json(s) + "\n";
      write_output(out_path, lines);
    } else if (audit->parsed()) {
      write_output(out_path, cif::audit_json(cif::injectivity_audit(n)));
    } else if (bounds->parsed()) {
      const unsigned inner = m_option->count() ? m : n;
      const auto rows = cif::bounds_table(n, inner);
      write_output(out_path,
                   format == "json" ? cif::bounds_json(rows) : cif::bounds_csv(rows));
    }
  } catch (const cif::capacity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const cif::verification_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
