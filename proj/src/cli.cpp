#include "dihedra/cli.hpp"

#include <charconv>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dihedra/errors.hpp"
#include "dihedra/serialize.hpp"

namespace dihedra::cli {

namespace {

using serialize::json;

triples::Triple triple_of(const std::vector<std::int64_t>& v) { return triples::Triple::make(v[0], v[1], v[2]); }

std::vector<triples::Triple> read_triples(std::istream& in) {
  std::vector<triples::Triple> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string tok; ls >> tok;) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks.size() != 3) throw InvalidArgument("line " + std::to_string(lineno) + ": expected three integers");
    std::vector<std::int64_t> vals;
    for (const auto& tok : toks) {
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw InvalidArgument("line " + std::to_string(lineno) + ": malformed integer '" + tok + "'");
      }
      vals.push_back(v);
    }
    try {
      out.push_back(triple_of(vals));
    } catch (const InvalidArgument& ex) {
      throw InvalidArgument("line " + std::to_string(lineno) + ": " + ex.what());
    }
  }
  return out;
}

std::vector<arith::BigInt> parse_vector(const std::string& text) {
  std::vector<arith::BigInt> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    const auto first = tok.find_first_not_of(" \t");
    const auto last = tok.find_last_not_of(" \t");
    if (first == std::string::npos) throw InvalidArgument("empty vector component in '" + text + "'");
    tok = tok.substr(first, last - first + 1);
    const std::size_t digits = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
    if (digits == tok.size() || tok.find_first_not_of("0123456789", digits) != std::string::npos) {
      throw InvalidArgument("malformed vector component '" + tok + "'");
    }
    out.emplace_back(tok[0] == '+' ? tok.substr(1) : tok);
  }
  return out;
}

std::string matrix_text(const arith::IntMatrix& m, const std::string& indent) {
  std::size_t width = 1;
  for (const auto& x : m.entries()) width = std::max(width, x.str().size());
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) os << " " << std::setw(static_cast<int>(width)) << m(i, j).str();
    os << " ]\n";
  }
  return os.str();
}

void repr_text(std::int64_t n, bool inventory, std::ostream& out) {
  const auto rec = serialize::repr_record(n, false);
  const auto rep = repr::build_faithful_rep(n);
  out << "D_" << n << " faithful rational representation, degree " << rep.degree << "\n";
  out << "G =\n" << matrix_text(rep.G, "  ");
  out << "S =\n" << matrix_text(rep.S, "  ");
  out << "checks:\n";
  for (const auto& [key, value] : rec["checks"].items()) out << "  " << std::left << std::setw(22) << key << value.dump() << "\n";
  if (!inventory) return;
  const auto inv = repr::rational_inventory(n);
  out << "inventory (" << inv.entries.size() << " reps, cyclic subgroup classes "
      << dihedral::cyclic_subgroup_class_count(n) << "):\n";
  out << "  " << std::left << std::setw(8) << "label" << std::setw(8) << "degree" << std::setw(14) << "kernel_order"
      << "kernel\n";
  for (const auto& e : inv.entries) {
    out << "  " << std::left << std::setw(8) << e.label << std::setw(8) << e.rep.degree << std::setw(14)
        << repr::kernel_elements(e.rep).size() << e.kernel << "\n";
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classification and verification tools for dihedral triples", "dihedra"};
  app.require_subcommand(1);
  bool compact = false;
  app.add_flag("--json", compact, "Compact line-delimited JSON output");
  app.fallthrough();

  std::vector<std::int64_t> abc;
  bool oracle = false, inventory = false, records = false, refl = false;
  std::int64_t max_entry = 0, n = 0, k = 0;
  int jobs = 0;
  std::string infile, vec_text;
  std::vector<std::string> fractions;

  auto triple_arg = [&](CLI::App* sub, const char* what) {
    sub->add_option("entries", abc, what)->expected(3)->required();
  };
  auto* classify = app.add_subcommand("classify", "Condition C and a reduced condition D solution");
  triple_arg(classify, "A1 A2 A3");
  auto* count = app.add_subcommand("count", "Closed-form reduced-solution count");
  triple_arg(count, "A1 A2 A3");
  count->add_flag("--oracle", oracle, "Also enumerate the reduced box");
  auto* snf = app.add_subcommand("snf", "Invariant factors of <a,b | p a, q b, r (a+b)>");
  triple_arg(snf, "A1 A2 A3");
  auto* invol = app.add_subcommand("involutions", "Three involutions of D_n realizing the triple");
  triple_arg(invol, "A1 A2 A3");
  auto* sweep = app.add_subcommand("sweep", "Equivalence and count audit over a box or a file of triples");
  sweep->add_option("--max", max_entry, "Audit all triples with 2 <= a_i <= N");
  sweep->add_option("--jobs", jobs, "Worker threads (default: DIHEDRA_JOBS or hardware concurrency)");
  sweep->add_option("--in", infile, "Read triples from FILE, one per line ('-' for stdin)");
  sweep->add_flag("--records", records, "Emit one record per triple");
  auto* rep = app.add_subcommand("repr", "Faithful rational representation of D_N");
  rep->add_option("N", n, "Dihedral order parameter (>= 3)")->required();
  rep->add_flag("--inventory", inventory, "List all rational irreducible representations");
  auto* ident = app.add_subcommand("identity", "Angle congruence versus the cosine product identity");
  ident->add_option("angles", fractions, "Three fractions k/m")->expected(3)->required();
  auto* wit = app.add_subcommand("witnesses", "Word certificates for the standard affine generators");
  triple_arg(wit, "P Q R");
  auto* ver = app.add_subcommand("verify", "Decide generation of the affine group by the standard generators");
  triple_arg(ver, "P Q R");
  auto* ord = app.add_subcommand("order", "Order of the affine element (v, g^K s^refl)");
  ord->add_option("N", n, "Level (>= 3)")->required();
  ord->add_option("K", k, "Rotation exponent")->required();
  ord->add_flag("--refl", refl, "Multiply the point part by s");
  ord->add_option("--vec", vec_text, "Translation, comma separated (default: first basis vector)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }

  auto emit = [&](const json& j) { out << (compact ? j.dump() : j.dump(2)) << "\n"; };

  try {
    if (*classify) emit(serialize::classify_record(triple_of(abc)));
    else if (*count) emit(serialize::count_record(triple_of(abc), oracle));
    else if (*snf) emit(serialize::snf_record(triple_of(abc)));
    else if (*invol) emit(serialize::involutions_record(triple_of(abc)));
    else if (*rep) {
      if (compact) emit(serialize::repr_record(n, inventory));
      else repr_text(n, inventory, out);
    } else if (*ident) {
      emit(serialize::identity_record(cyclo::RationalAngle::parse(fractions[0]), cyclo::RationalAngle::parse(fractions[1]),
                                      cyclo::RationalAngle::parse(fractions[2])));
    } else if (*wit) emit(serialize::witnesses_record(abc[0], abc[1], abc[2]));
    else if (*ver) emit(serialize::verify_record(abc[0], abc[1], abc[2]));
    else if (*ord) emit(serialize::order_record(n, k, refl, vec_text.empty() ? std::vector<arith::BigInt>{} : parse_vector(vec_text)));
    else if (*sweep) {
      std::vector<triples::Triple> input;
      json inputs;
      if (!infile.empty()) {
        if (infile == "-") {
          input = read_triples(std::cin);
        } else {
          std::ifstream f(infile);
          if (!f) throw InvalidArgument("cannot open '" + infile + "'");
          input = read_triples(f);
        }
        inputs["source"] = infile;
      } else if (max_entry >= 2) {
        input = serialize::box_triples(max_entry);
        inputs["source"] = "box";
        inputs["max"] = max_entry;
      } else {
        throw InvalidArgument("sweep needs --max N (N >= 2) or --in FILE");
      }
      const unsigned workers = serialize::resolve_jobs(jobs);
      inputs["jobs"] = workers;
      inputs["triples"] = input.size();

      const auto start = std::chrono::steady_clock::now();
      const auto summary = serialize::sweep(input, workers);
      const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

      json report;
      report["command"] = "sweep";
      report["inputs"] = inputs;
      report["outputs"] = {{"triples", summary.triples},
                           {"condition_c", summary.condition_c},
                           {"equivalence_mismatches", summary.equivalence_mismatches},
                           {"count_mismatches", summary.count_mismatches},
                           {"simplified_formula_mismatches", summary.simplified_mismatches}};
      json flags = json::array();
      for (const auto& r : summary.records) {
        for (const auto& f : r.flags) flags.push_back(f);
      }
      report["discrepancy_flags"] = std::move(flags);
      if (compact) {
        if (records) {
          for (const auto& r : summary.records) out << r.record.dump() << "\n";
        }
      } else if (records) {
        json list = json::array();
        for (const auto& r : summary.records) list.push_back(r.record);
        report["records"] = std::move(list);
      }
      report["timing"] = {{"seconds", seconds}};
      emit(report);
      return summary.has_discrepancy() ? kDiscrepancy : kOk;
    }
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace dihedra::cli
