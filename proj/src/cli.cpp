#include "cliffrep/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cliffrep/error.hpp"
#include "cliffrep/expr.hpp"
#include "cliffrep/kernels.hpp"
#include "cliffrep/limits.hpp"
#include "cliffrep/matrep.hpp"

namespace cliffrep::cli {
namespace {

struct Config {
  std::string sig;
  std::string format = "text";
  std::string output;
  std::vector<std::string> exprs;
  std::string file;
  int reps = 100;
};

Signature parse_signature(const std::string& text) {
  std::vector<unsigned> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.size() > 3 || !std::all_of(item.begin(), item.end(), ::isdigit)) {
      throw std::invalid_argument("--sig expects p,q[,r] with non-negative integers, got '" + text + "'");
    }
    parts.push_back(static_cast<unsigned>(std::stoul(item)));
  }
  if (parts.size() < 2 || parts.size() > 3 || text.back() == ',') {
    throw std::invalid_argument("--sig expects p,q[,r], got '" + text + "'");
  }
  return Signature(parts[0], parts[1], parts.size() == 3 ? parts[2] : 0);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_mv(const Multivector& u, MatrixFormat fmt) {
  switch (fmt) {
    case MatrixFormat::latex:
      return format_multivector(u, MvStyle::latex) + "\n";
    case MatrixFormat::json: {
      std::string out = "[";
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (j > 0) out += ", ";
        const Rational& c = u.coeffs()[j];
        out += is_integer(c) ? c.get_str() : "\"" + c.get_str() + "\"";
      }
      return out + "]\n";
    }
    case MatrixFormat::csv: {
      std::string out;
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (j > 0) out += ',';
        out += u.coeffs()[j].get_str();
      }
      return out + "\n";
    }
    default:
      return format_multivector(u) + "\n";
  }
}

Multivector random_multivector(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::vector<Rational> c(std::size_t{1} << sig.n());
  for (auto& x : c) x = coeff(rng);
  return Multivector(sig, std::move(c));
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : (v[m - 1] + v[m]) / 2;
}

std::string bench(const Signature& sig, int reps) {
  if (sig.degenerate()) {
    throw DegenerateSignature("bench compares against the matrix form, which needs a non-degenerate signature");
  }
  const RepContext ctx(sig);
  std::mt19937_64 rng(0x5eed);
  std::vector<double> blade_us, matrix_us;
  using clock = std::chrono::steady_clock;
  for (int i = 0; i < reps; ++i) {
    const Multivector u = random_multivector(sig, rng);
    const Multivector v = random_multivector(sig, rng);
    auto t0 = clock::now();
    const Multivector w = u * v;
    auto t1 = clock::now();
    const RepMatrix m = ctx.rep_multivector(u) * ctx.rep_multivector(v);
    auto t2 = clock::now();
    if (!(unrep(sig, m) == w)) throw std::logic_error("blade and matrix products disagree");
    blade_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    matrix_us.push_back(std::chrono::duration<double, std::micro>(t2 - t1).count());
  }
  std::ostringstream os;
  os << "signature  " << sig.to_string() << "\n"
     << "kernel     " << kernels::isa_name(kernels::active_isa()) << "\n"
     << "reps       " << reps << "\n"
     << "blade      " << median(blade_us) << " us (median)\n"
     << "matrix     " << median(matrix_us) << " us (median)\n";
  return os.str();
}

int dispatch(const std::string& cmd, const Config& cfg, std::ostream& out, std::ostream& err) {
  const Signature sig = parse_signature(cfg.sig);
  const MatrixFormat fmt = parse_matrix_format(cfg.format);
  const auto expr = [&](std::size_t i) { return parse(cfg.exprs.at(i), sig); };

  std::string result;
  int code = kOk;
  if (cmd == "table") {
    result = format_matrix(build_mult_table(sig), fmt);
  } else if (cmd == "gtable") {
    require_dense(sig.n());
    result = format_scalar_table(build_scalar_table(sig), fmt);
  } else if (cmd == "rep") {
    const RepContext ctx(sig);
    result = format_matrix(ctx.rep_multivector(expr(0)), fmt);
  } else if (cmd == "unrep") {
    if (sig.degenerate()) throw DegenerateSignature("unrep needs a non-degenerate signature");
    const std::string text = read_file(cfg.file);
    const auto first = text.find_first_not_of(" \t\r\n");
    const RepMatrix m = first != std::string::npos && text[first] == '[' ? parse_matrix_json(text)
                                                                          : parse_matrix_text(text);
    result = format_mv(unrep(sig, m), fmt);
  } else if (cmd == "mul") {
    result = format_mv(expr(0) * expr(1), fmt);
  } else if (cmd == "inv") {
    const Multivector u = expr(0);
    if (sig.degenerate()) throw DegenerateSignature("inv needs a non-degenerate signature");
    try {
      result = format_mv(mv_inverse(u), fmt);
    } catch (const ZeroDivisor&) {
      throw ZeroDivisor("ZeroDivisor: " + format_multivector(u) + " is a zero divisor in " + sig.to_string() +
                        " and has no inverse");
    }
  } else if (cmd == "dual") {
    result = format_mv(algebraic_dual(expr(0)), fmt);
  } else if (cmd == "verify") {
    Report report = check_table_lemmas(build_mult_table(sig), build_scalar_table(sig));
    if (sig.degenerate()) {
      report.lines.push_back({"representation identities", CheckStatus::skip, 0, "degenerate signature"});
    } else {
      report.append(verify_representation(sig));
    }
    std::ostringstream os;
    os << sig.to_string() << "\n" << report;
    result = os.str();
    if (!report.passed()) code = kMath;
  } else if (cmd == "bench") {
    if (cfg.reps < 1) throw std::invalid_argument("--reps must be positive");
    result = bench(sig, cfg.reps);
  }

  if (cfg.output.empty()) {
    out << result;
  } else {
    std::ofstream f(cfg.output, std::ios::binary);
    if (!f || !(f << result)) {
      err << "error: cannot write '" << cfg.output << "'\n";
      return kUsage;
    }
  }
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Clifford algebra tables and matrix representations", "cliffrep"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--sig", cfg.sig, "Signature p,q[,r]")->required();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "latex", "json"}))
      ->capture_default_str();
  app.add_option("-o,--output", cfg.output, "Write the result to a file");

  app.add_subcommand("table", "Multiplication table");
  app.add_subcommand("gtable", "Blade squares (diagonal of G)");
  app.add_subcommand("rep", "Matrix image of an expression")->add_option("expr", cfg.exprs)->required()->expected(1);
  app.add_subcommand("unrep", "Multivector from a matrix file")->add_option("file", cfg.file)->required();
  app.add_subcommand("mul", "Geometric product of two expressions")
      ->add_option("exprs", cfg.exprs)
      ->required()
      ->expected(2);
  app.add_subcommand("inv", "Inverse through the matrix image")->add_option("expr", cfg.exprs)->required()->expected(1);
  app.add_subcommand("dual", "Blade-wise algebraic dual")->add_option("expr", cfg.exprs)->required()->expected(1);
  app.add_subcommand("verify", "Table and representation identity report");
  app.add_subcommand("bench", "Blade vs matrix product timings")
      ->add_option("--reps", cfg.reps, "Number of products")
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, cfg, out, err);
  } catch (const SyntaxError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DivisionByZero& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ZeroDivisor& e) {
    err << e.what() << "\n";
    return kMath;
  } catch (const Singular& e) {
    err << "error: " << e.what() << "\n";
    return kMath;
  } catch (const DegenerateSignature& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const CapExceeded& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const DegenerateDual& e) {
    err << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace cliffrep::cli
