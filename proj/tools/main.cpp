// fanocoeff: exact computation and certification of the b_(i,j,k) /
// d_(i,j,k) coefficient family. Exit codes: 0 pass, 1 fail with witnesses,
// 2 usage or internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fanocoeff/coefficients.hpp"
#include "fanocoeff/errors.hpp"
#include "fanocoeff/rational.hpp"
#include "fanocoeff/report.hpp"
#include "fanocoeff/sequences.hpp"
#include "fanocoeff/verify.hpp"
#include "fanocoeff/version.hpp"

namespace {

using namespace fanocoeff;

enum class Format { plain, csv, json };

Format format_from_name(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw CLI::ValidationError("--format", "must be one of plain, csv, json");
}

struct ScalarResult {
  std::vector<std::pair<std::string, std::string>> inputs;  // echo, in order
  std::string value;
};

void print_scalar(const ScalarResult& r, Format f, std::ostream& os) {
  switch (f) {
    case Format::plain:
      os << r.value << "\n";
      return;
    case Format::csv: {
      std::string header, row;
      for (const auto& [key, val] : r.inputs) {
        header += key + ",";
        row += val + ",";
      }
      os << header << "value\n" << row << r.value << "\n";
      return;
    }
    case Format::json: {
      nlohmann::json j;
      for (const auto& [key, val] : r.inputs) {
        try {
          j[key] = std::stol(val);
        } catch (...) {
          j[key] = val;
        }
      }
      j["value"] = r.value;
      os << j.dump() << "\n";
      return;
    }
  }
}

std::filesystem::path output_dir(const std::string& out_flag) {
  if (!out_flag.empty()) return out_flag;
  if (const char* env = std::getenv("FANOCOEFF_OUT_DIR"); env && *env) return env;
  return ".";
}

std::filesystem::path write_certificate(const Certificate& cert, const std::string& out_flag) {
  const std::filesystem::path dir = output_dir(out_flag);
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = dir / (cert.file_stem() + ".json");
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << cert.to_json().dump(2) << "\n";
  return path;
}

void report_certificate(const Certificate& cert, const std::filesystem::path& path) {
  std::cout << cert.property << ": " << (cert.pass ? "PASS" : "FAIL") << " ("
            << cert.checked_count << " checks, " << cert.witnesses.size()
            << " witnesses) -> " << path.string() << "\n";
}

unsigned default_shards() {
  if (const char* env = std::getenv("FANOCOEFF_SHARDS"); env && *env) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(kToolName) +
               " - exact b/d coefficient computation and positivity certification"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);
  app.fallthrough();  // let global flags appear after the subcommand

  std::string format_name = "plain";
  app.add_option("--format", format_name, "output format: plain, csv, json")
      ->capture_default_str();

  SequenceCache sequences;
  bool inject_fault = false;
  app.add_flag("--selftest-fault", inject_fault,
               "plant a wrong B_1 to exercise the failure path (testing only)")
      ->group("");  // hidden

  int exit_code = 0;

  // seq: named sequence values ---------------------------------------------
  auto* seq_cmd = app.add_subcommand("seq", "evaluate a named sequence");
  seq_cmd->require_subcommand(1);
  {
    static long n = 0, i = 1, q = 0, k = 1, j = 0, p = 0;
    auto* bern = seq_cmd->add_subcommand("bern", "Bernoulli number B_n");
    bern->add_option("n", n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
    bern->callback([&] {
      print_scalar({{{"n", std::to_string(n)}},
                    sequences.bernoulli(static_cast<std::size_t>(n)).to_string()},
                   format_from_name(format_name), std::cout);
    });

    auto* hbern = seq_cmd->add_subcommand("hbern", "higher-order Bernoulli number B_n^(i)");
    hbern->add_option("n", n, "index n >= 0")->required()->check(CLI::NonNegativeNumber);
    hbern->add_option("i", i, "order i >= 1")->required()->check(CLI::PositiveNumber);
    hbern->callback([&] {
      print_scalar({{{"n", std::to_string(n)}, {"i", std::to_string(i)}},
                    sequences.higher_bernoulli(static_cast<std::size_t>(n),
                                               static_cast<std::size_t>(i))
                        .to_string()},
                   format_from_name(format_name), std::cout);
    });

    auto* daehee = seq_cmd->add_subcommand("daehee", "higher-order Daehee number D_q^(k)");
    daehee->add_option("q", q, "index q >= 0")->required()->check(CLI::NonNegativeNumber);
    daehee->add_option("k", k, "order k >= 1")->required()->check(CLI::PositiveNumber);
    daehee->callback([&] {
      print_scalar({{{"q", std::to_string(q)}, {"k", std::to_string(k)}},
                    sequences.daehee(static_cast<std::size_t>(q), static_cast<std::size_t>(k))
                        .to_string()},
                   format_from_name(format_name), std::cout);
    });

    auto* stirling = seq_cmd->add_subcommand("stirling2", "Stirling number S(j,p)");
    stirling->add_option("j", j, "index j >= 0")->required()->check(CLI::NonNegativeNumber);
    stirling->add_option("p", p, "index 0 <= p <= j")->required()->check(CLI::NonNegativeNumber);
    stirling->callback([&] {
      print_scalar({{{"j", std::to_string(j)}, {"p", std::to_string(p)}},
                    sequences.stirling2(static_cast<std::size_t>(j), static_cast<std::size_t>(p))
                        .get_str()},
                   format_from_name(format_name), std::cout);
    });

    auto* harm = seq_cmd->add_subcommand(
        "harmsum", "harmonic product sum over compositions of q into k parts");
    harm->add_option("k", k, "number of parts k >= 1")->required()->check(CLI::PositiveNumber);
    harm->add_option("q", q, "total q >= 0")->required()->check(CLI::NonNegativeNumber);
    harm->callback([&] {
      print_scalar({{{"k", std::to_string(k)}, {"q", std::to_string(q)}},
                    sequences
                        .harmonic_product_sum(static_cast<std::size_t>(k),
                                              static_cast<std::size_t>(q))
                        .to_string()},
                   format_from_name(format_name), std::cout);
    });
  }

  // bcoeff -------------------------------------------------------------------
  {
    static long i = 1, j = 0, k = 1;
    static std::string method = "closed";
    auto* bcoeff = app.add_subcommand("bcoeff", "single coefficient b_(i,j,k)");
    bcoeff->add_option("i", i, "i >= 1")->required()->check(CLI::PositiveNumber);
    bcoeff->add_option("j", j, "j >= 0")->required()->check(CLI::NonNegativeNumber);
    bcoeff->add_option("k", k, "k >= 1")->required()->check(CLI::PositiveNumber);
    bcoeff->add_option("--method", method, "recurrence, genfunc, or closed")
        ->capture_default_str();
    bcoeff->callback([&] {
      CoefficientEngine engine(sequences);
      const Rational value = engine.b(TripleIndex(i, j, k), method_from_name(method));
      print_scalar({{{"i", std::to_string(i)},
                     {"j", std::to_string(j)},
                     {"k", std::to_string(k)},
                     {"method", method}},
                    value.to_string()},
                   format_from_name(format_name), std::cout);
    });
  }

  // table ---------------------------------------------------------------------
  {
    static long i_max = 1, j_max = 0;
    static std::string method = "closed";
    static std::string out_path;
    auto* table = app.add_subcommand("table", "b/d table over 1<=i<=i_max, 0<=j<=j_max, k<=i+j");
    table->add_option("i_max", i_max)->required()->check(CLI::PositiveNumber);
    table->add_option("j_max", j_max)->required()->check(CLI::NonNegativeNumber);
    table->add_option("--method", method, "recurrence, genfunc, or closed")
        ->capture_default_str();
    table->add_option("--out", out_path, "output file (default: stdout)");
    table->callback([&] {
      const Method m = method_from_name(method);
      const Format f = format_name == "plain" ? Format::csv : format_from_name(format_name);
      CoefficientEngine engine(sequences);
      std::ofstream file;
      std::ostream* os = &std::cout;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot write " + out_path);
        os = &file;
      }
      nlohmann::json rows = nlohmann::json::array();
      if (f == Format::csv) *os << "i,j,k,b,d,method\n";
      for (long i = 1; i <= i_max; ++i) {
        for (long j = 0; j <= j_max; ++j) {
          for (long k = 1; k <= i + j; ++k) {
            const TripleIndex idx(i, j, k);
            const Rational b = engine.b(idx, m);
            const Rational d = d_from_b(idx, b);
            if (f == Format::csv) {
              *os << i << "," << j << "," << k << "," << b.to_string() << ","
                  << d.to_string() << "," << method << "\n";
            } else {
              rows.push_back({{"i", i},
                              {"j", j},
                              {"k", k},
                              {"b", b.to_string()},
                              {"d", d.to_string()},
                              {"method", method}});
            }
          }
        }
      }
      if (f == Format::json) *os << rows.dump(2) << "\n";
    });
  }

  // verify ----------------------------------------------------------------------
  {
    static std::string selector = "all";
    static std::string out_flag;
    static IdentityBounds bounds;
    auto* verify = app.add_subcommand("verify", "run identity regression checks");
    verify->add_option("identity", selector,
                       "identity name or 'all' (see --list)");
    verify->add_flag_callback(
        "--list",
        [] {
          for (const auto& name : identity_names()) std::cout << name << "\n";
          std::exit(0);
        },
        "list identity names and exit");
    verify->add_option("--i-max", bounds.agreement_i,
                       "override i bound (agreement/vanishing/higher-bernoulli/endpoint)");
    verify->add_option("--j-max", bounds.agreement_j,
                       "override j bound (agreement/vanishing/higher-bernoulli)");
    verify->add_option("--k-max", bounds.corlog_k, "override k bound (daehee/corlog/laurent)");
    verify->add_option("--q-max", bounds.corlog_q, "override q bound (daehee/corlog)");
    verify->add_option("--out", out_flag, "certificate directory (env FANOCOEFF_OUT_DIR)");
    verify->callback([&, verify] {
      if (inject_fault) sequences.inject_bernoulli(1, Rational(1, 2));
      IdentityBounds b = bounds;
      // propagate generic overrides to the per-identity bounds they name
      if (verify->count("--i-max") > 0) {
        b.vanishing_i = b.agreement_i;
        b.hob_i = b.agreement_i;
        b.endpoint_i = b.agreement_i;
      }
      if (verify->count("--j-max") > 0) {
        b.vanishing_j = b.agreement_j;
        b.hob_j = b.agreement_j;
      }
      if (verify->count("--k-max") > 0) {
        b.daehee_k = b.corlog_k;
        b.laurent_k = b.corlog_k;
      }
      if (verify->count("--q-max") > 0) b.daehee_q = b.corlog_q;
      std::vector<Certificate> certs;
      if (selector == "all") {
        certs = verify_identities(sequences, b);
      } else {
        certs.push_back(run_identity(sequences, selector, b));
      }
      bool all_pass = true;
      for (const auto& cert : certs) {
        const auto path = write_certificate(cert, out_flag);
        report_certificate(cert, path);
        all_pass = all_pass && cert.pass;
      }
      if (!all_pass) exit_code = 1;
    });
  }

  // certify ---------------------------------------------------------------------
  {
    static long n = 2;
    static std::string method = "closed";
    static unsigned shards = default_shards();
    static std::string out_flag;
    auto* certify = app.add_subcommand(
        "certify", "certify b_(i,j,k) > 0 for 1 <= i < N, j in {1,2}, k <= i+j");
    certify->add_option("N", n, "range bound N >= 2")->required()->check(CLI::Range(2L, 1000000L));
    certify->add_option("--method", method, "recurrence, genfunc, or closed")
        ->capture_default_str();
    certify->add_option("--shards", shards, "parallel shards (env FANOCOEFF_SHARDS)")
        ->check(CLI::PositiveNumber);
    certify->add_option("--out", out_flag, "certificate directory (env FANOCOEFF_OUT_DIR)");
    certify->callback([&] {
      if (inject_fault) sequences.inject_bernoulli(1, Rational(1, 2));
      const Certificate cert =
          certify_positivity(sequences, n, method_from_name(method), shards);
      const auto path = write_certificate(cert, out_flag);
      report_certificate(cert, path);
      if (!cert.pass) exit_code = 1;
    });
  }

  // crossval ----------------------------------------------------------------------
  {
    static long i_max = 10, j_max = 6;
    static std::string out_flag;
    auto* crossval = app.add_subcommand(
        "crossval", "three-method agreement over 1<=i<=i_max, 0<=j<=j_max, k<=i+j+2");
    crossval->add_option("i_max", i_max)->required()->check(CLI::PositiveNumber);
    crossval->add_option("j_max", j_max)->required()->check(CLI::PositiveNumber);
    crossval->add_option("--out", out_flag, "certificate directory (env FANOCOEFF_OUT_DIR)");
    crossval->callback([&] {
      if (inject_fault) sequences.inject_bernoulli(1, Rational(1, 2));
      const Certificate cert = cross_validate_certificate(sequences, i_max, j_max);
      const auto path = write_certificate(cert, out_flag);
      report_certificate(cert, path);
      if (!cert.pass) exit_code = 1;
    });
  }

  // chern ----------------------------------------------------------------------
  {
    static long i = 1, j = 1;
    static std::string chern_format = "json";
    auto* chern = app.add_subcommand("chern", "expansion of ch_j(H_i) with computed coefficients");
    chern->add_option("i", i, "i >= 1")->required()->check(CLI::PositiveNumber);
    chern->add_option("j", j, "j >= 1")->required()->check(CLI::PositiveNumber);
    chern->add_option("--format", chern_format, "json or latex")->capture_default_str();
    chern->callback([&] {
      CoefficientEngine engine(sequences);
      const ChernExpansion e = render_chern_expansion(engine, i, j);
      if (chern_format == "latex") {
        std::cout << e.to_latex() << "\n";
      } else if (chern_format == "json") {
        std::cout << e.to_json().dump(2) << "\n";
      } else {
        throw CLI::ValidationError("--format", "must be json or latex");
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
