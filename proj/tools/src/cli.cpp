#include "sl2idem_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

#include "sl2idem/element_io.hpp"
#include "sl2idem/hyperalg.hpp"
#include "sl2idem/idem.hpp"
#include "sl2idem/pim.hpp"

namespace sl2idem::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraCtx context_of(const RunConfig& cfg) {
  require_prime(cfg.p);
  if (cfg.r < 1) throw UsageError("r must be at least 1");
  const Word rp = cfg.rprime.value_or(cfg.r);
  if (rp < cfg.r) throw UsageError("rprime must be at least r");
  try {
    return AlgebraCtx::make(cfg.p, cfg.r, rp);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// Writes to --out when given, else to the supplied stream.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw UsageError("cannot open output file " + *cfg.out);
  f << text;
}

nlohmann::json ctx_header(const AlgebraCtx& ctx) {
  return {{"p", ctx.p()}, {"r", ctx.r()}, {"rprime", ctx.rprime()}};
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

const char* status_word(const CheckResult& c) { return c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL"); }

}  // namespace

int cmd_idempotents(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AlgebraCtx ctx = context_of(cfg);
    const auto items = build_all_idempotents(ctx);
    std::ostringstream os;
    if (cfg.format == Format::Json) {
      nlohmann::json doc = ctx_header(ctx);
      doc["count"] = items.size();
      auto& arr = doc["idempotents"] = nlohmann::json::array();
      for (const auto& it : items) arr.push_back({{"label", format_label(it.label)}, {"element", element_to_json(it.element)}});
      os << doc.dump(2) << "\n";
    } else {
      for (const auto& it : items) os << format_label(it.label) << "\t" << format_pbw(it.element) << "\n";
    }
    emit(cfg, out, os.str());
    err << items.size() << " idempotents\n";
    return kExitOk;
  });
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AlgebraCtx ctx = context_of(cfg);
    const auto results = run_suite(ctx, cfg.suite, cfg.seed);
    std::size_t failed = 0;
    for (const auto& c : results) failed += c.pass ? 0 : 1;
    std::ostringstream os;
    if (cfg.format == Format::Json) {
      nlohmann::json doc = ctx_header(ctx);
      doc["suite"] = cfg.suite == Suite::Full ? "full" : "basic";
      doc["seed"] = cfg.seed;
      auto& arr = doc["checks"] = nlohmann::json::array();
      for (const auto& c : results) arr.push_back({{"name", c.name}, {"status", status_word(c)}, {"detail", c.detail}});
      doc["pass"] = failed == 0;
      os << doc.dump(2) << "\n";
    } else {
      for (const auto& c : results) os << "[" << status_word(c) << "] " << c.name << ": " << c.detail << "\n";
      os << results.size() << " checks, " << failed << " failed\n";
    }
    emit(cfg, out, os.str());
    err << (failed == 0 ? "verification passed\n" : "verification FAILED\n");
    return failed == 0 ? kExitOk : kExitCheckFailed;
  });
}

int cmd_pim_table(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AlgebraCtx ctx = context_of(cfg);
    const auto rows = pim_table(ctx);
    std::uint64_t census = 0;
    bool all = true;
    for (const auto& row : rows) {
      census += row.computed_dim;
      all = all && row.pass;
    }
    all = all && census == ctx.dimension();
    std::ostringstream os;
    if (cfg.format == Format::Json) {
      nlohmann::json doc = ctx_header(ctx);
      auto& arr = doc["rows"] = nlohmann::json::array();
      for (const auto& row : rows)
        arr.push_back({{"label", format_label(row.label)},
                       {"nu", row.nu},
                       {"t", row.t},
                       {"lambda_prime", row.predicted.lambda_prime},
                       {"lambda_double_prime", row.predicted.lambda_double_prime},
                       {"predicted_dim", row.predicted.dim},
                       {"computed_dim", row.computed_dim},
                       {"status", row.pass ? "PASS" : "FAIL"}});
      doc["census"] = census;
      doc["dimension"] = ctx.dimension();
      os << doc.dump(2) << "\n";
    } else {
      os << "label\tnu\tt\tlambda_prime\tlambda_double_prime\tpredicted_dim\tcomputed_dim\tstatus\n";
      for (const auto& row : rows)
        os << format_label(row.label) << "\t" << row.nu << "\t" << row.t << "\t" << row.predicted.lambda_prime << "\t"
           << row.predicted.lambda_double_prime << "\t" << row.predicted.dim << "\t" << row.computed_dim << "\t"
           << (row.pass ? "PASS" : "FAIL") << "\n";
      os << "# census " << census << " of " << ctx.dimension() << "\n";
    }
    emit(cfg, out, os.str());
    err << rows.size() << " rows, census " << census << "\n";
    return all ? kExitOk : kExitCheckFailed;
  });
}

int cmd_show(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const AlgebraCtx ctx = context_of(cfg);
    if (!cfg.label) throw UsageError("show needs --label");
    const TupleLabel label = parse_label(*cfg.label, ctx);
    const HyperElem e = build_e_tuple(label, ctx);
    std::string text = cfg.format == Format::Json ? element_to_json(e).dump(2) : format_pbw(e);
    emit(cfg, out, text + "\n");
    return kExitOk;
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Primitive idempotents of the SL(2) hyperalgebra in characteristic p"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "text", suite = "basic";
  Word rprime = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "characteristic (prime)")->required();
    sub->add_option("--r", cfg.r, "divided-power level r >= 1");
    sub->add_option("--rprime", rprime, "torus level r' >= r (default r)");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write the document to this file");
  };
  auto* idem = app.add_subcommand("idempotents", "list every labeled idempotent");
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  auto* table = app.add_subcommand("pim-table", "identify the module generated by each idempotent");
  auto* show = app.add_subcommand("show", "print one idempotent");
  for (auto* sub : {idem, verify, table, show}) add_common(sub);
  verify->add_option("--suite", suite, "basic or full")->check(CLI::IsMember({"basic", "full"}));
  verify->add_option("--seed", cfg.seed, "seed for randomized checks");
  show->add_option("--label", cfg.label, "label a:t[,a:t]*[;aprime] with t = 2j")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (auto* sub : {idem, verify, table, show})
    if (sub->count("--rprime") > 0) cfg.rprime = rprime;
  cfg.format = format == "json" ? Format::Json : Format::Text;
  cfg.suite = suite == "full" ? Suite::Full : Suite::Basic;

  if (*idem) return cmd_idempotents(cfg, out, err);
  if (*verify) return cmd_verify(cfg, out, err);
  if (*table) return cmd_pim_table(cfg, out, err);
  return cmd_show(cfg, out, err);
}

}  // namespace sl2idem::cli
