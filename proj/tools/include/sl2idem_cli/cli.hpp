#ifndef SL2IDEM_CLI_CLI_HPP
#define SL2IDEM_CLI_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "sl2idem/modp.hpp"
#include "sl2idem/verify.hpp"

namespace sl2idem::cli {

enum class Format { Text, Json };

struct RunConfig {
  Word p = 2;
  Word r = 1;
  std::optional<Word> rprime;  // defaults to r
  Format format = Format::Text;
  std::optional<std::string> out;
  Suite suite = Suite::Basic;
  std::uint64_t seed = kDefaultSeed;
  std::optional<std::string> label;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Each command writes its document to cfg.out (or `out`) and a one-line
// summary to `err`.
int cmd_idempotents(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_pim_table(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_show(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sl2idem::cli

#endif  // SL2IDEM_CLI_CLI_HPP
