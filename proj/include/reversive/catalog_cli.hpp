#pragma once

// Front-end operations behind the `reversive` command-line tool. Each command
// writes its report to an output stream and returns a process exit status;
// malformed input is reported by throwing, and exit_status_for maps those
// exceptions onto the documented statuses.

#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "reversive/dissection_oracle.hpp"
#include "reversive/exact_arith.hpp"
#include "reversive/symbols.hpp"

namespace reversive::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCapExceeded = 3;

struct Config {
    int exhaustive_cap_n = kDefaultExhaustiveCap;
    int chord_cap_p = kDefaultChordCap;
    int default_count = 10;
};

/// Reads `key = value` lines (keys exhaustive_cap_n, chord_cap_p,
/// default_count); blank lines and '#' comments are skipped. Unknown keys or
/// non-integer values throw ParseError; an unreadable file throws IoError.
Config load_config(const std::string& path);
Config parse_config(const std::string& text, Config base = {});

enum class Method { Reversion, Closed, Series };
Method parse_method(const std::string& text);
std::string to_string(Method m);

/// Which computation produced a run of terms.
enum class Provenance { Reversion, ClosedForm, Oracle, Series };

struct SequenceRecord {
    std::string name;
    ReversiveSymbol symbol;
    std::optional<TileRule> rule;
    std::vector<Integer> terms;  // a_0, a_1, ... contiguous from 0
    Provenance provenance;
    /// Catalog entry the record came from, when it did.
    std::optional<SequenceId> catalog_id;
};

/// A catalog name, or a symbol in text form ("(0,1,-1)/(1)", optionally
/// prefixed with "name: "). Throws UnknownName or ParseError.
SequenceRecord resolve(const std::string& name_or_symbol);

/// Terms a_0..a_{count-1} of the resolved sequence by the chosen method.
/// Throws MethodUnavailable when the method does not apply. For the closed
/// method on the odd-tile entry, index 0 is left out of `terms` and
/// `first_index` is 1.
struct TermRun {
    SequenceRecord record;
    std::size_t first_index = 0;
};
TermRun compute_terms(const std::string& name_or_symbol, std::size_t count, Method method);

/// Marks the odd-tile entry's n = 0 row wherever the closed form is skipped.
inline constexpr const char* kOddAnomalyNote = "formula: excluded (anomaly at n=0)";

int cmd_list(std::ostream& out);
int cmd_terms(std::ostream& out, const std::string& name_or_symbol, std::size_t count, Method method);
int cmd_verify(std::ostream& out, const std::string& name, std::size_t count, const Config& config);
int cmd_from_tiles(std::ostream& out, const std::string& spec, std::size_t count);
int cmd_bfile(std::ostream& out, const std::string& name_or_symbol, std::size_t count,
              const std::string& path);

/// b-file text: "n a(n)\n" per term, indices from first_index, no header.
std::string format_bfile(const std::vector<Integer>& terms, std::size_t first_index = 0);

/// Maps a library exception onto an exit status (usage, cap exceeded, ...).
int exit_status_for(const std::exception& e);

}  // namespace reversive::cli
