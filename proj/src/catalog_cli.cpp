#include "reversive/catalog_cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "reversive/closed_forms.hpp"
#include "reversive/lagrange.hpp"

namespace reversive::cli {

using reversive::to_string;

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

int parse_int_value(const std::string& key, const std::string& value) {
    const Integer z = parse_integer(value);
    if (!z.fits_sint_p() || z < 0) {
        throw ParseError("config value for '" + key + "' must be a non-negative integer");
    }
    return static_cast<int>(z.get_si());
}

std::vector<Integer> reversion_terms(const ReversiveSymbol& symbol, std::size_t count) {
    if (count == 0) {
        return {};
    }
    return lagrange_coefficients(symbol, count - 1);
}

std::string cell(const std::optional<Integer>& v) { return v ? to_string(*v) : "-"; }

}  // namespace

Config parse_config(const std::string& text, Config base) {
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ParseError("config line " + std::to_string(lineno) + ": expected key=value");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "exhaustive_cap_n") {
            base.exhaustive_cap_n = parse_int_value(key, value);
        } else if (key == "chord_cap_p") {
            base.chord_cap_p = parse_int_value(key, value);
        } else if (key == "default_count") {
            base.default_count = parse_int_value(key, value);
        } else {
            throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    return base;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

Method parse_method(const std::string& text) {
    if (text == "reversion") return Method::Reversion;
    if (text == "closed") return Method::Closed;
    if (text == "series") return Method::Series;
    throw ParseError("unknown method '" + text + "' (expected reversion, closed or series)");
}

std::string to_string(Method m) {
    switch (m) {
        case Method::Reversion: return "reversion";
        case Method::Closed: return "closed";
        case Method::Series: return "series";
    }
    return "?";
}

SequenceRecord resolve(const std::string& name_or_symbol) {
    const std::string text = trim(name_or_symbol);
    if (text.find('(') != std::string::npos) {
        ReversiveSymbol symbol = parse_symbol(text);
        return SequenceRecord{symbol.name(), std::move(symbol), std::nullopt, {},
                              Provenance::Reversion, std::nullopt};
    }
    const CatalogEntry& entry = catalog_entry(text);
    return SequenceRecord{entry.symbol.name(), entry.symbol, entry.rule, {},
                          Provenance::Reversion, entry.id};
}

TermRun compute_terms(const std::string& name_or_symbol, std::size_t count, Method method) {
    TermRun run{resolve(name_or_symbol), 0};
    SequenceRecord& rec = run.record;
    switch (method) {
        case Method::Reversion:
            rec.provenance = Provenance::Reversion;
            rec.terms = reversion_terms(rec.symbol, count);
            break;
        case Method::Closed: {
            if (!rec.catalog_id) {
                throw MethodUnavailable("closed forms exist only for catalog entries");
            }
            rec.provenance = Provenance::ClosedForm;
            if (*rec.catalog_id == SequenceId::OddTiles) {
                run.first_index = 1;
            }
            for (std::size_t n = run.first_index; n < count; ++n) {
                rec.terms.push_back(closed_term(*rec.catalog_id, static_cast<long>(n)));
            }
            break;
        }
        case Method::Series:
            if (!rec.rule) {
                throw MethodUnavailable("the series counter needs a tile rule; '" + rec.name +
                                        "' has none");
            }
            rec.provenance = Provenance::Series;
            if (count > 0) {
                rec.terms = count_by_series(static_cast<int>(count - 1), *rec.rule);
            }
            break;
    }
    return run;
}

std::string format_bfile(const std::vector<Integer>& terms, std::size_t first_index) {
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        out += std::to_string(first_index + i);
        out += ' ';
        out += to_string(terms[i]);
        out += '\n';
    }
    return out;
}

int cmd_list(std::ostream& out) {
    for (const auto& entry : catalog()) {
        out << format_symbol(entry.symbol) << "\n";
    }
    return kExitSuccess;
}

int cmd_terms(std::ostream& out, const std::string& name_or_symbol, std::size_t count, Method method) {
    const TermRun run = compute_terms(name_or_symbol, count, method);
    if (run.first_index == 1 && count > 0) {
        out << "# 0 " << kOddAnomalyNote << "\n";
    }
    out << format_bfile(run.record.terms, run.first_index);
    return kExitSuccess;
}

int cmd_verify(std::ostream& out, const std::string& name, std::size_t count, const Config& config) {
    const CatalogEntry& entry = catalog_entry(trim(name));
    if (config.exhaustive_cap_n > kMaxExhaustiveN) {
        throw CapExceeded("exhaustive_cap_n = " + std::to_string(config.exhaustive_cap_n) +
                          " exceeds the supported maximum " + std::to_string(kMaxExhaustiveN));
    }
    if (config.chord_cap_p > kMaxChordP) {
        throw CapExceeded("chord_cap_p = " + std::to_string(config.chord_cap_p) +
                          " exceeds the supported maximum " + std::to_string(kMaxChordP));
    }
    if (count == 0) {
        out << "nothing to verify\n";
        return kExitSuccess;
    }
    const std::size_t max_index = count - 1;
    const auto lagrange = lagrange_coefficients(entry.symbol, max_index);
    const auto direct = reversion_coefficients(entry.symbol, max_index);
    std::vector<Integer> series;
    if (entry.rule) {
        series = count_by_series(static_cast<int>(max_index), *entry.rule);
    }

    out << "verify " << format_symbol(entry.symbol);
    if (entry.rule) {
        out << " tiles=" << entry.rule->describe();
    }
    out << "\n";
    out << std::left << std::setw(4) << "n" << std::setw(16) << "lagrange" << std::setw(16) << "direct"
        << std::setw(16) << "closed" << std::setw(16) << "series" << std::setw(16) << "oracle"
        << "status\n";

    std::optional<std::size_t> first_mismatch;
    for (std::size_t n = 0; n <= max_index; ++n) {
        const long ln = static_cast<long>(n);
        std::optional<Integer> closed;
        std::string note;
        if (entry.id == SequenceId::OddTiles && n == 0) {
            note = kOddAnomalyNote;
        } else {
            closed = closed_term(entry.id, ln);
        }
        std::optional<Integer> series_value;
        if (entry.rule) {
            series_value = series[n];
        }
        std::optional<Integer> oracle;
        if (entry.rule && ln <= config.exhaustive_cap_n) {
            oracle = enumerate_count(static_cast<int>(n), *entry.rule, config.exhaustive_cap_n);
        } else if (!entry.rule && ln <= config.chord_cap_p) {
            oracle = count_chord_diagrams(static_cast<int>(n), config.chord_cap_p);
        }

        bool agree = direct[n] == lagrange[n];
        for (const auto& v : {closed, series_value, oracle}) {
            if (v && *v != lagrange[n]) {
                agree = false;
            }
        }
        if (!agree && !first_mismatch) {
            first_mismatch = n;
        }
        out << std::setw(4) << n << std::setw(16) << to_string(lagrange[n]) << std::setw(16)
            << to_string(direct[n]) << std::setw(16) << cell(closed) << std::setw(16)
            << cell(series_value) << std::setw(16) << cell(oracle) << (agree ? "ok" : "MISMATCH");
        if (!note.empty()) {
            out << "  " << note;
        }
        out << "\n";
    }
    if (first_mismatch) {
        out << "mismatch: first differing index n=" << *first_mismatch << "\n";
        return kExitMismatch;
    }
    out << "all paths agree for n=0.." << max_index << "\n";
    return kExitSuccess;
}

int cmd_from_tiles(std::ostream& out, const std::string& spec, std::size_t count) {
    const TileRule rule = parse_tile_rule(spec);
    const ReversiveSymbol symbol = symbol_from_tile_rule(rule);
    out << format_symbol(symbol) << "\n";
    if (count == 0) {
        return kExitSuccess;
    }
    const auto terms = reversion_terms(symbol, count);
    const auto series = count_by_series(static_cast<int>(count - 1), rule);
    out << format_bfile(terms);
    for (std::size_t n = 0; n < count; ++n) {
        if (terms[n] != series[n]) {
            out << "mismatch: series counter gives " << to_string(series[n]) << " at n=" << n << "\n";
            return kExitMismatch;
        }
    }
    return kExitSuccess;
}

int cmd_bfile(std::ostream& out, const std::string& name_or_symbol, std::size_t count,
              const std::string& path) {
    const TermRun run = compute_terms(name_or_symbol, count, Method::Reversion);
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    file << format_bfile(run.record.terms);
    file.close();
    if (!file) {
        throw IoError("failed writing '" + path + "'");
    }
    out << "wrote " << run.record.terms.size() << " terms to " << path << "\n";
    return kExitSuccess;
}

int exit_status_for(const std::exception& e) {
    if (dynamic_cast<const CapExceeded*>(&e) != nullptr) {
        return kExitCapExceeded;
    }
    return kExitUsage;
}

}  // namespace reversive::cli
