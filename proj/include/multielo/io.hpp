#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_set>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "multielo/aggregate.hpp"
#include "multielo/alternatives.hpp"
#include "multielo/errors.hpp"
#include "multielo/probability.hpp"
#include "multielo/verification.hpp"

namespace multielo {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Locale-independent number formatting ('.' decimal separator always).

inline std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string format_fixed(double v, int precision) {
    char buf[128];
    const auto res =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed, precision);
    if (res.ec != std::errc{}) {
        return format_number(v);
    }
    return std::string(buf, res.ptr);
}

inline std::string format_scientific(double v, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::scientific, precision);
    if (res.ec != std::errc{}) {
        return format_number(v);
    }
    return std::string(buf, res.ptr);
}

// ---------------------------------------------------------------------------
// Player records.

struct PlayerRecord {
    std::string name;
    std::vector<double> ratings;              // one per table format
    std::optional<long> classical_rank;       // given metadata, never computed
};

struct RatingTable {
    std::vector<std::string> formats;
    std::vector<PlayerRecord> players;
};

// Reserved CSV column / JSON field carrying an externally supplied rank.
inline constexpr std::string_view kClassicalRankColumn = "classical_rank";

namespace detail {

inline std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

// One CSV line into fields: double quotes protect separators, doubled quotes
// escape a quote. No multi-line fields.
inline std::vector<std::string> split_csv_line(const std::string& line,
                                               std::size_t line_no) {
    std::vector<std::string> fields;
    std::string current;
    bool quoted = false;
    bool was_quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    current.push_back('"');
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                current.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
            was_quoted = true;
        } else if (c == ',') {
            fields.push_back(was_quoted ? current : trim(current));
            current.clear();
            was_quoted = false;
        } else {
            current.push_back(c);
        }
    }
    if (quoted) {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unterminated quoted field");
    }
    fields.push_back(was_quoted ? current : trim(current));
    return fields;
}

inline double parse_rating_field(const std::string& field, std::size_t line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, value, std::chars_format::general);
    if (res.ec != std::errc{} || res.ptr != end || field.empty()) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid rating '" +
                         field + "'");
    }
    if (!std::isfinite(value)) {
        throw InvalidInputError("line " + std::to_string(line_no) +
                                ": rating must be finite");
    }
    return value;
}

inline long parse_rank_field(const std::string& field, std::size_t line_no) {
    long value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{} || res.ptr != end || value < 1) {
        throw ParseError("line " + std::to_string(line_no) + ": invalid rank '" +
                         field + "'");
    }
    return value;
}

inline void check_new_name(std::unordered_set<std::string>& seen,
                           const std::string& name) {
    if (!seen.insert(name).second) {
        throw DuplicateNameError("duplicate player name: " + name);
    }
}

// Order key for leaderboards: unrounded combined rating quantized to 1e-9
// (ties broken by name), which keeps the comparison a strict weak ordering.
inline long long order_key(double combined) {
    return std::llround(std::clamp(combined, -8.0e9, 8.0e9) * 1e9);
}

inline long long display_round(double combined) {
    return std::llround(std::clamp(combined, -9.0e15, 9.0e15));
}

} // namespace detail

// ---------------------------------------------------------------------------
// Parsing. CSV schema: header `name,<format>,...`; a column named
// `classical_rank` is rank metadata, not a rating format. JSON schema:
// array of {"name": ..., "ratings": {label: value, ...}} with an optional
// "classical_rank" field; format order follows the first record.

inline RatingTable parse_ratings_csv(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    RatingTable table;
    std::optional<std::size_t> rank_column;
    if (!std::getline(in, line)) {
        throw ParseError("empty input: missing header line");
    }
    ++line_no;
    if (line.rfind("\xEF\xBB\xBF", 0) == 0) {
        line.erase(0, 3);  // UTF-8 byte order mark
    }
    const auto header = detail::split_csv_line(line, line_no);
    if (header.empty() || header[0] != "name") {
        throw ParseError("header must start with a 'name' column");
    }
    for (std::size_t i = 1; i < header.size(); ++i) {
        if (header[i] == kClassicalRankColumn) {
            if (rank_column) {
                throw ParseError("duplicate classical_rank column");
            }
            rank_column = i;
        } else if (header[i].empty()) {
            throw ParseError("header has an empty format label");
        } else {
            table.formats.push_back(header[i]);
        }
    }
    if (table.formats.empty()) {
        throw ParseError("header must declare at least one format column");
    }
    std::unordered_set<std::string> labels(table.formats.begin(), table.formats.end());
    if (labels.size() != table.formats.size()) {
        throw ParseError("header has duplicate format labels");
    }
    std::unordered_set<std::string> names;
    while (std::getline(in, line)) {
        ++line_no;
        if (detail::trim(line).empty()) {
            continue;
        }
        const auto fields = detail::split_csv_line(line, line_no);
        if (fields.size() != header.size()) {
            throw ParseError("line " + std::to_string(line_no) + ": expected " +
                             std::to_string(header.size()) + " fields, got " +
                             std::to_string(fields.size()));
        }
        PlayerRecord record;
        record.name = fields[0];
        if (record.name.empty()) {
            throw ParseError("line " + std::to_string(line_no) + ": empty player name");
        }
        detail::check_new_name(names, record.name);
        for (std::size_t i = 1; i < fields.size(); ++i) {
            if (rank_column && i == *rank_column) {
                if (!fields[i].empty()) {
                    record.classical_rank = detail::parse_rank_field(fields[i], line_no);
                }
            } else {
                record.ratings.push_back(detail::parse_rating_field(fields[i], line_no));
            }
        }
        table.players.push_back(std::move(record));
    }
    return table;
}

inline RatingTable parse_ratings_json(std::istream& in) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("expected a top-level array of player records");
    }
    RatingTable table;
    std::unordered_set<std::string> names;
    for (std::size_t idx = 0; idx < doc.size(); ++idx) {
        const auto& entry = doc[idx];
        const std::string where = "record " + std::to_string(idx + 1);
        if (!entry.is_object() || !entry.contains("name") ||
            !entry["name"].is_string() || !entry.contains("ratings") ||
            !entry["ratings"].is_object()) {
            throw ParseError(where + ": expected {\"name\": ..., \"ratings\": {...}}");
        }
        PlayerRecord record;
        record.name = entry["name"].get<std::string>();
        if (record.name.empty()) {
            throw ParseError(where + ": empty player name");
        }
        detail::check_new_name(names, record.name);
        if (table.formats.empty()) {
            for (const auto& [label, value] : entry["ratings"].items()) {
                (void)value;
                table.formats.push_back(label);
            }
            if (table.formats.empty()) {
                throw ParseError(where + ": ratings object is empty");
            }
        }
        if (entry["ratings"].size() != table.formats.size()) {
            throw ParseError(where + ": format labels differ from the first record");
        }
        for (const auto& label : table.formats) {
            if (!entry["ratings"].contains(label)) {
                throw ParseError(where + ": missing rating for format '" + label + "'");
            }
            const auto& value = entry["ratings"][label];
            if (!value.is_number()) {
                throw ParseError(where + ": rating for '" + label +
                                 "' is not a number");
            }
            const double rating = value.get<double>();
            if (!std::isfinite(rating)) {
                throw InvalidInputError(where + ": rating must be finite");
            }
            record.ratings.push_back(rating);
        }
        if (entry.contains(std::string(kClassicalRankColumn))) {
            const auto& rank = entry[std::string(kClassicalRankColumn)];
            if (!rank.is_number_integer() || rank.get<long>() < 1) {
                throw ParseError(where + ": classical_rank must be a positive integer");
            }
            record.classical_rank = rank.get<long>();
        }
        table.players.push_back(std::move(record));
    }
    return table;
}

inline RatingTable load_ratings_file(const std::string& path,
                                     std::string_view format = "auto") {
    std::ifstream in(path);
    if (!in) {
        throw ParseError("cannot open " + path);
    }
    std::string chosen(format);
    if (chosen == "auto") {
        if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
            chosen = "json";
        } else {
            chosen = "csv";
        }
    }
    if (chosen == "json") {
        return parse_ratings_json(in);
    }
    if (chosen == "csv") {
        return parse_ratings_csv(in);
    }
    throw ParseError("unknown input format: " + chosen);
}

// ---------------------------------------------------------------------------
// Writing (lossless round trip for the rating values).

namespace detail {

inline std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) {
        return field;
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out.push_back(c);
        }
    }
    out += "\"";
    return out;
}

} // namespace detail

inline void write_ratings_csv(const RatingTable& table, std::ostream& out) {
    const bool has_rank = std::any_of(
        table.players.begin(), table.players.end(),
        [](const PlayerRecord& p) { return p.classical_rank.has_value(); });
    out << "name";
    if (has_rank) {
        out << ',' << kClassicalRankColumn;
    }
    for (const auto& f : table.formats) {
        out << ',' << detail::csv_quote(f);
    }
    out << '\n';
    for (const auto& player : table.players) {
        out << detail::csv_quote(player.name);
        if (has_rank) {
            out << ',';
            if (player.classical_rank) {
                out << *player.classical_rank;
            }
        }
        for (double r : player.ratings) {
            out << ',' << format_number(r);
        }
        out << '\n';
    }
}

inline void write_ratings_json(const RatingTable& table, std::ostream& out) {
    ordered_json doc = ordered_json::array();
    for (const auto& player : table.players) {
        ordered_json entry;
        entry["name"] = player.name;
        ordered_json ratings;
        for (std::size_t i = 0; i < table.formats.size(); ++i) {
            ratings[table.formats[i]] = player.ratings[i];
        }
        entry["ratings"] = std::move(ratings);
        if (player.classical_rank) {
            entry[std::string(kClassicalRankColumn)] = *player.classical_rank;
        }
        doc.push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------
// Leaderboard.

struct LeaderboardRow {
    int combined_rank = 0;
    std::optional<long> classical_rank;
    std::string name;
    long long combined_display = 0;  // rounded half away from zero
    double combined = 0.0;           // unrounded; ordering uses this
    std::vector<double> ratings;
};

struct Leaderboard {
    std::vector<std::string> formats;
    std::vector<LeaderboardRow> rows;
};

inline Leaderboard rank_players(const RatingTable& table,
                                std::span<const double> weights = {}) {
    std::vector<double> w = weights.empty()
                                ? std::vector<double>(table.formats.size(), 1.0)
                                : std::vector<double>(weights.begin(), weights.end());
    if (w.size() != table.formats.size()) {
        throw DimensionError("weight count does not match the format count");
    }
    Leaderboard board;
    board.formats = table.formats;
    board.rows.reserve(table.players.size());
    for (const auto& player : table.players) {
        if (player.ratings.size() != table.formats.size()) {
            throw DimensionError("player " + player.name +
                                 " does not match the format schema");
        }
        LeaderboardRow row;
        row.name = player.name;
        row.classical_rank = player.classical_rank;
        row.ratings = player.ratings;
        row.combined = combined_rating(player.ratings, w);
        row.combined_display = detail::display_round(row.combined);
        board.rows.push_back(std::move(row));
    }
    std::sort(board.rows.begin(), board.rows.end(),
              [](const LeaderboardRow& a, const LeaderboardRow& b) {
                  const auto ka = detail::order_key(a.combined);
                  const auto kb = detail::order_key(b.combined);
                  if (ka != kb) {
                      return ka > kb;
                  }
                  return a.name < b.name;
              });
    for (std::size_t i = 0; i < board.rows.size(); ++i) {
        board.rows[i].combined_rank = static_cast<int>(i + 1);
    }
    // Classical ranks: echo given metadata; otherwise rank the `classical`
    // column within this table, if one exists.
    const bool any_given = std::any_of(
        board.rows.begin(), board.rows.end(),
        [](const LeaderboardRow& r) { return r.classical_rank.has_value(); });
    if (!any_given) {
        const auto it = std::find(board.formats.begin(), board.formats.end(),
                                  std::string("classical"));
        if (it != board.formats.end()) {
            const std::size_t col =
                static_cast<std::size_t>(it - board.formats.begin());
            std::vector<std::size_t> order(board.rows.size());
            for (std::size_t i = 0; i < order.size(); ++i) {
                order[i] = i;
            }
            std::sort(order.begin(), order.end(),
                      [&](std::size_t a, std::size_t b) {
                          const auto ka = detail::order_key(board.rows[a].ratings[col]);
                          const auto kb = detail::order_key(board.rows[b].ratings[col]);
                          if (ka != kb) {
                              return ka > kb;
                          }
                          return board.rows[a].name < board.rows[b].name;
                      });
            for (std::size_t pos = 0; pos < order.size(); ++pos) {
                board.rows[order[pos]].classical_rank = static_cast<long>(pos + 1);
            }
        }
    }
    return board;
}

// ---------------------------------------------------------------------------
// Method comparison table.

struct ComparisonRow {
    std::string name;
    double arithmetic = 0.0;
    std::vector<double> power_means;  // one per requested p
    double combined = 0.0;
};

struct MethodComparison {
    std::vector<std::string> formats;
    std::vector<double> p_values;
    std::vector<ComparisonRow> rows;
};

inline MethodComparison compare_methods(const RatingTable& table,
                                        std::span<const double> weights = {},
                                        std::span<const double> p_values = {}) {
    std::vector<double> w = weights.empty()
                                ? std::vector<double>(table.formats.size(), 1.0)
                                : std::vector<double>(weights.begin(), weights.end());
    if (w.size() != table.formats.size()) {
        throw DimensionError("weight count does not match the format count");
    }
    MethodComparison comparison;
    comparison.formats = table.formats;
    comparison.p_values.assign(p_values.begin(), p_values.end());
    for (const auto& player : table.players) {
        if (player.ratings.size() != table.formats.size()) {
            throw DimensionError("player " + player.name +
                                 " does not match the format schema");
        }
        ComparisonRow row;
        row.name = player.name;
        row.arithmetic = arithmetic_rating(player.ratings, w);
        for (double p : comparison.p_values) {
            row.power_means.push_back(power_mean_rating(player.ratings, w, p));
        }
        row.combined = combined_rating(player.ratings, w);
        comparison.rows.push_back(std::move(row));
    }
    std::sort(comparison.rows.begin(), comparison.rows.end(),
              [](const ComparisonRow& a, const ComparisonRow& b) {
                  const auto ka = detail::order_key(a.combined);
                  const auto kb = detail::order_key(b.combined);
                  if (ka != kb) {
                      return ka > kb;
                  }
                  return a.name < b.name;
              });
    return comparison;
}

// ---------------------------------------------------------------------------
// Matchups built from a table.

struct NamedMatchup {
    std::string name_a;
    std::string name_b;
    MatchupReport report;
};

inline const PlayerRecord& find_player(const RatingTable& table,
                                       std::string_view name) {
    for (const auto& player : table.players) {
        if (player.name == name) {
            return player;
        }
    }
    throw InvalidInputError("player not found: " + std::string(name));
}

inline NamedMatchup matchup_report(const RatingTable& table, std::string_view a,
                                   std::string_view b,
                                   std::span<const double> weights = {},
                                   std::span<const double> pi = {}) {
    const auto& pa = find_player(table, a);
    const auto& pb = find_player(table, b);
    NamedMatchup matchup;
    matchup.name_a = pa.name;
    matchup.name_b = pb.name;
    matchup.report = compute_matchup(RatingProfile{table.formats, pa.ratings},
                                     RatingProfile{table.formats, pb.ratings},
                                     weights, pi);
    return matchup;
}

// ---------------------------------------------------------------------------
// Text rendering. Ratings show 2 decimals, probabilities 4, matching the
// precision used for reporting combined ratings and win chances.

namespace detail {

inline void render_aligned(const std::vector<std::vector<std::string>>& cells,
                           std::ostream& out, int gap = 2) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        if (row.size() > widths.size()) {
            widths.resize(row.size(), 0);
        }
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            cell.resize(widths[i], ' ');
            line += cell;
            if (i + 1 < row.size()) {
                line.append(static_cast<std::size_t>(gap), ' ');
            }
        }
        while (!line.empty() && line.back() == ' ') {
            line.pop_back();
        }
        out << line << '\n';
    }
}

inline std::string join_numbers(std::span<const double> values, int precision = -1) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += precision < 0 ? format_number(values[i])
                             : format_fixed(values[i], precision);
    }
    return out;
}

} // namespace detail

inline void render_leaderboard(const Leaderboard& board, std::ostream& out) {
    std::vector<std::vector<std::string>> cells;
    const bool has_classical = std::any_of(
        board.rows.begin(), board.rows.end(),
        [](const LeaderboardRow& r) { return r.classical_rank.has_value(); });
    std::vector<std::string> header{"rank"};
    if (has_classical) {
        header.push_back("classical_rank");
    }
    header.push_back("name");
    header.push_back("combined");
    for (const auto& f : board.formats) {
        header.push_back(f);
    }
    cells.push_back(std::move(header));
    for (const auto& row : board.rows) {
        std::vector<std::string> line{std::to_string(row.combined_rank)};
        if (has_classical) {
            line.push_back(row.classical_rank ? std::to_string(*row.classical_rank)
                                              : std::string("-"));
        }
        line.push_back(row.name);
        line.push_back(std::to_string(row.combined_display));
        for (double r : row.ratings) {
            line.push_back(format_number(r));
        }
        cells.push_back(std::move(line));
    }
    detail::render_aligned(cells, out);
}

inline void render_matchup(const NamedMatchup& matchup, std::ostream& out) {
    const MatchupReport& r = matchup.report;
    out << "matchup: " << matchup.name_a << " vs " << matchup.name_b << '\n';
    out << "weights: " << detail::join_numbers(r.weights) << '\n';
    out << "combined rating: " << format_fixed(r.combined_a, 2) << " vs "
        << format_fixed(r.combined_b, 2) << "  (difference "
        << format_fixed(r.combined_a - r.combined_b, 2) << ")\n";
    out << "combined win probability: " << format_fixed(r.combined_probability, 4)
        << '\n';
    std::vector<std::vector<std::string>> cells;
    cells.push_back({"format", "expected score", "endogenous weight"});
    for (std::size_t i = 0; i < r.per_format_scores.size(); ++i) {
        cells.push_back({r.profile_a.labels[i],
                         format_fixed(r.per_format_scores[i], 4),
                         format_fixed(r.endogenous_weights[i], 4)});
    }
    detail::render_aligned(cells, out);
    if (r.lottery_probability) {
        out << "lottery win probability: " << format_fixed(*r.lottery_probability, 4)
            << "  (format distribution "
            << detail::join_numbers(r.lottery_distribution, 4)
            << ", combined-vs-lottery gap "
            << format_fixed(r.combined_probability - *r.lottery_probability, 4)
            << ")\n";
    }
}

inline void render_comparison(const MethodComparison& comparison, std::ostream& out) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{"name", "arithmetic"};
    for (double p : comparison.p_values) {
        header.push_back("p=" + format_number(p));
    }
    header.push_back("combined");
    cells.push_back(std::move(header));
    for (const auto& row : comparison.rows) {
        std::vector<std::string> line{row.name, format_fixed(row.arithmetic, 2)};
        for (double v : row.power_means) {
            line.push_back(format_fixed(v, 2));
        }
        line.push_back(format_fixed(row.combined, 2));
        cells.push_back(std::move(line));
    }
    detail::render_aligned(cells, out);
}

inline void render_axiom_report(const AxiomReport& report, std::ostream& out) {
    out << "rule: " << report.rule_id << '\n';
    const auto line = [&](const AxiomCheck& check) {
        out << "  " << check.name << ": " << (check.holds ? "holds" : "FAILS")
            << "  (max discrepancy " << format_scientific(check.max_discrepancy, 2)
            << ", tolerance " << format_scientific(check.tolerance, 0) << ")\n";
        if (!check.holds) {
            out << "    witness: ratings=(" << detail::join_numbers(check.witness.ratings)
                << ") weights=(" << detail::join_numbers(check.witness.weights) << ")";
            if (!check.witness.partition.empty()) {
                out << " partition=";
                for (std::size_t b = 0; b < check.witness.partition.size(); ++b) {
                    out << (b ? "/" : "") << "{";
                    for (std::size_t i = 0; i < check.witness.partition[b].size(); ++i) {
                        out << (i ? "," : "")
                            << std::to_string(check.witness.partition[b][i]);
                    }
                    out << "}";
                }
            }
            out << " observed=" << format_number(check.witness.observed)
                << " expected=" << format_number(check.witness.expected) << '\n';
        }
    };
    line(report.normalization);
    line(report.recursion);
    line(report.marginal);
    line(report.relabeling);
    line(report.weight_scale);
}

inline void render_cycle(const CycleReport& report, std::ostream& out) {
    const char* names[3] = {"X", "Y", "Z"};
    for (std::size_t i = 0; i < 3; ++i) {
        out << names[i] << " = (" << detail::join_numbers(report.profiles[i])
            << ")  combined " << format_fixed(report.combined[i], 4) << '\n';
    }
    for (std::size_t i = 0; i < 3; ++i) {
        out << "uniform lottery P(" << names[i] << " beats " << names[(i + 1) % 3]
            << ") = " << format_fixed(report.lottery[i], 6) << '\n';
    }
    out << "combined-rating spread: "
        << format_scientific(report.combined_spread(), 2) << '\n';
    out << (report.cyclic()
                ? "cycle present: every lottery favorite wins, yet all combined "
                  "ratings agree; no scalar rating reproduces these comparisons\n"
                : "cycle absent\n");
}

// ---------------------------------------------------------------------------
// JSON rendering.

inline ordered_json to_json(const Leaderboard& board) {
    ordered_json doc;
    doc["formats"] = board.formats;
    doc["players"] = ordered_json::array();
    for (const auto& row : board.rows) {
        ordered_json entry;
        entry["rank"] = row.combined_rank;
        if (row.classical_rank) {
            entry["classical_rank"] = *row.classical_rank;
        }
        entry["name"] = row.name;
        entry["combined"] = row.combined_display;
        entry["combined_exact"] = row.combined;
        ordered_json ratings;
        for (std::size_t i = 0; i < board.formats.size(); ++i) {
            ratings[board.formats[i]] = row.ratings[i];
        }
        entry["ratings"] = std::move(ratings);
        doc["players"].push_back(std::move(entry));
    }
    return doc;
}

inline ordered_json to_json(const NamedMatchup& matchup) {
    const MatchupReport& r = matchup.report;
    ordered_json doc;
    doc["a"] = matchup.name_a;
    doc["b"] = matchup.name_b;
    doc["formats"] = r.profile_a.labels;
    doc["ratings_a"] = r.profile_a.ratings;
    doc["ratings_b"] = r.profile_b.ratings;
    doc["weights"] = r.weights;
    doc["combined_a"] = r.combined_a;
    doc["combined_b"] = r.combined_b;
    doc["difference"] = r.combined_a - r.combined_b;
    doc["combined_probability"] = r.combined_probability;
    doc["per_format_scores"] = r.per_format_scores;
    doc["endogenous_weights"] = r.endogenous_weights;
    if (r.lottery_probability) {
        doc["lottery_distribution"] = r.lottery_distribution;
        doc["lottery_probability"] = *r.lottery_probability;
        doc["combined_vs_lottery_gap"] =
            r.combined_probability - *r.lottery_probability;
    }
    return doc;
}

inline ordered_json to_json(const MethodComparison& comparison) {
    ordered_json doc;
    doc["formats"] = comparison.formats;
    doc["p_values"] = comparison.p_values;
    doc["players"] = ordered_json::array();
    for (const auto& row : comparison.rows) {
        ordered_json entry;
        entry["name"] = row.name;
        entry["arithmetic"] = row.arithmetic;
        entry["power_means"] = row.power_means;
        entry["combined"] = row.combined;
        doc["players"].push_back(std::move(entry));
    }
    return doc;
}

inline ordered_json to_json(const AxiomCheck& check) {
    ordered_json doc;
    doc["name"] = check.name;
    doc["holds"] = check.holds;
    doc["tolerance"] = check.tolerance;
    doc["max_discrepancy"] = check.max_discrepancy;
    ordered_json witness;
    witness["ratings"] = check.witness.ratings;
    witness["weights"] = check.witness.weights;
    if (!check.witness.alt_ratings.empty()) {
        witness["alt_ratings"] = check.witness.alt_ratings;
    }
    if (!check.witness.alt_weights.empty()) {
        witness["alt_weights"] = check.witness.alt_weights;
    }
    if (!check.witness.partition.empty()) {
        witness["partition"] = check.witness.partition;
    }
    witness["observed"] = check.witness.observed;
    witness["expected"] = check.witness.expected;
    doc["witness"] = std::move(witness);
    return doc;
}

inline ordered_json to_json(const AxiomReport& report) {
    ordered_json doc;
    doc["rule"] = report.rule_id;
    doc["checks"] = ordered_json::array();
    doc["checks"].push_back(to_json(report.normalization));
    doc["checks"].push_back(to_json(report.recursion));
    doc["checks"].push_back(to_json(report.marginal));
    doc["checks"].push_back(to_json(report.relabeling));
    doc["checks"].push_back(to_json(report.weight_scale));
    doc["substantive_hold"] = report.substantive_hold();
    doc["all_hold"] = report.all_hold();
    return doc;
}

inline ordered_json to_json(const CycleReport& report) {
    ordered_json doc;
    doc["profiles"] = {{"X", report.profiles[0]},
                       {"Y", report.profiles[1]},
                       {"Z", report.profiles[2]}};
    doc["lottery"] = {{"x_beats_y", report.lottery[0]},
                      {"y_beats_z", report.lottery[1]},
                      {"z_beats_x", report.lottery[2]}};
    doc["combined"] = {{"X", report.combined[0]},
                       {"Y", report.combined[1]},
                       {"Z", report.combined[2]}};
    doc["combined_spread"] = report.combined_spread();
    doc["cyclic"] = report.cyclic();
    return doc;
}

} // namespace multielo
