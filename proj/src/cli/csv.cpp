#include <algorithm>
#include <array>
#include <charconv>
#include <string>

#include "mqdimer/cli.hpp"

namespace mqdimer::cli {

namespace {

void append_field(std::string& line, const std::optional<double>& v) {
  line += ',';
  if (v) line += format_number(*v);
}

std::optional<double> read_field(std::string_view field, std::size_t line_no) {
  if (field.empty()) return std::nullopt;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw Error(ErrorCode::InvalidConfig, "bad CSV number '" + std::string(field) + "' on line " + std::to_string(line_no));
  return value;
}

}  // namespace

std::string render_csv(const std::vector<SweepRow>& rows) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    std::string line = format_number(r.tau_bar);
    append_field(line, r.g0);
    append_field(line, r.g2);
    append_field(line, r.gm2);
    append_field(line, r.j2);
    append_field(line, r.concurrence);
    append_field(line, r.discord);
    out += line;
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_csv(std::string_view text) {
  std::vector<SweepRow> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line_no == 1) {
      if (line != kCsvHeader) throw Error(ErrorCode::InvalidConfig, "unexpected CSV header '" + std::string(line) + "'");
      continue;
    }
    if (line.empty()) continue;

    std::array<std::string_view, 7> fields;
    std::size_t start = 0;
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto comma = line.find(',', start);
      const bool last = k + 1 == fields.size();
      if (last != (comma == std::string_view::npos))
        throw Error(ErrorCode::InvalidConfig, "wrong field count on line " + std::to_string(line_no));
      fields[k] = line.substr(start, (last ? line.size() : comma) - start);
      start = comma + 1;
    }

    SweepRow r;
    const auto tau = read_field(fields[0], line_no);
    if (!tau) throw Error(ErrorCode::InvalidConfig, "missing tau_bar on line " + std::to_string(line_no));
    r.tau_bar = *tau;
    r.g0 = read_field(fields[1], line_no);
    r.g2 = read_field(fields[2], line_no);
    r.gm2 = read_field(fields[3], line_no);
    r.j2 = read_field(fields[4], line_no);
    r.concurrence = read_field(fields[5], line_no);
    r.discord = read_field(fields[6], line_no);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace mqdimer::cli
