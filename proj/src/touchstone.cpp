#include "analog/touchstone.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <system_error>

#include "analog/csv.hpp"
#include "analog/errors.hpp"

namespace analog::io {

namespace {

constexpr double kDegree = std::numbers::pi / 180.0;

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

double number(std::string_view token, std::size_t line_no) {
  double v = 0.0;
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc{} || res.ptr != token.data() + token.size()) {
    throw Error(ErrorKind::MalformedRow,
                "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not a number");
  }
  return v;
}

Complex decode(double x, double y, TouchstoneFormat format) {
  switch (format) {
    case TouchstoneFormat::RI:
      return {x, y};
    case TouchstoneFormat::MA:
      return std::polar(x, y * kDegree);
    case TouchstoneFormat::DB:
      return std::polar(std::pow(10.0, x / 20.0), y * kDegree);
  }
  return {};
}

std::pair<double, double> encode(Complex z, TouchstoneFormat format) {
  switch (format) {
    case TouchstoneFormat::RI:
      return {z.real(), z.imag()};
    case TouchstoneFormat::MA:
      return {std::abs(z), std::arg(z) / kDegree};
    case TouchstoneFormat::DB:
      return {20.0 * std::log10(std::abs(z)), std::arg(z) / kDegree};
  }
  return {};
}

TouchstoneOptions parse_option_line(std::string_view line, std::size_t line_no) {
  TouchstoneOptions opt;
  const auto toks = tokens(line);
  for (std::size_t i = 0; i < toks.size(); ++i) {
    const std::string t = upper(toks[i]);
    if (t == "HZ") opt.frequency_unit = Unit::Hz;
    else if (t == "KHZ") opt.frequency_unit = Unit::kHz;
    else if (t == "MHZ") opt.frequency_unit = Unit::MHz;
    else if (t == "GHZ") opt.frequency_unit = Unit::GHz;
    else if (t == "RI") opt.format = TouchstoneFormat::RI;
    else if (t == "MA") opt.format = TouchstoneFormat::MA;
    else if (t == "DB") opt.format = TouchstoneFormat::DB;
    else if (t == "S") continue;
    else if (t == "R") {
      if (i + 1 >= toks.size()) {
        throw Error(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": R needs a value");
      }
      opt.reference_resistance = number(toks[++i], line_no);
    } else {
      throw Error(ErrorKind::MalformedRow,
                  "line " + std::to_string(line_no) + ": unsupported option '" + std::string(toks[i]) + "'");
    }
  }
  return opt;
}

}  // namespace

std::string_view to_string(TouchstoneFormat format) noexcept {
  switch (format) {
    case TouchstoneFormat::RI: return "RI";
    case TouchstoneFormat::MA: return "MA";
    case TouchstoneFormat::DB: return "DB";
  }
  return "?";
}

TouchstoneDocument parse_touchstone(std::string_view text) {
  TouchstoneDocument doc;
  bool have_options = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (const std::size_t bang = line.find('!'); bang != std::string_view::npos) {
      doc.comments.emplace_back(line.substr(bang + 1));
      line = line.substr(0, bang);
    }
    const auto toks = tokens(line);
    if (toks.empty()) continue;

    if (toks.front().front() == '#') {
      // Only the first option line counts.
      if (!have_options) {
        doc.options = parse_option_line(line.substr(line.find('#') + 1), line_no);
        have_options = true;
      }
      continue;
    }
    if (!have_options) {
      throw Error(ErrorKind::MissingOptionLine,
                  "line " + std::to_string(line_no) + ": data before the '#' option line");
    }
    if (toks.size() != 9) {
      throw Error(ErrorKind::MalformedRow, "line " + std::to_string(line_no) + ": expected 9 values, got " +
                                               std::to_string(toks.size()));
    }
    double v[9];
    for (int i = 0; i < 9; ++i) v[i] = number(toks[i], line_no);
    TouchstoneRow row;
    row.frequency = convert(v[0], doc.options.frequency_unit, Unit::Hz);
    row.s11 = decode(v[1], v[2], doc.options.format);
    row.s21 = decode(v[3], v[4], doc.options.format);
    row.s12 = decode(v[5], v[6], doc.options.format);
    row.s22 = decode(v[7], v[8], doc.options.format);
    if (!doc.rows.empty() && !(row.frequency > doc.rows.back().frequency)) {
      throw Error(ErrorKind::NonMonotoneFrequency,
                  "line " + std::to_string(line_no) + ": frequency does not increase");
    }
    doc.rows.push_back(row);
  }
  if (!have_options) throw Error(ErrorKind::MissingOptionLine, "no '#' option line");
  if (doc.options.reference_resistance != 50.0) {
    doc.warnings.push_back("reference resistance " + format_double(doc.options.reference_resistance) +
                           " ohm ignored; S-parameters are used as given");
  }
  return doc;
}

TouchstoneDocument read_touchstone(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_touchstone(buf.str());
}

std::string write_touchstone(const TouchstoneDocument& doc) {
  std::string out;
  for (const auto& c : doc.comments) out += "!" + c + "\n";
  const auto& o = doc.options;
  out += "# " + std::string(to_string(o.frequency_unit)) + " S " + std::string(to_string(o.format)) + " R " +
         format_double(o.reference_resistance) + "\n";
  for (const auto& row : doc.rows) {
    out += format_double(convert(row.frequency, Unit::Hz, o.frequency_unit));
    for (Complex z : {row.s11, row.s21, row.s12, row.s22}) {
      const auto [x, y] = encode(z, o.format);
      out += ' ' + format_double(x) + ' ' + format_double(y);
    }
    out += '\n';
  }
  return out;
}

nrw::SParamSeries to_series(const TouchstoneDocument& doc, double thickness) {
  nrw::SParamSeries series;
  series.thickness = thickness;
  series.rows.reserve(doc.rows.size());
  for (const auto& r : doc.rows) series.rows.push_back({r.frequency, r.s11, r.s21});
  return series;
}

TouchstoneDocument from_series(const nrw::SParamSeries& series, TouchstoneOptions options) {
  TouchstoneDocument doc;
  doc.options = options;
  for (const auto& r : series.rows) doc.rows.push_back({r.frequency, r.s11, r.s21, r.s21, r.s11});
  return doc;
}

}  // namespace analog::io
