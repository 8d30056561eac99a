#include "hermlag/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "hermlag/errors.hpp"

namespace hermlag {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_real(*d);
  if (const auto* i = std::get_if<long long>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t\r");
    const auto e = item.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

}  // namespace

void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

std::vector<std::vector<std::string>> read_csv(std::istream& is, std::vector<std::string>* header) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  bool have_header = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line);
    if (!have_header) {
      have_header = true;
      if (header) *header = std::move(cells);
      continue;
    }
    rows.push_back(std::move(cells));
  }
  require(have_header, "CSV input has no header row");
  return rows;
}

Table rule_table(const QuadratureRule& rule) {
  Table t;
  t.header = {"node", "weight_poly", "weight_func"};
  for (std::size_t j = 0; j < rule.size(); ++j)
    t.rows.push_back({rule.nodes[j], rule.weights_poly[j], rule.weights_func[j]});
  return t;
}

void write_expansion(std::ostream& os, const Expansion& e) {
  nlohmann::json h;
  h["family"] = to_string(e.spec.family);
  h["param"] = e.spec.param;
  h["beta"] = e.spec.scale;
  h["N"] = e.spec.size;
  os << "# " << h.dump() << '\n';
  Table t;
  t.header = {"n", "coeff"};
  for (std::size_t n = 0; n < e.coeffs.size(); ++n) t.rows.push_back({static_cast<long long>(n), e.coeffs[n]});
  write_csv(os, t);
}

Expansion read_expansion(std::istream& is) {
  std::string first;
  require(static_cast<bool>(std::getline(is, first)) && first.rfind("# ", 0) == 0,
          "expansion file must start with a '# {json}' header");
  nlohmann::json h;
  try {
    h = nlohmann::json::parse(first.substr(2));
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("bad expansion header: ") + ex.what());
  }
  Expansion e;
  try {
    e.spec.family = family_from_string(h.at("family").get<std::string>());
    e.spec.param = h.at("param").get<double>();
    e.spec.scale = h.at("beta").get<double>();
    e.spec.size = h.at("N").get<std::size_t>();
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("bad expansion header: ") + ex.what());
  }
  e.spec.validate();
  std::vector<std::string> header;
  const auto rows = read_csv(is, &header);
  require(header.size() == 2 && header[0] == "n" && header[1] == "coeff",
          "expansion rows must have columns n,coeff");
  e.coeffs.assign(e.spec.count(), 0.0);
  require(rows.size() == e.spec.count(), "expansion row count does not match N + 1");
  for (const auto& r : rows) {
    require(r.size() == 2, "expansion rows need two cells");
    const std::size_t n = std::stoul(r[0]);
    require(n < e.coeffs.size(), "coefficient index out of range");
    e.coeffs[n] = std::stod(r[1]);
  }
  return e;
}

}  // namespace hermlag
