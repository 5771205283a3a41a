#include "report.hpp"

#include <json.hpp>

#include "swapedge/stretch.hpp"

namespace swapedge::cli {

namespace {

using Json = nlohmann::ordered_json;

Json value_json(const std::optional<mpq_class>& v) {
  if (!v) return nullptr;
  return Json{{"exact", fraction_string(*v)}, {"value", decimal_string(*v)}};
}

void write_row(std::ostream& out, const Row& r) {
  out << r.edge.parent << '\t' << r.edge.child << '\t';
  if (r.swap) {
    out << r.swap->x << '\t' << r.swap->y << '\t' << fraction_string(*r.objective) << '\t'
        << decimal_string(*r.objective);
  } else {
    out << "-\t-\t-\t-";
  }
  out << '\t' << r.detached << '\n';
}

}  // namespace

std::string decimal_string(const mpq_class& q, int places) {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  const bool negative = sgn(q) < 0;
  const mpq_class a = abs(q);
  // floor((2 * num * scale + den) / (2 * den)) rounds half up.
  mpz_class scaled = (2 * a.get_num() * scale + a.get_den()) / (2 * a.get_den());
  const mpz_class whole = scaled / scale;
  std::string frac = mpz_class(scaled % scale).get_str();
  frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
  std::string s = (negative && sgn(scaled) != 0 ? "-" : "") + whole.get_str();
  if (places > 0) s += "." + frac;
  return s;
}

void write_value_line(std::ostream& out, std::string_view label,
                      const std::optional<mpq_class>& value) {
  out << label << '\t';
  if (value) {
    out << fraction_string(*value) << '\t' << decimal_string(*value);
  } else {
    out << "-\t-";
  }
  out << '\n';
}

void write_tsv(std::ostream& out, const std::vector<Section>& sections, const Summary& summary) {
  for (const Section& s : sections) {
    out << "# criterion " << s.criterion << '\n';
    out << "# a\tb\tx\ty\tobjective\tvalue\tdetached\n";
    for (const Row& r : s.rows) write_row(out, r);
  }
  if (summary.has_mu) write_value_line(out, "# max_mu", summary.max_mu);
  if (summary.has_lambda) write_value_line(out, "# max_lambda", summary.max_lambda);
  if (summary.has_ratio) write_value_line(out, "# max_gse_ratio", summary.max_gse_ratio);
}

void write_json(std::ostream& out, const std::vector<Section>& sections, const Summary& summary) {
  Json results = Json::object();
  for (const Section& s : sections) {
    Json rows = Json::array();
    for (const Row& r : s.rows) {
      Json row{{"a", r.edge.parent}, {"b", r.edge.child}};
      if (r.swap) {
        row["x"] = r.swap->x;
        row["y"] = r.swap->y;
        row["objective"] = fraction_string(*r.objective);
        row["value"] = decimal_string(*r.objective);
      } else {
        row["x"] = nullptr;
        row["y"] = nullptr;
        row["objective"] = nullptr;
        row["value"] = nullptr;
      }
      row["detached"] = r.detached;
      rows.push_back(std::move(row));
    }
    results[s.criterion] = std::move(rows);
  }
  Json sum = Json::object();
  if (summary.has_mu) sum["max_mu"] = value_json(summary.max_mu);
  if (summary.has_lambda) sum["max_lambda"] = value_json(summary.max_lambda);
  if (summary.has_ratio) sum["max_gse_ratio"] = value_json(summary.max_gse_ratio);
  out << Json{{"results", std::move(results)}, {"summary", std::move(sum)}}.dump(2) << '\n';
}

}  // namespace swapedge::cli
