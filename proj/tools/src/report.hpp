#pragma once

// Row model and TSV/JSON rendering for `solve`.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "swapedge/failure.hpp"

namespace swapedge::cli {

/// Exact value rounded half-up to `places` decimals.
std::string decimal_string(const mpq_class& q, int places = 6);

struct Row {
  TreeEdge edge;
  std::optional<SwapEdge> swap;
  std::optional<mpq_class> objective;
  std::size_t detached = 0;
};

struct Section {
  std::string criterion;  // ms, as or gse
  std::vector<Row> rows;
};

struct Summary {
  std::optional<mpq_class> max_mu;
  std::optional<mpq_class> max_lambda;
  std::optional<mpq_class> max_gse_ratio;
  bool has_mu = false;
  bool has_lambda = false;
  bool has_ratio = false;
};

void write_tsv(std::ostream& out, const std::vector<Section>& sections, const Summary& summary);
void write_json(std::ostream& out, const std::vector<Section>& sections, const Summary& summary);

/// "label\tnum/den\tdecimal", with "-" for a missing value.
void write_value_line(std::ostream& out, std::string_view label,
                      const std::optional<mpq_class>& value);

}  // namespace swapedge::cli
