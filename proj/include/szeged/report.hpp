#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "szeged/exact.hpp"
#include "szeged/graph.hpp"

namespace szeged {

enum class IndexKind { SZ, PI_V, SZ_E, PI, SZ_T };

inline constexpr IndexKind kAllIndexKinds[] = {IndexKind::SZ, IndexKind::PI_V, IndexKind::SZ_E,
                                               IndexKind::PI, IndexKind::SZ_T};

inline std::string_view to_string(IndexKind kind) {
  switch (kind) {
    case IndexKind::SZ: return "Sz";
    case IndexKind::PI_V: return "PI_v";
    case IndexKind::SZ_E: return "Sz_e";
    case IndexKind::PI: return "PI";
    case IndexKind::SZ_T: return "Sz_t";
  }
  return "?";
}

// For e = uv: vertices (N) and edges (M) strictly closer to u resp. v.
struct EdgeSides {
  std::vector<VertexId> n_u, n_v;
  std::vector<EdgeId> m_u, m_v;

  friend bool operator==(const EdgeSides&, const EdgeSides&) = default;
};

// The four degree-weighted indices (or their starred variants).
struct IndexValues {
  Exact wSz, wPI_v, wSz_e, wPI;

  friend bool operator==(const IndexValues&, const IndexValues&) = default;
  IndexValues& operator+=(const IndexValues& o) {
    wSz += o.wSz;
    wPI_v += o.wPI_v;
    wSz_e += o.wSz_e;
    wPI += o.wPI;
    return *this;
  }
  friend std::ostream& operator<<(std::ostream& os, const IndexValues& v) {
    return os << "(wSz=" << v.wSz << ", wPI_v=" << v.wPI_v << ", wSz_e=" << v.wSz_e
              << ", wPI=" << v.wPI << ")";
  }
};

enum class Method { cut, direct, formula };

inline std::string_view to_string(Method m) {
  switch (m) {
    case Method::cut: return "cut";
    case Method::direct: return "direct";
    case Method::formula: return "formula";
  }
  return "?";
}

struct ClassContribution {
  std::size_t class_index = 0;
  std::size_t edge_count = 0;
  IndexValues values;
};

struct IndexReport {
  Method method = Method::direct;
  bool starred = false;
  IndexValues totals;
  std::vector<ClassContribution> per_class;
  bool nonstandard_region = false;

  IndexValues contribution_sum() const {
    IndexValues sum;
    for (const auto& c : per_class) sum += c.values;
    return sum;
  }
};

// Numbers are written as decimal strings so no precision is lost.
inline nlohmann::ordered_json to_json(const IndexReport& r) {
  nlohmann::ordered_json j;
  j["method"] = std::string(to_string(r.method));
  j["starred"] = r.starred;
  j["wSz"] = r.totals.wSz.to_string();
  j["wPI_v"] = r.totals.wPI_v.to_string();
  j["wSz_e"] = r.totals.wSz_e.to_string();
  j["wPI"] = r.totals.wPI.to_string();
  j["per_class"] = nlohmann::ordered_json::array();
  for (const auto& c : r.per_class) {
    j["per_class"].push_back({{"class", c.class_index},
                              {"edges", c.edge_count},
                              {"wSz", c.values.wSz.to_string()},
                              {"wPI_v", c.values.wPI_v.to_string()},
                              {"wSz_e", c.values.wSz_e.to_string()},
                              {"wPI", c.values.wPI.to_string()}});
  }
  if (r.nonstandard_region) j["nonstandard_region"] = true;
  return j;
}

inline IndexReport report_from_json(const nlohmann::ordered_json& j) {
  IndexReport r;
  const std::string method = j.at("method").get<std::string>();
  if (method == "cut") r.method = Method::cut;
  else if (method == "direct") r.method = Method::direct;
  else if (method == "formula") r.method = Method::formula;
  else throw std::invalid_argument("unknown method '" + method + "'");
  r.starred = j.at("starred").get<bool>();
  auto values = [](const nlohmann::ordered_json& o) {
    return IndexValues{Exact::parse(o.at("wSz").get<std::string>()),
                       Exact::parse(o.at("wPI_v").get<std::string>()),
                       Exact::parse(o.at("wSz_e").get<std::string>()),
                       Exact::parse(o.at("wPI").get<std::string>())};
  };
  r.totals = values(j);
  for (const auto& c : j.at("per_class")) {
    r.per_class.push_back(
        {c.at("class").get<std::size_t>(), c.at("edges").get<std::size_t>(), values(c)});
  }
  r.nonstandard_region = j.value("nonstandard_region", false);
  return r;
}

inline void write_text(std::ostream& out, const IndexReport& r) {
  const char* star = r.starred ? "*" : "";
  out << "method " << to_string(r.method) << '\n'
      << "wSz" << star << ' ' << r.totals.wSz << '\n'
      << "wPI_v" << star << ' ' << r.totals.wPI_v << '\n'
      << "wSz_e" << star << ' ' << r.totals.wSz_e << '\n'
      << "wPI" << star << ' ' << r.totals.wPI << '\n';
  for (const auto& c : r.per_class) {
    out << "class " << c.class_index << " edges " << c.edge_count << ' ' << c.values.wSz << ' '
        << c.values.wPI_v << ' ' << c.values.wSz_e << ' ' << c.values.wPI << '\n';
  }
  if (r.nonstandard_region) out << "nonstandard_region\n";
}

}  // namespace szeged
