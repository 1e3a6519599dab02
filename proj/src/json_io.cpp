#include "hopfoid/json_io.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace hopfoid {

Json to_json(const Scalar& s, const CycloField* field) {
  if (field) return s.to_strings(*field);
  if (!s.is_rational()) throw std::invalid_argument("irrational scalar needs a field to serialize");
  return Json::array({s.coeff(0).str()});
}

Scalar scalar_from_json(const Json& j, const CycloField* field) {
  const auto coords = j.get<std::vector<std::string>>();
  if (field) return CycloScalar::from_strings(*field, coords);
  if (coords.size() != 1) throw std::invalid_argument("rational scalar must have one coordinate");
  return Scalar(Rational::parse(coords[0]));
}

Json to_json(const Vec& v, const CycloField* field) {
  Json out = Json::array();
  for (const auto& [i, c] : v.terms()) out.push_back(Json::array({i, to_json(c, field)}));
  return out;
}

Vec vec_from_json(const Json& j, const CycloField* field) {
  std::vector<Vec::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<Index>(), scalar_from_json(t.at(1), field));
  return Vec::from_terms(std::move(terms));
}

Json to_json(const LinearMap& m, const CycloField* field) {
  Json cols = Json::array();
  for (Index j = 0; j < m.cols(); ++j)
    if (!m.column(j).is_zero()) cols.push_back(Json::array({j, to_json(m.column(j), field)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"columns", std::move(cols)}};
}

LinearMap linear_map_from_json(const Json& j, const CycloField* field) {
  std::vector<Vec> cols(j.at("cols").get<std::size_t>());
  for (const auto& c : j.at("columns")) cols.at(c.at(0).get<std::size_t>()) = vec_from_json(c.at(1), field);
  return LinearMap(j.at("rows").get<std::size_t>(), std::move(cols));
}

Json to_json(const StructAlgebra& a, const CycloField* field) {
  Json mult = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = 0; j < a.dim(); ++j)
      if (!a.product(i, j).is_zero()) mult.push_back(Json::array({i, j, to_json(a.product(i, j), field)}));
  Json labels = Json::array();
  for (Index i = 0; i < a.dim(); ++i) labels.push_back(a.label(i));
  return Json{{"dim", a.dim()}, {"unit", to_json(a.unit(), field)}, {"mult", std::move(mult)}, {"labels", std::move(labels)}};
}

StructAlgebra algebra_from_json(const Json& j, const CycloField* field) {
  const auto n = j.at("dim").get<std::size_t>();
  std::vector<Vec> table(n * n);
  for (const auto& e : j.at("mult")) {
    const auto i = e.at(0).get<std::size_t>(), k = e.at(1).get<std::size_t>();
    if (i >= n || k >= n) throw std::invalid_argument("product index out of range");
    table[i * n + k] = vec_from_json(e.at(2), field);
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return StructAlgebra(std::move(table), vec_from_json(j.at("unit"), field), std::move(labels));
}

Json to_json(const HopfAlgebra& h, const CycloField* field) {
  Json out = to_json(h.alg(), field);
  out["coproduct"] = to_json(h.coproduct(), field);
  out["counit"] = to_json(h.counit(), field);
  out["antipode"] = to_json(h.antipode(), field);
  return out;
}

Json to_json(const VerificationReport& r, bool with_timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks()) {
    Json e{{"check_id", c.id}, {"description", c.description}, {"paper_ref", c.formula}, {"status", to_string(c.status)}};
    if (c.witness) e["witness"] = Json{{"indices", c.witness->indices}, {"labels", c.witness->labels}, {"note", c.witness->note}};
    if (with_timing) e["timing_ms"] = c.timing_ms;
    checks.push_back(std::move(e));
  }
  Json ledger = Json::array();
  for (const auto& e : r.ledger())
    ledger.push_back(Json{{"formula_id", e.formula_id}, {"printed", e.printed}, {"computed", e.computed}, {"verdict", e.verdict}});
  Json summary{{"pass", r.count(Status::pass)}, {"fail", r.count(Status::fail)}, {"skipped", r.count(Status::skipped)}};
  return Json{{"summary", std::move(summary)}, {"checks", std::move(checks)}, {"paper_discrepancies", std::move(ledger)}};
}

std::string to_text(const VerificationReport& r, bool with_timing) {
  std::ostringstream os;
  for (const auto& c : r.checks()) {
    os << std::left << std::setw(8) << to_string(c.status) << c.id;
    if (with_timing) os << "  (" << std::fixed << std::setprecision(1) << c.timing_ms << " ms)";
    os << "\n";
    if (c.witness) os << "        " << c.witness->note << "\n";
  }
  if (!r.ledger().empty()) {
    os << "\nprinted formulas:\n";
    for (const auto& e : r.ledger()) {
      os << std::left << std::setw(8) << (e.verdict == "pass" ? "pass" : "note") << e.formula_id << ": " << e.printed << "\n";
      if (e.verdict != "pass") os << "        " << e.verdict << "; " << e.computed << "\n";
    }
  }
  os << "\n" << r.count(Status::pass) << " passed, " << r.count(Status::fail) << " failed, " << r.count(Status::skipped)
     << " skipped\n";
  return os.str();
}

}  // namespace hopfoid
