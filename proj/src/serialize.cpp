#include "qcva/serialize.hpp"

#include <stdexcept>

namespace qcva {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field '") + name + "'");
  return j.at(name);
}

long as_long(const nlohmann::json& j) {
  if (!j.is_number_integer()) throw std::invalid_argument("expected an integer, got " + j.dump());
  return j.get<long>();
}

template <typename Key>
nlohmann::json state_to_json(const SparseVector<Key>& s, auto key_parts) {
  auto arr = nlohmann::json::array();
  for (const auto& [k, c] : s) {
    auto [mono, top] = key_parts(k);
    arr.push_back({{"mono", to_json(mono)}, {"top", top}, {"coeff", to_json(c)}});
  }
  return arr;
}

}  // namespace

nlohmann::json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

nlohmann::json to_json(const RatMatrix& m) {
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (const auto& x : m.row(r)) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<RatVector> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument("matrix row must be an array");
    RatVector v;
    for (const auto& x : row) v.push_back(rational_from_json(x));
    rows.push_back(std::move(v));
  }
  return RatMatrix::from_rows(rows);
}

nlohmann::json to_json(const Monomial& m) {
  auto arr = nlohmann::json::array();
  for (const auto& f : m.factors()) arr.push_back({f.color, f.tpow, f.mode});
  return arr;
}

Monomial monomial_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("monomial must be an array of [i,j,n]");
  std::vector<Factor> fs;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3) throw std::invalid_argument("monomial factor must be [i,j,n]");
    fs.push_back({static_cast<int>(as_long(t[0])), static_cast<int>(as_long(t[1])), static_cast<int>(as_long(t[2]))});
  }
  return Monomial(std::move(fs));
}

nlohmann::json to_json(const FockState& s) {
  return state_to_json(s, [](const Monomial& m) { return std::pair<const Monomial&, std::size_t>(m, 0); });
}

nlohmann::json to_json(const ModuleState& s) {
  return state_to_json(s, [](const ModuleKey& k) { return std::pair<const Monomial&, std::size_t>(k.mono, k.top); });
}

ModuleState module_state_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("state must be an array of terms");
  ModuleState s;
  for (const auto& t : j) {
    const long top = t.contains("top") ? as_long(t.at("top")) : 0;
    if (top < 0) throw std::invalid_argument("top index must be nonnegative");
    s.add({monomial_from_json(field(t, "mono")), static_cast<std::size_t>(top)}, rational_from_json(field(t, "coeff")));
  }
  return s;
}

FockState fock_state_from_json(const nlohmann::json& j) { return as_fock_state(module_state_from_json(j)); }

nlohmann::json to_json(const ModuleSpec& spec) {
  nlohmann::json lambda = nlohmann::json::array();
  for (const auto& x : spec.lambda()) lambda.push_back(to_json(x));
  nlohmann::json hs = nlohmann::json::array();
  for (const auto& h : spec.hs()) hs.push_back(to_json(h));
  return {{"kind", spec.kind() == ModuleKind::Adjoint ? "adjoint" : "evaluation"},
          {"d", spec.d()},
          {"l", to_json(spec.level())},
          {"c", to_json(spec.c())},
          {"lambda", lambda},
          {"H", hs}};
}

ModuleSpec module_spec_from_json(const nlohmann::json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const Rational l = rational_from_json(field(j, "l"));
  if (kind == "adjoint") return ModuleSpec::adjoint(static_cast<int>(as_long(field(j, "d"))), l);
  if (kind != "evaluation") throw std::invalid_argument("unknown module kind '" + kind + "'");
  const Rational c = j.contains("c") ? rational_from_json(j.at("c")) : Rational(0);
  RatVector lambda;
  for (const auto& x : field(j, "lambda")) lambda.push_back(rational_from_json(x));
  if (j.contains("d") && as_long(j.at("d")) != static_cast<long>(lambda.size()))
    throw std::invalid_argument("d does not match the length of lambda");
  if (!j.contains("H")) return ModuleSpec::evaluation(l, c, lambda);
  std::vector<RatMatrix> hs;
  for (const auto& h : j.at("H")) hs.push_back(matrix_from_json(h));
  return ModuleSpec::generalized(l, c, lambda, std::move(hs));
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json ce = nullptr;
  if (r.counterexample)
    ce = {{"input", to_json(r.counterexample->input)},
          {"defect", to_json(r.counterexample->defect)},
          {"config", r.counterexample->config}};
  return {{"identity", r.identity},
          {"params", r.params},
          {"states_checked", r.states_checked},
          {"configs_checked", r.configs_checked},
          {"configs_skipped", r.configs_skipped},
          {"truncated", r.truncated},
          {"defect_zero", r.defect_zero},
          {"max_abs_defect", to_json(r.max_abs_defect)},
          {"counterexample", ce}};
}

CheckReport check_report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.identity = field(j, "identity").get<std::string>();
  r.params = field(j, "params");
  r.states_checked = field(j, "states_checked").get<std::size_t>();
  r.configs_checked = j.value("configs_checked", std::size_t{0});
  r.configs_skipped = j.value("configs_skipped", std::size_t{0});
  r.truncated = j.value("truncated", false);
  r.defect_zero = field(j, "defect_zero").get<bool>();
  r.max_abs_defect = j.contains("max_abs_defect") ? rational_from_json(j.at("max_abs_defect")) : Rational(0);
  const auto& ce = field(j, "counterexample");
  if (!ce.is_null())
    r.counterexample = Counterexample{module_state_from_json(field(ce, "input")),
                                      module_state_from_json(field(ce, "defect")), ce.value("config", nlohmann::json())};
  return r;
}

}  // namespace qcva
