#include "invtrace/serialize.hpp"

#include "invtrace/errors.hpp"

namespace invtrace {

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json e = Json::array();
    for (int i = 0; i < p.nvars(); ++i) e.push_back(m[i]);
    terms.push_back(Json::array({e, to_pq(c)}));
  }
  return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j) {
  try {
    int n = j.at("nvars").get<int>();
    if (n < 0 || n > kMaxVars) throw InvalidInput("polynomial JSON: bad variable count");
    Polynomial p(n);
    for (const auto& t : j.at("terms")) {
      const auto& e = t.at(0);
      if (static_cast<int>(e.size()) != n) throw InvalidInput("polynomial JSON: bad exponent vector");
      Monomial m;
      for (int i = 0; i < n; ++i) m[i] = e.at(i).get<int>();
      p.add_term(m, parse_q(t.at(1).get<std::string>()));
    }
    return p;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidInput(std::string("polynomial JSON: ") + ex.what());
  }
}

Json upoly_to_json(const UPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_pq(c));
  return a;
}

UPoly upoly_from_json(const Json& j) {
  std::vector<Q> c;
  for (const auto& x : j) c.push_back(parse_q(x.get<std::string>()));
  return UPoly(c);
}

}  // namespace invtrace
