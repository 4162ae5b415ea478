#include "binomrep/cli/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace binomrep::cli {

namespace {

Nat nat_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw std::runtime_error(std::string("field '") + key + "' must be a decimal string");
  }
  try {
    return Nat::parse(j.at(key).get<std::string>());
  } catch (const PreconditionViolated&) {
    throw std::runtime_error(std::string("field '") + key + "' is not a natural number");
  }
}

std::uint64_t shift_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_unsigned()) {
    throw std::runtime_error(std::string("field '") + key + "' must be a positive integer");
  }
  return j.at(key).get<std::uint64_t>();
}

}  // namespace

Json coefficients_to_json(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coefficients()) arr.push_back(c.get_str());
  return arr;
}

Json to_json(const Solution& s) {
  return Json{{"a", s.shift.a()}, {"b", s.shift.b()},     {"x", s.x.str()},
              {"y", s.y.str()},   {"value", s.value.str()}, {"trivial", s.trivial}};
}

Json to_json(const MultiplicityRecord& r) {
  Json occ = Json::array();
  for (const auto& o : r.occurrences) occ.push_back(Json::array({o.n.str(), o.k.str()}));
  return Json{{"t", r.t.str()}, {"count", r.count}, {"occurrences", std::move(occ)}};
}

Json to_json(const Interval& iv) {
  return Json{{"lo", to_fraction(iv.lo)}, {"hi", to_fraction(iv.hi)}, {"width", to_fraction(iv.width())}};
}

Json to_json(const Certificate& c) {
  Json affine = Json::array();
  for (const auto& ev : c.affine.evidence) {
    affine.push_back(Json{{"eliminated", std::string(1, var_name(ev.eliminated))},
                          {"resultant_with_fx", coefficients_to_json(ev.with_fx)},
                          {"resultant_with_fy", coefficients_to_json(ev.with_fy)},
                          {"gcd", coefficients_to_json(ev.common)}});
  }
  Json forms = Json::array();
  for (const auto& f : c.infinity.forms) forms.push_back(coefficients_to_json(f));
  Json infinity{{"forms", std::move(forms)},
                {"gcd", coefficients_to_json(c.infinity.common)},
                {"vanish_at_1_0", c.infinity.vanish_at_x_axis_point},
                {"vanish_at_0_1", c.infinity.vanish_at_y_axis_point}};
  return Json{{"a", c.shift.a()},
              {"b", c.shift.b()},
              {"degree", c.degree},
              {"affine_nonsingular", std::string(to_string(c.affine.verdict))},
              {"affine_evidence", std::move(affine)},
              {"infinity_nonsingular", std::string(to_string(c.infinity.verdict))},
              {"infinity_evidence", std::move(infinity)},
              {"genus", c.genus ? Json(*c.genus) : Json(nullptr)},
              {"irreducible", c.irreducible},
              {"finiteness", std::string(to_string(c.finiteness))}};
}

Solution solution_from_json(const Json& j) {
  if (!j.is_object()) throw std::runtime_error("record is not a JSON object");
  const std::uint64_t a = shift_field(j, "a");
  const std::uint64_t b = shift_field(j, "b");
  if (a == 0 || b == 0) throw std::runtime_error("shift components must be >= 1");
  const ShiftPair shift(a, b);
  const Nat x = nat_field(j, "x");
  const Nat y = nat_field(j, "y");
  const Nat value = nat_field(j, "value");
  if (!j.contains("trivial") || !j.at("trivial").is_boolean()) {
    throw std::runtime_error("field 'trivial' must be a boolean");
  }
  const bool trivial = j.at("trivial").get<bool>();

  if (x < y) throw std::runtime_error("x < y is outside the solution domain");
  if (!equality_check(x, y, shift)) {
    throw std::runtime_error("(" + x.str() + ", " + y.str() + ") does not solve the equation");
  }
  Solution s = make_solution(shift, x, y);
  if (s.value != value) throw std::runtime_error("value " + value.str() + " != C(x,y) = " + s.value.str());
  if (s.trivial != trivial) throw std::runtime_error("trivial flag does not match value");
  return s;
}

std::string plot_csv(const std::vector<Branches>& branches) {
  std::ostringstream os;
  os << "y,x\n";
  for (const auto& row : branches) {
    const std::string y = to_decimal(row.y, 12);
    for (const auto& iv : row.x) os << y << ',' << to_decimal(iv.midpoint(), 12) << '\n';
  }
  return os.str();
}

}  // namespace binomrep::cli
