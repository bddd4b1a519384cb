#include "json.hpp"

#include "tenscert/courant.hpp"
#include "tenscert/errors.hpp"
#include "tenscert/io.hpp"

namespace tenscert::courant {

namespace {

using json = nlohmann::json;

std::vector<Scalar> parse_all(const Chart& chart, const std::vector<std::string>& src) {
  std::vector<Scalar> out;
  out.reserve(src.size());
  for (const auto& s : src) out.push_back(io::parse_polynomial(s, chart.vars()));
  return out;
}

std::vector<Scalar> zeros(const Chart& chart) {
  return std::vector<Scalar>(static_cast<std::size_t>(chart.dim() * chart.dim()), chart.zero());
}

std::vector<Scalar> transpose(const Chart& chart, const std::vector<Scalar>& m) {
  const int n = chart.dim();
  std::vector<Scalar> out = m;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      out[static_cast<std::size_t>(r * n + c)] = m[static_cast<std::size_t>(c * n + r)];
  return out;
}

std::vector<Scalar> negate(std::vector<Scalar> m) {
  for (auto& e : m) e *= Rational(-1);
  return m;
}

/// [[A, 0], [0, ±Aᵀ]]: symmetric for +, skew for -.
Endomorphism tangent_lift(const Chart& chart, const std::vector<std::string>& a, int sign) {
  const auto A = parse_all(chart, a);
  const auto At = transpose(chart, A);
  return Endomorphism::blocks(chart, A, zeros(chart), zeros(chart), sign > 0 ? At : negate(At));
}

/// [[0, B], [C, 0]].
Endomorphism off_diagonal(const Chart& chart, const std::vector<std::string>& b,
                          const std::vector<std::string>& c) {
  return Endomorphism::blocks(chart, zeros(chart), parse_all(chart, b), parse_all(chart, c),
                              zeros(chart));
}

/// [[diag(λ), 0], [0, ±diag(λ)]].
Endomorphism diagonal(const Chart& chart, const std::vector<std::string>& lambda, int sign) {
  const int n = chart.dim();
  std::vector<std::string> a(static_cast<std::size_t>(n * n), "0");
  for (int k = 0; k < n; ++k) a[static_cast<std::size_t>(k * n + k)] = lambda[static_cast<std::size_t>(k)];
  return tangent_lift(chart, a, sign);
}

Endomorphism scaled(const Chart& chart, const std::string& c) {
  return Endomorphism::scalar(chart, io::parse_polynomial(c, chart.vars()));
}

FleetEntry entry(std::string name, const Chart& chart, std::vector<Endomorphism> members,
                 const std::string& sig) {
  return {std::move(name), CommutingFamily(chart, std::move(members), Signature::parse(sig))};
}

}  // namespace

std::vector<FleetEntry> builtin_fleet() {
  std::vector<FleetEntry> fleet;
  const Chart c1(1), c2(2), c3(3);

  // Zero families.
  fleet.push_back(entry("zero-n1", c1, {Endomorphism::zero(c1)}, "+"));
  fleet.push_back(entry("zero-pair-n2", c2, {Endomorphism::zero(c2), Endomorphism::zero(c2)}, "+-"));
  fleet.push_back(entry("zero-triple-n3", c3,
                        {Endomorphism::zero(c3), Endomorphism::zero(c3), Endomorphism::zero(c3)},
                        "-+-"));

  // Scaled identities.
  fleet.push_back(entry("scaled-identity-n1", c1, {scaled(c1, "2"), scaled(c1, "-1/3")}, "++"));
  fleet.push_back(entry("scaled-identity-n2", c2,
                        {scaled(c2, "1"), scaled(c2, "2"), scaled(c2, "u2")}, "+++"));
  fleet.push_back(entry("scaled-identity-n3", c3, {scaled(c3, "u1+u2")}, "+"));

  // Chart dimension 1.
  fleet.push_back(entry("diagonal-n1", c1, {diagonal(c1, {"u1"}, 1)}, "+"));
  fleet.push_back(entry("diagonal-skew-n1", c1, {diagonal(c1, {"u1"}, -1)}, "-"));
  fleet.push_back(entry("metric-n1", c1, {off_diagonal(c1, {"1"}, {"1"})}, "+"));
  fleet.push_back(entry("mixed-n1", c1,
                        {diagonal(c1, {"u1"}, 1), diagonal(c1, {"1"}, -1)}, "+-"));
  fleet.push_back(entry("triple-symmetric-n1", c1,
                        {scaled(c1, "1"), scaled(c1, "u1"), off_diagonal(c1, {"1"}, {"1"})},
                        "+++"));
  fleet.push_back(entry("triple-mixed-n1", c1,
                        {diagonal(c1, {"1"}, -1), diagonal(c1, {"u1"}, -1), scaled(c1, "1")},
                        "--+"));

  // Constant generalized almost complex structures on R^2.
  const Endomorphism symplectic = off_diagonal(c2, {"0", "1", "-1", "0"}, {"0", "1", "-1", "0"});
  const Endomorphism complex = tangent_lift(c2, {"0", "-1", "1", "0"}, -1);
  fleet.push_back(entry("gacs-symplectic-n2", c2, {symplectic}, "-"));
  fleet.push_back(entry("gacs-complex-n2", c2, {complex}, "-"));
  fleet.push_back(entry("generalized-kahler-n2", c2, {complex, symplectic}, "--"));
  fleet.push_back(entry("gacs-complex-nonconstant-n2", c2,
                        {tangent_lift(c2, {"u1", "-1-u1^2", "1", "-u1"}, -1)}, "-"));
  fleet.push_back(entry("generalized-metric-n2", c2,
                        {off_diagonal(c2, {"1", "0", "0", "1/2"}, {"1", "0", "0", "2"})}, "+"));

  // Entries linear in u: A_i in the commutative algebra generated by a
  // nilpotent Jordan block.
  const std::vector<std::string> a1 = {"u1", "1", "0", "u1"};
  const std::vector<std::string> a2 = {"1", "u2", "0", "1"};
  const std::vector<std::string> a3 = {"u2", "u1", "0", "u2"};
  fleet.push_back(entry("linear-skew-pair-n2", c2,
                        {tangent_lift(c2, a1, -1), tangent_lift(c2, a2, -1)}, "--"));
  fleet.push_back(entry("linear-mixed-pair-n2", c2,
                        {tangent_lift(c2, a1, 1), tangent_lift(c2, a2, -1)}, "+-"));
  fleet.push_back(entry("linear-symmetric-pair-n2", c2,
                        {tangent_lift(c2, a1, 1), tangent_lift(c2, a2, 1)}, "++"));
  fleet.push_back(entry("linear-triple-n2", c2,
                        {tangent_lift(c2, a1, 1), tangent_lift(c2, a2, -1), tangent_lift(c2, a3, 1)},
                        "+-+"));
  fleet.push_back(entry("form-valued-pair-n2", c2,
                        {Endomorphism::blocks(c2, zeros(c2), zeros(c2),
                                              parse_all(c2, {"u1", "u2", "u2", "1"}), zeros(c2)),
                         Endomorphism::blocks(c2, zeros(c2), zeros(c2),
                                              parse_all(c2, {"0", "u1", "-u1", "0"}), zeros(c2))},
                        "+-"));
  fleet.push_back(entry("diagonal-triple-n2", c2,
                        {diagonal(c2, {"1", "2"}, 1), diagonal(c2, {"u1", "0"}, 1),
                         diagonal(c2, {"3", "-1"}, -1)},
                        "++-"));

  // Chart dimension 3.
  fleet.push_back(entry("diagonal-triple-n3", c3,
                        {diagonal(c3, {"1", "0", "2"}, 1), diagonal(c3, {"u1", "1", "0"}, -1),
                         diagonal(c3, {"0", "u3", "1"}, 1)},
                        "+-+"));
  const std::vector<std::string> b1 = {"u1", "1", "0", "0", "u1", "1", "0", "0", "u1"};
  const std::vector<std::string> b2 = {"1", "u2", "1", "0", "1", "u2", "0", "0", "1"};
  const std::vector<std::string> b3 = {"0", "u3", "0", "0", "0", "u3", "0", "0", "0"};
  fleet.push_back(entry("linear-triple-n3", c3,
                        {tangent_lift(c3, b1, -1), tangent_lift(c3, b2, 1), tangent_lift(c3, b3, -1)},
                        "-+-"));
  const Endomorphism metric3 =
      off_diagonal(c3, {"1", "0", "0", "0", "1/2", "0", "0", "0", "1/3"},
                   {"1", "0", "0", "0", "2", "0", "0", "0", "3"});
  fleet.push_back(entry("generalized-metric-pair-n3", c3, {metric3, scaled(c3, "u3")}, "++"));
  return fleet;
}

std::string dump_family(const FleetEntry& e) {
  json j;
  j["name"] = e.name;
  j["dim"] = e.family.chart().dim();
  j["signature"] = e.family.signature().entries();
  json mats = json::array();
  for (const auto& m : e.family.members()) {
    json row = json::array();
    for (const auto& s : m.entries()) row.push_back(io::render_polynomial(s));
    mats.push_back(std::move(row));
  }
  j["matrices"] = std::move(mats);
  return j.dump();
}

namespace {

FleetEntry family_from_json(const json& j) {
  try {
    const int n = j.at("dim").get<int>();
    const Chart chart(n);
    std::vector<Endomorphism> members;
    for (const auto& row : j.at("matrices"))
      members.emplace_back(chart, parse_all(chart, row.get<std::vector<std::string>>()));
    return {j.value("name", std::string()),
            CommutingFamily(chart, std::move(members),
                            Signature(j.at("signature").get<std::vector<int>>()))};
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed family fixture: ") + ex.what());
  }
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& ex) {
    throw ConfigError(std::string("malformed fixture JSON: ") + ex.what());
  }
}

}  // namespace

FleetEntry load_family(const std::string& json_text) { return family_from_json(parse_json(json_text)); }

std::string dump_fleet(const std::vector<FleetEntry>& fleet) {
  json arr = json::array();
  for (const auto& e : fleet) arr.push_back(json::parse(dump_family(e)));
  return arr.dump(1);
}

std::vector<FleetEntry> load_fleet(const std::string& json_text) {
  const json j = parse_json(json_text);
  std::vector<FleetEntry> out;
  if (!j.is_array()) {
    out.push_back(family_from_json(j));
    return out;
  }
  for (const auto& e : j) out.push_back(family_from_json(e));
  return out;
}

Scalar random_scalar(std::mt19937_64& rng, const Chart& chart, int terms, int max_exp) {
  std::uniform_int_distribution<int> ex(0, max_exp);
  std::uniform_int_distribution<int> co(-3, 3);
  algebra::TermList out;
  for (int k = 0; k < terms; ++k) {
    algebra::Monomial m;
    for (int i = 1; i <= chart.dim(); ++i) m.set(chart.vars().u(i), ex(rng));
    out.push_back({m, Rational(co(rng))});
  }
  return Scalar::from_terms(chart.vars(), std::move(out));
}

Section random_section(std::mt19937_64& rng, const Chart& chart, int terms, int max_exp) {
  Section s = Section::zero(chart);
  for (auto& c : s.vec) c = random_scalar(rng, chart, terms, max_exp);
  for (auto& c : s.form) c = random_scalar(rng, chart, terms, max_exp);
  return s;
}

}  // namespace tenscert::courant
