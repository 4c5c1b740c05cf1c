#include "ortho/z2z4.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "ortho/error.hpp"

namespace ortho::z2z4 {

namespace {

// Words in a, x, θ(x) that label the seven non-identity elements.
enum class Term { a, ax, axt, xt, at, x, t };

using Template = std::vector<std::vector<Term>>;

struct Terms {
  std::array<Element, 7> value;
  Element operator[](Term term) const { return value[static_cast<std::size_t>(term)]; }
};

Terms evaluate(const FiniteGroup& g, const CycleForm& cf) {
  const Element ax = g.mul(cf.a, cf.x);
  return Terms{{cf.a, ax, g.mul(ax, cf.theta_x), g.mul(cf.x, cf.theta_x), g.mul(cf.a, cf.theta_x),
                cf.x, cf.theta_x}};
}

GroupMap instantiate(const FiniteGroup& g, const Terms& terms, const Template& cycles) {
  std::vector<std::vector<Element>> concrete;
  for (const auto& cycle : cycles) {
    auto& out = concrete.emplace_back();
    for (Term term : cycle) out.push_back(terms[term]);
  }
  return GroupMap::from_cycles(g.order(), concrete);
}

using enum Term;

const Template& form_template(Form form) {
  static const Template kI{{a, ax, axt, xt, at, x, t}};
  static const Template kII{{a, ax, axt, xt}, {t, at, x}};
  static const Template kIII{{a, ax, axt, x, t}, {at, xt}};
  static const Template kIV{{a, ax, axt, x, t, at, xt}};
  switch (form) {
    case Form::I: return kI;
    case Form::II: return kII;
    case Form::III: return kIII;
    case Form::IV: return kIV;
  }
  throw std::logic_error("unknown form");
}

// Partner templates per table row, in row order 1..6.
const std::array<std::pair<Template, Template>, 6>& partner_templates() {
  static const std::array<std::pair<Template, Template>, 6> kRows{{
      {{{at, axt, a, t}, {x, xt, ax}}, {{axt, at, ax, t}, {x, xt, a}}},
      {{{at, axt, a, x, xt}, {ax, t}}, {{axt, at, ax, x, xt}, {a, t}}},
      {{{at, axt, a, x, xt}, {ax, t}}, {{axt, at, ax, x, xt}, {a, t}}},
      {{{at, axt, a, t, ax, x, xt}}, {{axt, at, ax, t, a, x, xt}}},
      {{{at, axt, a, t}, {ax, x, xt}}, {{axt, at, ax, t}, {a, x, xt}}},
      {{{at, axt, a, x, xt, ax, t}}, {{axt, at, ax, x, xt, a, t}}},
  }};
  return kRows;
}

constexpr std::array<Form, 4> kForms{Form::I, Form::II, Form::III, Form::IV};

void require_z2xz4(const FiniteGroup& g) {
  if (!is_z2xz4(g)) throw std::invalid_argument("group is not Z2 x Z4");
}

}  // namespace

std::string_view form_name(Form form) {
  switch (form) {
    case Form::I: return "I";
    case Form::II: return "II";
    case Form::III: return "III";
    case Form::IV: return "IV";
  }
  return "?";
}

bool is_z2xz4(const FiniteGroup& g) {
  return g.order() == 8 && g.elements_of_order(2).size() == 3 &&
         g.elements_of_order(4).size() == 4 && g.is_abelian();
}

GroupPtr make_group() {
  static const GroupPtr kGroup =
      std::make_shared<const FiniteGroup>(direct_product(build_cyclic(2), build_cyclic(4)));
  return kGroup;
}

CycleForm parameters(const Orthomorphism& theta) {
  require_z2xz4(theta.group());
  const OrderPartition p = order_partition(theta);
  if (p.a22.size() != 1)
    throw VerificationFailure("PROP1", "expected one order-2 element with order-2 image, found " +
                                           std::to_string(p.a22.size()));
  std::vector<Element> candidates;
  for (Element y : p.a44) {
    const bool is_image = std::any_of(p.a44.begin(), p.a44.end(), [&](Element z) { return theta(z) == y; });
    if (!is_image) candidates.push_back(y);
  }
  if (candidates.size() != 1)
    throw VerificationFailure("PROP1", "A44 \\ theta(A44) has " + std::to_string(candidates.size()) +
                                           " elements for " + cycle_notation(theta.group(), theta.map()));
  const Element x = p.a22.front();
  return CycleForm{Form::I, candidates.front(), x, theta(x)};
}

Orthomorphism construct_form(const GroupPtr& g, const CycleForm& cf) {
  require_z2xz4(*g);
  const std::size_t n = g->order();
  if (cf.a >= n || cf.x >= n || cf.theta_x >= n)
    throw std::invalid_argument("template parameter out of range");
  if (g->element_order(cf.a) != 4) throw std::invalid_argument("a must have order 4");
  if (g->element_order(cf.x) != 2) throw std::invalid_argument("x must have order 2");
  if (g->element_order(cf.theta_x) != 2) throw std::invalid_argument("theta(x) must have order 2");
  if (cf.x == cf.theta_x) throw std::invalid_argument("x and theta(x) must differ");

  const bool on_square = g->mul(cf.x, cf.theta_x) == g->mul(cf.a, cf.a);
  const bool needs_square = cf.form == Form::I || cf.form == Form::IV;
  if (needs_square && !on_square)
    throw std::invalid_argument("form " + std::string(form_name(cf.form)) +
                                " requires x*theta(x) == a^2");
  if (!needs_square && on_square)
    throw std::invalid_argument("form " + std::string(form_name(cf.form)) +
                                " requires x*theta(x) != a^2");

  return Orthomorphism(g, instantiate(*g, evaluate(*g, cf), form_template(cf.form)));
}

CycleForm classify_form(const Orthomorphism& theta) {
  CycleForm cf = parameters(theta);
  const Terms terms = evaluate(theta.group(), cf);
  std::vector<Form> matches;
  for (Form form : kForms)
    if (instantiate(theta.group(), terms, form_template(form)) == theta.map()) matches.push_back(form);
  if (matches.size() != 1)
    throw VerificationFailure("THM1", std::to_string(matches.size()) + " templates match " +
                                          cycle_notation(theta.group(), theta.map()));
  cf.form = matches.front();
  return cf;
}

std::size_t a44_overlap(const Orthomorphism& t1, const Orthomorphism& t2) {
  const auto p = order_partition(t1).a44;
  const auto q = order_partition(t2).a44;
  std::vector<Element> both;
  std::set_intersection(p.begin(), p.end(), q.begin(), q.end(), std::back_inserter(both));
  return both.size();
}

bool intersection_adjacency(const Orthomorphism& t1, const Orthomorphism& t2) {
  if (t1 == t2) throw std::invalid_argument("intersection adjacency compares distinct vertices");
  require_z2xz4(t1.group());
  return a44_overlap(t1, t2) == 0;
}

int table_row(const Orthomorphism& theta, const CycleForm& cf) {
  const FiniteGroup& g = theta.group();
  const Element square = g.mul(cf.a, cf.a);
  switch (cf.form) {
    case Form::I: return 1;
    case Form::IV: return 2;
    case Form::II:
    case Form::III: {
      const int base = cf.form == Form::II ? 3 : 5;
      if (cf.x == square) return base;
      if (cf.theta_x == square) return base + 1;
      break;
    }
  }
  throw VerificationFailure("TAB1", "no partner row for " + cycle_notation(g, theta.map()));
}

std::pair<Orthomorphism, Orthomorphism> predicted_partners(const Orthomorphism& theta) {
  const CycleForm cf = classify_form(theta);
  const int row = table_row(theta, cf);
  const std::string id = "TAB1-ROW" + std::to_string(row);
  const FiniteGroup& g = theta.group();
  const Terms terms = evaluate(g, cf);
  const auto& [first, second] = partner_templates()[static_cast<std::size_t>(row - 1)];

  auto make = [&](const Template& tmpl) {
    GroupMap m = instantiate(g, terms, tmpl);
    if (auto why = orthomorphism_violation(g, m))
      throw VerificationFailure(id, "partner " + cycle_notation(g, m) + ": " + *why);
    Orthomorphism psi(theta.group_ptr(), std::move(m));
    if (!are_orthogonal(theta, psi))
      throw VerificationFailure(id, "partner " + cycle_notation(g, psi.map()) + " is not orthogonal to " +
                                        cycle_notation(g, theta.map()));
    return psi;
  };
  auto psi1 = make(first);
  auto psi2 = make(second);
  if (psi1 == psi2) throw VerificationFailure(id, "partners coincide");
  return {std::move(psi1), std::move(psi2)};
}

GroupMap alpha_of(const Orthomorphism& theta) {
  const CycleForm cf = classify_form(theta);
  const FiniteGroup& g = theta.group();
  const Terms terms = evaluate(g, cf);
  GroupMap alpha = GroupMap::from_cycles(g.order(), {{terms[a], terms[ax]}, {terms[axt], terms[at]}});
  if (!is_automorphism(g, alpha))
    throw VerificationFailure("COR4-ALPHA", "alpha is not an automorphism for " + cycle_notation(g, theta.map()));
  if (compose(alpha, alpha) != GroupMap::identity(g.order()))
    throw VerificationFailure("COR4-ALPHA", "alpha is not an involution");
  return alpha;
}

std::array<Orthomorphism, 4> four_cycle_of(const Orthomorphism& theta) {
  auto [psi1, psi2] = predicted_partners(theta);
  Orthomorphism antipode = homology(alpha_of(theta), theta);
  std::array<Orthomorphism, 4> cycle{theta, std::move(psi1), std::move(antipode), std::move(psi2)};

  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (cycle[i] == cycle[j]) throw VerificationFailure("COR4-CYCLE", "vertices are not distinct");
      const bool consecutive = j == i + 1 || (i == 0 && j == 3);
      if (are_orthogonal(cycle[i], cycle[j]) != consecutive)
        throw VerificationFailure("COR4-CYCLE", "positions " + std::to_string(i) + "," + std::to_string(j) +
                                                    " break the 4-cycle of " +
                                                    cycle_notation(theta.group(), theta.map()));
    }
  return cycle;
}

}  // namespace ortho::z2z4
