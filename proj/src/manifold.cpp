#include "facthom/manifold.hpp"

#include <algorithm>

namespace facthom {

namespace {

void require_module(const SidedModule& m, const AlgebraPtr& a, Side side, const std::string& name, const char* end) {
  if (m.algebra() != a && !(m.algebra() && *m.algebra() == *a))
    throw ManifoldError("module " + name + " is not a module over the interval's algebra");
  if (m.side() != side)
    throw ManifoldError(std::string("the ") + end + " end of an interval needs a " +
                        (side == Side::left ? "left" : "right") + " module, but " + name + " is a " +
                        (m.side() == Side::left ? "left" : "right") + " module");
}

void flatten_into(std::vector<ManifoldExpr>& out, ManifoldExpr e) {
  if (auto* d = std::get_if<Disjoint>(&e.node)) {
    for (auto& p : d->parts) flatten_into(out, std::move(p));
  } else {
    out.push_back(std::move(e));
  }
}

ChainComplex without_weights(const ChainComplex& c) {
  if (!c.space().weighted()) return c;
  GradedSpace s(false);
  for (const auto& [n, piece] : c.space().pieces())
    for (const auto& l : piece.labels) s.add(n, l);
  return ChainComplex(c.field(), std::move(s), c.differentials());
}

TruncationPolicy combine(const std::vector<TruncationPolicy>& parts, bool weighted) {
  TruncationPolicy out = parts.front();
  for (const auto& p : parts) {
    out.weight_exact = out.weight_exact && p.weight_exact;
    out.degree_exact = out.degree_exact && p.degree_exact;
    if (p.max_weight) out.max_weight = out.max_weight ? std::min(*out.max_weight, *p.max_weight) : *p.max_weight;
  }
  if (!weighted) {
    out.weight_exact = false;
    out.max_weight.reset();
  }
  return out;
}

bool module_weighted(const SidedModule& m) {
  return std::all_of(m.basis().begin(), m.basis().end(), [](const BasisElement& b) { return b.weight.has_value(); });
}

struct NodeValue {
  Evaluation eval;
  bool weighted = false;
};

NodeValue evaluate_node(const ManifoldExpr& e, int max_deg) {
  if (const auto* c = std::get_if<Circle>(&e.node)) {
    TruncationPolicy t = hochschild_truncation(*c->algebra, max_deg);
    return {{t.restrict(homology(hochschild_complex(*c->algebra, t))), t}, c->algebra->weighted()};
  }
  if (const auto* i = std::get_if<Interval>(&e.node))
    return {{balanced_tensor_homology(*i->left, *i->algebra, *i->right, max_deg),
             bar_truncation(*i->left, *i->algebra, *i->right, max_deg)},
            i->algebra->weighted() && module_weighted(*i->left) && module_weighted(*i->right)};
  const auto& d = std::get<Disjoint>(e.node);
  std::vector<TruncationPolicy> policies;
  std::vector<BettiTable> tables;
  bool weighted = true;
  for (const auto& part : d.parts) {
    NodeValue sub = evaluate_node(part, max_deg);
    weighted = weighted && sub.weighted;
    tables.push_back(std::move(sub.eval.table));
    policies.push_back(sub.eval.policy);
  }
  BettiTable acc = weighted ? BettiTable{{{0, 0}, 1}} : BettiTable{{{0, std::nullopt}, 1}};
  for (const auto& t : tables) acc = convolve(acc, weighted ? t : t.forget_weights());
  TruncationPolicy t = combine(policies, weighted);
  return {{t.restrict(acc), t}, weighted};
}

}  // namespace

ManifoldExpr ManifoldExpr::circle(std::string name, AlgebraPtr a) {
  if (!a) throw ManifoldError("circle without an algebra");
  return {Circle{std::move(name), std::move(a)}};
}

ManifoldExpr ManifoldExpr::interval(std::string name, AlgebraPtr a, std::string left_name, ModulePtr left,
                                    std::string right_name, ModulePtr right) {
  if (!a || !left || !right) throw ManifoldError("interval with a missing algebra or module");
  require_module(*left, a, Side::right, left_name, "left");
  require_module(*right, a, Side::left, right_name, "right");
  return {Interval{std::move(name), std::move(a), std::move(left_name), std::move(left), std::move(right_name),
                   std::move(right)}};
}

ManifoldExpr ManifoldExpr::disjoint(std::vector<ManifoldExpr> parts) {
  if (parts.empty()) throw ManifoldError("a disjoint union needs at least one part");
  std::vector<ManifoldExpr> flat;
  for (auto& p : parts) flatten_into(flat, std::move(p));
  if (flat.size() == 1) return std::move(flat.front());
  const Field& f = [&]() -> const Field& {
    if (const auto* c = std::get_if<Circle>(&flat.front().node)) return c->algebra->field();
    return std::get<Interval>(flat.front().node).algebra->field();
  }();
  for (const auto& p : flat) {
    const AlgebraPtr& a = std::holds_alternative<Circle>(p.node) ? std::get<Circle>(p.node).algebra
                                                                   : std::get<Interval>(p.node).algebra;
    if (!(a->field() == f)) throw ManifoldError("the parts of a disjoint union live over different fields");
  }
  return {Disjoint{std::move(flat)}};
}

std::vector<const ManifoldExpr*> ManifoldExpr::components() const {
  if (const auto* d = std::get_if<Disjoint>(&node)) {
    std::vector<const ManifoldExpr*> out;
    for (const auto& p : d->parts) out.push_back(&p);
    return out;
  }
  return {this};
}

std::string ManifoldExpr::describe() const {
  if (const auto* c = std::get_if<Circle>(&node)) return "circle " + c->algebra_name;
  if (const auto* i = std::get_if<Interval>(&node))
    return "interval " + i->algebra_name + " left=" + i->left_name + " right=" + i->right_name;
  std::string s = "disjoint(";
  const auto& parts = std::get<Disjoint>(node).parts;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : "") + parts[k].describe();
  return s + ")";
}

Evaluation evaluate(const ComputationRequest& req) {
  if (req.max_deg < 0) throw std::invalid_argument("maxdeg must be non-negative");
  return evaluate_node(req.expr, req.max_deg).eval;
}

ChainComplex evaluate_chains(const ManifoldExpr& expr, int max_deg) {
  if (const auto* c = std::get_if<Circle>(&expr.node))
    return hochschild_complex(*c->algebra, hochschild_truncation(*c->algebra, max_deg));
  if (const auto* i = std::get_if<Interval>(&expr.node)) {
    TruncationPolicy t = bar_truncation(*i->left, *i->algebra, *i->right, max_deg);
    if (bar_chain_count(*i->left, *i->algebra, *i->right, t) <= kBarChainLimit)
      return two_sided_bar(*i->left, *i->algebra, *i->right, t);
    return resolution_complex(*i->left, *i->algebra, *i->right, t);
  }
  const auto& parts = std::get<Disjoint>(expr.node).parts;
  std::vector<ChainComplex> chains;
  bool weighted = true;
  for (const auto& p : parts) {
    chains.push_back(evaluate_chains(p, max_deg));
    weighted = weighted && chains.back().space().weighted();
  }
  ChainComplex acc = weighted ? chains.front() : without_weights(chains.front());
  for (std::size_t k = 1; k < chains.size(); ++k)
    acc = tensor(acc, weighted ? chains[k] : without_weights(chains[k]));
  return acc;
}

std::pair<BettiTable, BettiTable> circle_two_ways(const AlgebraPtr& a, int max_deg) {
  BettiTable direct = hochschild_homology(*a, max_deg);
  auto env = std::make_shared<const GradedAlgebra>(tensor_algebras(*a, opposite(*a)));
  SidedModule right = bimodule_right(a, env);
  SidedModule left = bimodule_left(a, env);
  return {direct, balanced_tensor_homology(right, *env, left, max_deg)};
}

CheckReport excision_check(const AlgebraPtr& a, int max_deg) {
  auto [direct, glued] = circle_two_ways(a, max_deg);
  TruncationPolicy hh = hochschild_truncation(*a, max_deg);
  auto env = std::make_shared<const GradedAlgebra>(tensor_algebras(*a, opposite(*a)));
  TruncationPolicy bar = bar_truncation(bimodule_right(a, env), *env, bimodule_left(a, env), max_deg);
  auto common = [&](const BettiKey& k) { return hh.reportable(k) && bar.reportable(k); };
  CheckReport r;
  r.name = "excision";
  r.compare("cyclic bar against A (x)_{A (x) A^op} A, maxdeg " + std::to_string(max_deg), direct.filtered(common),
            glued.filtered(common));
  return r;
}

BettiTable ordinary_homology_check(const GradedSpace& v, const ManifoldExpr& shape) {
  const Field f = Field::rationals();
  BettiTable coefficients = dimension_table(v).forget_weights();
  BettiTable out;
  for (const ManifoldExpr* part : shape.components()) {
    GradedSpace cells;
    std::map<int, ExactMatrix> d;
    if (std::holds_alternative<Circle>(part->node)) {
      cells.add(0, "v");
      cells.add(1, "e");
      d.emplace(1, ExactMatrix(f, 1, 1));
    } else {
      cells.add(0, "v0");
      cells.add(0, "v1");
      cells.add(1, "e");
      d.emplace(1, ExactMatrix::from_rows(f, {{-1}, {1}}));
    }
    BettiTable h = homology(ChainComplex(f, std::move(cells), std::move(d)));
    for (const auto& [k, n] : convolve(h, coefficients).entries()) out.add(k, n);
  }
  return out;
}

}  // namespace facthom
