#include "rigidspace/topo_aut.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>

namespace rigidspace
{

namespace
{

void require_bounds(GraphKind kind, int n)
{
  int const bound = kind == GraphKind::simple ? kMaxSimpleDegree : kMaxDoubleDegree;
  if (n > bound)
    throw std::invalid_argument("automorphism closure limited to n <= " + std::to_string(bound) +
                                " for " + to_string(kind) + "-graphs");
}

} // namespace

FactorizedGraph::FactorizedGraph(GraphKind kind, int n, std::vector<std::vector<Node>> classes)
    : kind_(kind), n_(n), classes_(std::move(classes))
{
  auto const nodes = graph_nodes(kind, n);
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  lookup_.assign(static_cast<std::size_t>(2 * n + 1), unset);

  std::size_t covered = 0;
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (classes_[c].empty())
      throw std::invalid_argument("factorization has an empty class");
    for (Node node : classes_[c]) {
      if (std::find(nodes.begin(), nodes.end(), node) == nodes.end())
        throw std::invalid_argument("node " + std::to_string(node) + " is not in the " +
                                    to_string(kind) + "-graph of dimension " + std::to_string(n));
      auto &slot = lookup_[static_cast<std::size_t>(node + n)];
      if (slot != unset)
        throw std::invalid_argument("node " + std::to_string(node) + " appears in two classes");
      slot = c;
      ++covered;
    }
  }
  if (covered != nodes.size())
    throw std::invalid_argument("factorization classes do not cover the node set");
}

FactorizedGraph::FactorizedGraph(const InducedFactorization &f)
    : FactorizedGraph(f.kind, f.n, f.classes)
{}

FactorizedGraph FactorizedGraph::discrete(GraphKind kind, int n)
{
  std::vector<std::vector<Node>> classes;
  for (Node node : graph_nodes(kind, n))
    classes.push_back({node});
  return FactorizedGraph(kind, n, std::move(classes));
}

FactorizedGraph FactorizedGraph::axes(int n)
{
  std::vector<std::vector<Node>> classes{{0}};
  for (int i = 1; i <= n; ++i)
    classes.push_back({i, -i});
  return FactorizedGraph(GraphKind::double_, n, std::move(classes));
}

FactorizedGraph FactorizedGraph::one(GraphKind kind, int n)
{
  auto nodes = graph_nodes(kind, n);
  nodes.erase(nodes.begin());
  return FactorizedGraph(kind, n, {{0}, std::move(nodes)});
}

FactorizedGraph FactorizedGraph::blocks(const IntervalPartition &part)
{
  std::vector<std::vector<Node>> classes{{0}};
  for (int j = 0; j < part.block_count(); ++j) {
    std::vector<Node> cls;
    for (int i : part.rows(j)) {
      cls.push_back(i);
      cls.push_back(-i);
    }
    classes.push_back(std::move(cls));
  }
  return FactorizedGraph(GraphKind::double_, part.degree(), std::move(classes));
}

FactorizedGraph FactorizedGraph::point(GraphKind kind, int n)
{
  return FactorizedGraph(kind, n, {graph_nodes(kind, n)});
}

std::size_t FactorizedGraph::class_of(Node node) const
{
  if (node < -n_ || node > n_ || (kind_ == GraphKind::simple && node < 0))
    throw std::out_of_range("node outside graph");
  return lookup_[static_cast<std::size_t>(node + n_)];
}

bool MoveGenerator::reversible() const
{
  return type != Type::cycle3 && type != Type::cycle4;
}

std::vector<std::pair<Node, Node>> MoveGenerator::exchanged() const
{
  switch (type) {
  case Type::swap2: return {{i, j}};
  case Type::inversion: return {{i, -i}};
  case Type::signed_swap: return {{j, k}, {-j, -k}};
  case Type::anti_swap: return {{j, -k}, {-j, k}};
  case Type::cycle3:
  case Type::cycle4: return {};
  }
  return {};
}

std::vector<Node> MoveGenerator::touched() const
{
  switch (type) {
  case Type::swap2: return {i, j};
  case Type::cycle3: return {i, j, k};
  case Type::inversion: return {i, -i};
  case Type::signed_swap:
  case Type::anti_swap:
  case Type::cycle4: return {j, k, -j, -k};
  }
  return {};
}

ArrowPermutation MoveGenerator::as_permutation(int n) const
{
  std::vector<int> t(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x)
    t[static_cast<std::size_t>(x - 1)] = x;
  auto const set = [&](int from, int to) {
    if (from < 1 || from > n || std::abs(to) < 1 || std::abs(to) > n)
      throw std::invalid_argument("move index outside 1.." + std::to_string(n));
    t[static_cast<std::size_t>(from - 1)] = to;
  };

  switch (type) {
  case Type::swap2: set(i, j); set(j, i); break;
  case Type::cycle3: set(i, j); set(j, k); set(k, i); break;
  case Type::inversion: set(i, -i); break;
  case Type::signed_swap: set(j, k); set(k, j); break;
  case Type::anti_swap: set(j, -k); set(k, -j); break;
  case Type::cycle4: set(j, k); set(k, -j); break;
  }
  return ArrowPermutation(std::move(t));
}

std::string to_string(const MoveGenerator &m)
{
  auto const s = [](int x) { return std::to_string(x); };
  auto const sg = [](int x) { return (x < 0 ? "-" : "+") + std::to_string(std::abs(x)); };
  switch (m.type) {
  case MoveGenerator::Type::swap2: return "(" + s(m.i) + "," + s(m.j) + ")";
  case MoveGenerator::Type::cycle3: return "(" + s(m.i) + "," + s(m.j) + "," + s(m.k) + ")";
  case MoveGenerator::Type::inversion: return "(+-" + s(m.i) + ")";
  case MoveGenerator::Type::signed_swap: return "(+-" + s(m.j) + ",+-" + s(m.k) + ")";
  case MoveGenerator::Type::anti_swap: return "(+-" + s(m.j) + ",-+" + s(m.k) + ")";
  case MoveGenerator::Type::cycle4:
    return "(" + sg(m.j) + "," + sg(m.k) + "," + sg(-m.j) + "," + sg(-m.k) + ")";
  }
  return {};
}

std::vector<MoveGenerator> candidate_moves(GraphKind kind, int n)
{
  using Type = MoveGenerator::Type;
  std::vector<MoveGenerator> moves;
  if (kind == GraphKind::simple) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        moves.push_back({Type::swap2, i, j, 0});
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        for (int k = j + 1; k <= n; ++k) {
          moves.push_back({Type::cycle3, i, j, k});
          moves.push_back({Type::cycle3, i, k, j});
        }
    return moves;
  }

  for (int i = 1; i <= n; ++i)
    moves.push_back({Type::inversion, i, 0, 0});
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      moves.push_back({Type::signed_swap, 0, j, k});
      moves.push_back({Type::anti_swap, 0, j, k});
    }
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k)
      if (j != k)
        moves.push_back({Type::cycle4, 0, j, k});
  return moves;
}

bool move_forbidden(const FactorizedGraph &g, const MoveGenerator &m)
{
  if (m.reversible()) {
    std::size_t const base = g.basepoint_class();
    for (auto const &[a, b] : m.exchanged())
      if (g.equivalent(a, b) && g.class_of(a) != base)
        return true;
    return false;
  }
  auto const nodes = m.touched();
  std::size_t const cls = g.class_of(nodes.front());
  return !std::all_of(nodes.begin(), nodes.end(),
                      [&](Node node) { return g.class_of(node) == cls; });
}

std::vector<MoveGenerator> allowed_generators(const FactorizedGraph &g)
{
  auto moves = candidate_moves(g.kind(), g.degree());
  std::erase_if(moves, [&](const MoveGenerator &m) { return move_forbidden(g, m); });
  return moves;
}

GroupClosure aut_group(const FactorizedGraph &g, std::size_t cap)
{
  require_bounds(g.kind(), g.degree());
  std::vector<ArrowPermutation> gens;
  for (auto const &m : allowed_generators(g))
    gens.push_back(m.as_permutation(g.degree()));
  return closure(gens, cap, g.degree());
}

Node act(const ArrowPermutation &p, Node node)
{
  if (node == 0)
    return 0;
  return node > 0 ? p(node) : -p(-node);
}

bool preserves_classes(const ArrowPermutation &p, const FactorizedGraph &g)
{
  for (auto const &cls : g.classes()) {
    std::size_t const target = g.class_of(act(p, cls.front()));
    if (g.classes()[target].size() != cls.size())
      return false;
    for (Node node : cls)
      if (g.class_of(act(p, node)) != target)
        return false;
  }
  return true;
}

std::string to_string(GroupLabel label)
{
  switch (label) {
  case GroupLabel::S_n: return "S_n";
  case GroupLabel::S_n_plus: return "S_n_plus";
  case GroupLabel::P_n: return "P_n";
  case GroupLabel::P_n_minus: return "P_n_minus";
  case GroupLabel::P_n_plus: return "P_n_plus";
  case GroupLabel::P_n_pm: return "P_n_pm";
  }
  return {};
}

std::optional<Prediction> expected_label(const FactorizedGraph &g)
{
  int const n = g.degree();
  auto const &classes = g.classes();
  auto const &base = classes[g.basepoint_class()];
  bool const simple = g.kind() == GraphKind::simple;

  if (base.size() == graph_nodes(g.kind(), n).size())
    return Prediction{simple ? GroupLabel::S_n : GroupLabel::P_n, std::nullopt};
  if (base.size() != 1)
    return std::nullopt;

  if (simple) {
    if (classes.size() == 2)
      return Prediction{GroupLabel::S_n_plus, std::nullopt};
    return std::nullopt;
  }

  // Every other class must be {+-e_i : first <= i <= last} for an interval.
  std::vector<std::pair<int, int>> intervals;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (c == g.basepoint_class())
      continue;
    std::vector<int> axes;
    for (Node node : classes[c])
      axes.push_back(std::abs(node));
    std::sort(axes.begin(), axes.end());
    for (std::size_t k = 0; k < axes.size(); k += 2)
      if (k + 1 >= axes.size() || axes[k] != axes[k + 1])
        return std::nullopt; // some +e_i separated from -e_i
    axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
    if (axes.back() - axes.front() + 1 != static_cast<int>(axes.size()))
      return std::nullopt;
    intervals.emplace_back(axes.front(), axes.back());
  }
  std::sort(intervals.begin(), intervals.end());

  std::vector<int> sizes;
  for (auto const &[first, last] : intervals)
    sizes.push_back(last - first + 1);
  if (std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; }))
    return Prediction{GroupLabel::P_n_minus, std::nullopt};
  if (sizes.size() == 1)
    return Prediction{GroupLabel::P_n_plus, std::nullopt};
  return Prediction{GroupLabel::P_n_pm, IntervalPartition(std::move(sizes))};
}

std::vector<ArrowPermutation> predicted_elements(const Prediction &pred, int n)
{
  auto const all = all_arrow_permutations(n);
  auto const positive = [](const ArrowPermutation &p) {
    auto const t = p.targets();
    return std::all_of(t.begin(), t.end(), [](int x) { return x > 0; });
  };
  auto const even = [](const ArrowPermutation &p) { return det(to_matrix(p)) == 1; };

  switch (pred.label) {
  case GroupLabel::S_n: return filter(all, positive);
  case GroupLabel::S_n_plus:
    return filter(all, [&](const ArrowPermutation &p) { return positive(p) && even(p); });
  case GroupLabel::P_n: return all;
  case GroupLabel::P_n_minus:
    return filter(all, [](const ArrowPermutation &p) { return negative_parity(p) == 1; });
  case GroupLabel::P_n_plus: return filter(all, even);
  case GroupLabel::P_n_pm: {
    if (!pred.partition)
      throw std::invalid_argument("P_n_pm prediction without a partition");
    auto const &part = *pred.partition;
    return filter(all, [&](const ArrowPermutation &p) { return composite_parity(p, part) == 1; });
  }
  }
  return {};
}

CaseReport verify_case(const FactorizedGraph &g, std::size_t cap)
{
  CaseReport report;
  GroupClosure const group = aut_group(g, cap);
  report.computed_order = group.order();
  report.prediction = expected_label(g);
  if (!report.prediction)
    return report;

  auto const expected = predicted_elements(*report.prediction, g.degree());
  report.expected_order = expected.size();
  report.set_equal = group.elements == expected;

  if (report.prediction->label == GroupLabel::P_n_pm) {
    auto const gens = standard_generators(GeneratorKind::composite, g.degree(),
                                          report.prediction->partition);
    report.equals_generator_presentation = closure(gens, cap, g.degree()).elements == group.elements;
  }
  return report;
}

FactorizedGraph parse_graph_case(std::string_view text)
{
  auto const fail = [&]() -> FactorizedGraph {
    throw std::invalid_argument("graph case must look like b:n=3:classes=axes, got '" +
                                std::string(text) + "'");
  };

  std::vector<std::string_view> parts;
  std::string_view rest = text;
  while (true) {
    auto const colon = rest.find(':');
    parts.push_back(rest.substr(0, colon));
    if (colon == std::string_view::npos)
      break;
    rest.remove_prefix(colon + 1);
  }
  if (parts.size() < 3 || parts.size() > 4 || !parts[1].starts_with("n=") ||
      !parts[2].starts_with("classes="))
    return fail();

  GraphKind kind;
  if (parts[0] == "b")
    kind = GraphKind::double_;
  else if (parts[0] == "d")
    kind = GraphKind::simple;
  else
    return fail();

  std::string_view const nstr = parts[1].substr(2);
  int n = 0;
  auto const [ptr, ec] = std::from_chars(nstr.data(), nstr.data() + nstr.size(), n);
  if (ec != std::errc{} || ptr != nstr.data() + nstr.size() || n < 1)
    return fail();

  std::string_view const shape = parts[2].substr(8);
  if (shape == "blocks") {
    if (kind != GraphKind::double_ || parts.size() != 4)
      return fail();
    IntervalPartition part = parse_partition(parts[3]);
    if (part.degree() != n)
      throw std::invalid_argument("block partition does not sum to n");
    return FactorizedGraph::blocks(part);
  }
  if (parts.size() != 3)
    return fail();
  if (shape == "axes")
    return kind == GraphKind::double_ ? FactorizedGraph::axes(n)
                                      : FactorizedGraph::discrete(GraphKind::simple, n);
  if (shape == "one")
    return FactorizedGraph::one(kind, n);
  if (shape == "point")
    return FactorizedGraph::point(kind, n);
  if (shape == "discrete")
    return FactorizedGraph::discrete(kind, n);
  return fail();
}

} // namespace rigidspace
