#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "rigidspace/arrow_perm.hpp"
#include "rigidspace/discrete.hpp"
#include "rigidspace/topo_aut.hpp"

namespace rigidspace::cli
{

namespace
{

using json = nlohmann::json;

constexpr std::size_t kEnumerateCap = 100000;
constexpr int kEmbedSamples = 50;
constexpr int kMaxEmbedSize = 8;
constexpr int kMaxQuatSize = 3;

std::string fmt(double v, int digits)
{
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

int parse_degree(std::string_view text)
{
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(text), &used);
    if (used != text.size())
      throw std::invalid_argument("trailing characters");
  } catch (const std::exception &) {
    throw UsageError("bad degree '" + std::string(text) + "'");
  }
  if (n < 1 || n > kMaxExhaustiveDegree)
    throw UsageError("degree must lie in 1.." + std::to_string(kMaxExhaustiveDegree));
  return n;
}

CommandResult listing(std::string_view spec, const std::vector<std::string> &elements,
                      const RunConfig &config)
{
  CommandResult r;
  if (config.format == OutputFormat::json) {
    json doc{{"group", spec}, {"order", elements.size()}, {"elements", elements}};
    r.output = doc.dump(2) + "\n";
  } else {
    for (auto const &e : elements)
      r.output += e + "\n";
    r.output += "order: " + std::to_string(elements.size()) + "\n";
  }
  return r;
}

std::string generator_name(const PlaneGenerator &g)
{
  switch (g.kind) {
  case PlaneKind::rotation: return "L";
  case PlaneKind::boost: return "T";
  case PlaneKind::unitary: return "U";
  }
  return "?";
}

} // namespace

CommandResult cmd_enumerate(std::string_view group_spec, const RunConfig &config)
{
  if (group_spec == "Q8") {
    auto const group = quat_group_closure(2, kEnumerateCap);
    std::vector<std::string> names;
    for (auto const &g : group.elements)
      names.push_back(to_string(g));
    return listing(group_spec, names, config);
  }

  auto const colon = group_spec.find(':');
  if (colon == std::string_view::npos)
    throw UsageError("group spec '" + std::string(group_spec) +
                     "' (expected P:n, P+:n, P-:n, Ppm:<sizes> or Q8)");
  std::string_view const family = group_spec.substr(0, colon);
  std::string_view const arg = group_spec.substr(colon + 1);

  std::vector<ArrowPermutation> gens;
  int n = 0;
  if (family == "Ppm") {
    std::optional<IntervalPartition> part;
    try {
      part = parse_partition(arg);
    } catch (const std::invalid_argument &e) {
      throw UsageError(e.what());
    }
    n = part->degree();
    if (n > kMaxExhaustiveDegree)
      throw UsageError("degree must lie in 1.." + std::to_string(kMaxExhaustiveDegree));
    gens = standard_generators(GeneratorKind::composite, n, part);
  } else {
    n = parse_degree(arg);
    if (family == "P")
      gens = standard_generators(GeneratorKind::full, n);
    else if (family == "P+")
      gens = standard_generators(GeneratorKind::even, n);
    else if (family == "P-")
      gens = standard_generators(GeneratorKind::even_inverse, n);
    else
      throw UsageError("unknown group family '" + std::string(family) + "'");
  }

  auto const group = closure(gens, kEnumerateCap, n);
  std::vector<std::string> names;
  names.reserve(group.order());
  for (auto const &p : group.elements)
    names.push_back(to_string(p));
  return listing(group_spec, names, config);
}

CommandResult cmd_verify(std::string_view suite_name, const RunConfig &config)
{
  Suite suite{};
  try {
    suite = parse_suite(suite_name);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  auto const reports = run_suite(suite, config);
  CommandResult r;
  r.output = config.format == OutputFormat::json ? render_json(reports, suite, config)
                                                 : render_text(reports);
  r.exit_code = exit_code(reports);
  return r;
}

CommandResult cmd_quotient(std::string_view subgroup_spec, std::string_view vector,
                           const std::optional<std::string> &classes, const RunConfig &config)
{
  std::optional<EvenSubgroup> h;
  std::optional<BitVector> v;
  std::optional<GraphKind> kind;
  try {
    h = parse_subgroup(subgroup_spec);
    v = parse_bits(vector);
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(v->size()) != h->dimension())
    throw UsageError("vector has " + std::to_string(v->size()) + " bits, subgroup acts on D^" +
                     std::to_string(h->dimension()));
  if (classes) {
    if (*classes == "d" || *classes == "simple")
      kind = GraphKind::simple;
    else if (*classes == "b" || *classes == "double")
      kind = GraphKind::double_;
    else
      throw UsageError("--classes expects d or b");
  }

  Syndrome const s = syndrome(*v, *h);
  bool const member = contains(*h, *v);
  CommandResult r;
  if (config.format == OutputFormat::json) {
    json doc{{"subgroup", to_string(*h)},
             {"vector", to_string(*v)},
             {"syndrome", to_string(s)},
             {"in_subgroup", member},
             {"cosets", std::int64_t{1} << h->syndrome_length()}};
    if (kind) {
      auto const f = induced_factorization(*h, *kind);
      doc["factorization"] = {{"kind", to_string(*kind)},
                              {"classes", f.classes},
                              {"basepoint_class", f.basepoint_class}};
    }
    r.output = doc.dump(2) + "\n";
  } else {
    r.output = "syndrome: " + to_string(s) + "\n";
    r.output += std::string("in subgroup: ") + (member ? "yes" : "no") + "\n";
    r.output += "cosets: " + std::to_string(std::int64_t{1} << h->syndrome_length()) + "\n";
    if (kind)
      r.output += to_string(*kind) + "/~: " + to_string(induced_factorization(*h, *kind)) + "\n";
  }
  return r;
}

ComplexMatrix parse_matrix_json(std::string_view text)
{
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error &e) {
    throw UsageError(std::string("matrix file is not JSON: ") + e.what());
  }
  if (!doc.is_array() || doc.empty())
    throw UsageError("matrix must be a nonempty array of rows");
  auto const rows = static_cast<Eigen::Index>(doc.size());
  ComplexMatrix m(rows, rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    auto const &row = doc[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != rows)
      throw UsageError("matrix must be square: row " + std::to_string(i + 1) + " has " +
                       (row.is_array() ? std::to_string(row.size()) : std::string("no")) +
                       " entries, expected " + std::to_string(rows));
    for (Eigen::Index j = 0; j < rows; ++j) {
      auto const &e = row[static_cast<std::size_t>(j)];
      if (e.is_number())
        m(i, j) = e.get<double>();
      else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number())
        m(i, j) = {e[0].get<double>(), e[1].get<double>()};
      else
        throw UsageError("matrix entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                         ") is neither a number nor [re, im]");
    }
  }
  return m;
}

std::string matrix_to_json(const RealMatrix &m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows.dump() + "\n";
}

CommandResult cmd_decompose(std::string_view matrix_json, const RunConfig &config)
{
  ComplexMatrix const c = parse_matrix_json(matrix_json);
  if (c.imag().cwiseAbs().maxCoeff() > 0.0)
    throw UsageError("decompose expects a real matrix");
  RealMatrix const m = c.real();

  CommandResult r;
  std::vector<PlaneGenerator> gens;
  try {
    gens = givens_decompose(m, config.tolerance);
  } catch (const NotSpecialOrthogonal &e) {
    r.exit_code = kVerificationFailure;
    if (config.format == OutputFormat::json)
      r.output = json{{"accepted", false}, {"reason", e.what()}}.dump(2) + "\n";
    else
      r.output = std::string("rejected: ") + e.what() + "\n";
    return r;
  }

  int const n = static_cast<int>(m.rows());
  double const error = (word_product(gens, n) - m).cwiseAbs().maxCoeff();
  if (!(error < config.tolerance))
    r.exit_code = kVerificationFailure;
  if (config.format == OutputFormat::json) {
    json list = json::array();
    for (auto const &g : gens)
      list.push_back({{"kind", "rotation"}, {"position", g.position}, {"angle", g.parameter}});
    r.output = json{{"accepted", true},
                    {"n", n},
                    {"generators", std::move(list)},
                    {"reconstruction_error", error}}
                   .dump(2) +
               "\n";
  } else {
    r.output = "generators: " + std::to_string(gens.size()) + "\n";
    for (auto const &g : gens)
      r.output += "  " + generator_name(g) + "(" + std::to_string(g.position) + ", " +
                  fmt(g.parameter, 17) + ")\n";
    r.output += "reconstruction error: " + fmt(error, 3) + "\n";
  }
  return r;
}

CommandResult cmd_embed(std::string_view kind, int n, const RunConfig &config)
{
  VerificationReport report;
  std::string scope = "embed:" + std::string(kind);

  if (kind == "su-to-so") {
    if (n < 1 || n > kMaxEmbedSize)
      throw UsageError("--n must lie in 1.." + std::to_string(kMaxEmbedSize));
    SeededRng rng(config.seed);
    int failures = 0;
    double worst = 0.0;
    for (int s = 0; s < kEmbedSamples; ++s) {
      ComplexMatrix const u = random_su(n, static_cast<std::uint64_t>(rng.unit() * 0x1p53));
      failures += !check_su_embedding(u, config.tolerance);
      auto const d = pseudo_orthogonal_defect(realify(u), SignatureMetric::identity(2 * n));
      worst = std::max({worst, d.metric, d.det});
    }
    std::string detail = std::to_string(kEmbedSamples) + " SU(" + std::to_string(n) + ") samples";
    if (n == 1) {
      // U(1) itself lands in SO(2): sample phases e^{i theta} as well.
      for (int s = 0; s < kEmbedSamples; ++s) {
        ComplexMatrix u(1, 1);
        u(0, 0) = std::polar(1.0, rng.angle());
        failures += !check_unitary_embedding(u, config.tolerance);
        auto const d = pseudo_orthogonal_defect(realify(u), SignatureMetric::identity(2));
        worst = std::max({worst, d.metric, d.det});
      }
      detail += " and " + std::to_string(kEmbedSamples) + " U(1) phases";
    }
    report.claim_id = "embed.su-to-so.n" + std::to_string(n);
    report.anchor = "realification/su-in-so";
    report.status = failures == 0 && worst <= config.tolerance ? Status::pass : Status::fail;
    report.computed = worst;
    report.expected = config.tolerance;
    report.comparator = "<=";
    report.detail = detail + "; failures: " + std::to_string(failures);
  } else if (kind == "quat-to-perm") {
    if (n < 2 || n > kMaxQuatSize)
      throw UsageError("--n must lie in 2.." + std::to_string(kMaxQuatSize) + " for quat-to-perm");
    auto const group = quat_group_closure(n);
    int outside = 0;
    for (auto const &g : group.elements) {
      try {
        auto const p = from_matrix(expand_to_real(g));
        outside += !classify(p, IntervalPartition::single(2 * n)).in_plus;
      } catch (const EmbeddingViolation &) {
        ++outside;
      }
    }
    report.claim_id = "embed.quat-to-perm.n" + std::to_string(n);
    report.anchor = "quaternion-units/in-P2n-plus";
    report.status = outside == 0 ? Status::pass : Status::fail;
    report.computed = static_cast<std::int64_t>(outside);
    report.expected = std::int64_t{0};
    report.comparator = "==";
    report.detail = std::to_string(group.order()) + " elements checked against P_" +
                    std::to_string(2 * n) + "^+";
  } else {
    throw UsageError("embed kind must be su-to-so or quat-to-perm");
  }

  std::vector<VerificationReport> const reports{report};
  CommandResult r;
  r.output = config.format == OutputFormat::json ? render_json(reports, scope, config)
                                                 : render_text(reports);
  r.exit_code = exit_code(reports);
  return r;
}

} // namespace rigidspace::cli
