#include "rigidspace/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <future>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "rigidspace/arrow_perm.hpp"
#include "rigidspace/discrete.hpp"
#include "rigidspace/matrix_groups.hpp"
#include "rigidspace/quotient.hpp"
#include "rigidspace/topo_aut.hpp"

namespace rigidspace
{

namespace
{

using json = nlohmann::json;

/// Tolerance for the exact-in-principle floating identities.
constexpr double kTightTol = 1e-12;
constexpr std::size_t kClosureCap = 50000;

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0)
{
  // splitmix64 finalizer over the combined key.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (a + 1) + 0xbf58476d1ce4e5b9ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::int64_t factorial(int n)
{
  std::int64_t f = 1;
  for (int k = 2; k <= n; ++k)
    f *= k;
  return f;
}

std::int64_t pow2(int n)
{
  return std::int64_t{1} << n;
}

struct Claim
{
  std::string id;
  Suite suite;
  std::string anchor;
  std::function<VerificationReport(const RunConfig &)> run;
};

VerificationReport make(Value computed, Value expected, std::string comparator, bool ok,
                        std::string detail = {})
{
  VerificationReport r;
  r.status = ok ? Status::pass : Status::fail;
  r.computed = std::move(computed);
  r.expected = std::move(expected);
  r.comparator = std::move(comparator);
  r.detail = std::move(detail);
  return r;
}

std::string fmt_sci(double v)
{
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << v;
  return os.str();
}

std::vector<IntervalPartition> multi_block_partitions(int n)
{
  // Compositions of n with at least two parts, in lexicographic order of sizes.
  std::vector<IntervalPartition> out;
  for (unsigned cuts = 1; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> sizes;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (cuts & (1u << i)) {
        sizes.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    sizes.push_back(run);
    out.emplace_back(std::move(sizes));
  }
  std::sort(out.begin(), out.end(), [](const IntervalPartition &a, const IntervalPartition &b) {
    return std::lexicographical_compare(a.sizes().begin(), a.sizes().end(), b.sizes().begin(),
                                        b.sizes().end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// mod-2 scalar structures

void add_section0(std::vector<Claim> &claims)
{
  claims.push_back({"S0.D.field_axioms", Suite::section0, "mod2/field-D", [](const RunConfig &) {
                      std::int64_t violations = 0;
                      for (int a = 0; a <= 1; ++a)
                        for (int b = 0; b <= 1; ++b) {
                          Bit const x(a), y(b);
                          violations += d_add(x, y) != d_add(y, x);
                          violations += d_add(x, Bit(0)) != x;
                          violations += d_add(x, x) != Bit(0);
                          for (int c = 0; c <= 1; ++c) {
                            Bit const z(c);
                            violations += d_add(d_add(x, y), z) != d_add(x, d_add(y, z));
                          }
                        }
                      return make(violations, std::int64_t{0}, "==", violations == 0,
                                  "associative, commutative, identity 0, self-inverse over {0,1}^3");
                    }});

  claims.push_back({"S0.B.add_table", Suite::section0, "mod2/structure-B", [](const RunConfig &) {
                      std::int64_t mismatches = 0;
                      for (int a = -1; a <= 1; ++a)
                        for (int b = -1; b <= 1; ++b)
                          mismatches += b_add(Trit(a), Trit(b)) != mod2_signed(a + b);
                      return make(mismatches, std::int64_t{0}, "==", mismatches == 0,
                                  "b_add(x, y) against mod2_signed(x + y) on all 9 pairs");
                    }});

  claims.push_back(
      {"S0.B.commutative_identity", Suite::section0, "mod2/structure-B", [](const RunConfig &) {
         std::int64_t violations = 0;
         for (int a = -1; a <= 1; ++a)
           for (int b = -1; b <= 1; ++b) {
             violations += b_add(Trit(a), Trit(b)) != b_add(Trit(b), Trit(a));
             violations += b_add(Trit(a), Trit(0)) != Trit(a);
           }
         return make(violations, std::int64_t{0}, "==", violations == 0);
       }});

  claims.push_back(
      {"S0.B.non_associative", Suite::section0, "mod2/structure-B-nonassociative",
       [](const RunConfig &) {
         std::int64_t violations = 0;
         std::string witnesses;
         for (int a = -1; a <= 1; ++a)
           for (int b = -1; b <= 1; ++b)
             for (int c = -1; c <= 1; ++c) {
               Trit const x(a), y(b), z(c);
               if (b_add(b_add(x, y), z) != b_add(x, b_add(y, z))) {
                 ++violations;
                 if (!witnesses.empty())
                   witnesses += ' ';
                 witnesses += "(" + std::to_string(a) + "," + std::to_string(b) + "," +
                              std::to_string(c) + ")";
               }
             }
         return make(violations, std::int64_t{1}, ">=", violations >= 1,
                     "violating triples: " + witnesses);
       }});

  claims.push_back(
      {"S0.K.restriction_D", Suite::section0, "mod2/circle-restrictions", [](const RunConfig &) {
         std::int64_t mismatches = 0;
         for (int a = 0; a <= 1; ++a)
           for (int b = 0; b <= 1; ++b) {
             CircleResidue const x(a), y(b);
             mismatches += to_bit(k_add(x, y)) != d_add(Bit(a), Bit(b));
             mismatches += to_bit(k_mul(x, y)) != Bit(a * b);
           }
         return make(mismatches, std::int64_t{0}, "==", mismatches == 0,
                     "k_add/k_mul on {0,1} against d_add and the product of D (residue 2 read as 0)");
       }});

  claims.push_back(
      {"S0.K.restriction_B", Suite::section0, "mod2/circle-restrictions", [](const RunConfig &) {
         std::int64_t mismatches = 0;
         for (int a = -1; a <= 1; ++a)
           for (int b = -1; b <= 1; ++b) {
             CircleResidue const x(a), y(b);
             mismatches += to_trit(k_add(x, y)) != b_add(Trit(a), Trit(b));
             mismatches += to_trit(k_mul(x, y)) != Trit(a * b);
           }
         return make(mismatches, std::int64_t{0}, "==", mismatches == 0,
                     "k_add/k_mul on {-1,0,1} against b_add and the integer product");
       }});

  claims.push_back(
      {"S0.K.circle_consistency", Suite::section0, "mod2/circle-reduction",
       [](const RunConfig &config) {
         SeededRng rng(mix_seed(config.seed, 0, 1));
         std::vector<double> xs{0.0, 2.0, -2.0, 4.0, -4.0, 2.5, -2.2, 1.0, -1.0, 1e-300, -1e-300};
         for (int k = 0; k < 5000; ++k)
           xs.push_back(rng.uniform(-50.0, 50.0));
         double worst = 0.0;
         std::int64_t not_idempotent = 0;
         for (double x : xs) {
           CircleResidue const r = k_reduce(x);
           std::complex<double> const a = std::polar(1.0, std::numbers::pi * r.value());
           std::complex<double> const b = std::polar(1.0, std::numbers::pi * x);
           worst = std::max(worst, std::abs(a - b));
           not_idempotent += k_reduce(r.value()) != r;
         }
         bool const ok = worst <= kTightTol && not_idempotent == 0;
         return make(worst, kTightTol, "<=", ok,
                     std::to_string(xs.size()) + " samples; idempotence failures: " +
                         std::to_string(not_idempotent));
       }});
}

// ---------------------------------------------------------------------------
// signed permutation groups and generator-built matrix groups

void add_section1(std::vector<Claim> &claims, const RunConfig &config)
{
  for (int n = 2; n <= config.max_n; ++n) {
    std::string const tag = ".n" + std::to_string(n);

    claims.push_back({"S1.P.order" + tag, Suite::section1, "signed-permutations/full-group",
                      [n](const RunConfig &) {
                        auto const gens = standard_generators(GeneratorKind::full, n);
                        auto const group = closure(gens, kClosureCap);
                        std::int64_t const expected = pow2(n) * factorial(n);
                        bool const ok = static_cast<std::int64_t>(group.order()) == expected &&
                                        group.elements == all_arrow_permutations(n);
                        return make(static_cast<std::int64_t>(group.order()), expected, "==", ok);
                      }});

    claims.push_back({"S1.Pplus.det_kernel" + tag, Suite::section1,
                      "signed-permutations/unit-determinant", [n](const RunConfig &) {
                        auto const gens = standard_generators(GeneratorKind::even, n);
                        auto const group = closure(gens, kClosureCap);
                        auto const all = all_arrow_permutations(n);
                        auto const kernel = filter(all, [](const ArrowPermutation &p) {
                          return det(to_matrix(p)) == 1;
                        });
                        std::int64_t const expected = pow2(n - 1) * factorial(n);
                        bool const equal = group.elements == kernel;
                        bool const ok =
                            equal && static_cast<std::int64_t>(group.order()) == expected;
                        return make(static_cast<std::int64_t>(group.order()), expected, "==", ok,
                                    std::string("closure of l_{k,k+1} set-equals det kernel: ") +
                                        (equal ? "true" : "false"));
                      }});

    claims.push_back({"S1.Pminus.negative_kernel" + tag, Suite::section1,
                      "signed-permutations/even-negatives", [n](const RunConfig &) {
                        auto const gens = standard_generators(GeneratorKind::even_inverse, n);
                        auto const group = closure(gens, kClosureCap);
                        auto const all = all_arrow_permutations(n);
                        auto const kernel = filter(all, [](const ArrowPermutation &p) {
                          return negative_parity(p) == 1;
                        });
                        bool const equal = group.elements == kernel;
                        return make(static_cast<std::int64_t>(group.order()),
                                    static_cast<std::int64_t>(kernel.size()), "==", equal,
                                    std::string("closure of +-t_{k,k+1} set-equals even-negatives "
                                                "kernel: ") +
                                        (equal ? "true" : "false"));
                      }});

    claims.push_back({"S1.Ppm.single_block" + tag, Suite::section1,
                      "signed-permutations/block-determinants", [n](const RunConfig &) {
                        auto const part = IntervalPartition::single(n);
                        std::int64_t mismatches = 0;
                        for (auto const &p : all_arrow_permutations(n))
                          mismatches += composite_parity(p, part) != det(to_matrix(p));
                        return make(mismatches, std::int64_t{0}, "==", mismatches == 0,
                                    "composite parity with one block against det on all of P_n");
                      }});
  }

  for (int n = 2; n <= std::min(config.max_n, 3); ++n) {
    claims.push_back(
        {"S1.homomorphisms.n" + std::to_string(n), Suite::section1,
         "signed-permutations/transition-matrices", [n](const RunConfig &) {
           auto const all = all_arrow_permutations(n);
           std::int64_t violations = 0;
           for (auto const &a : all)
             for (auto const &b : all) {
               auto const ab = compose(a, b);
               violations += to_matrix(ab) != to_matrix(a) * to_matrix(b);
               violations += det(to_matrix(ab)) != det(to_matrix(a)) * det(to_matrix(b));
               violations += negative_parity(ab) != negative_parity(a) * negative_parity(b);
             }
           return make(violations, std::int64_t{0}, "==", violations == 0,
                       "to_matrix, det and negative parity multiplicative over all pairs");
         }});
  }

  for (std::string const spec : {"2+1", "2+2"}) {
    IntervalPartition const part = parse_partition(spec);
    if (part.degree() > config.max_n)
      continue;
    claims.push_back(
        {"S1.Ppm.containment." + spec, Suite::section1, "signed-permutations/block-determinants",
         [part](const RunConfig &) {
           int const n = part.degree();
           auto const gens = standard_generators(GeneratorKind::composite, n, part);
           auto const group = closure(gens, kClosureCap);
           auto const kernel = filter(all_arrow_permutations(n), [&](const ArrowPermutation &p) {
             return composite_parity(p, part) == 1;
           });
           std::int64_t outside = 0;
           for (auto const &p : group.elements)
             outside += !std::binary_search(kernel.begin(), kernel.end(), p);
           bool const equal = group.elements == kernel;
           return make(outside, std::int64_t{0}, "==", outside == 0,
                       "closure order " + std::to_string(group.order()) + ", kernel size " +
                           std::to_string(kernel.size()) + ", elements outside kernel " +
                           std::to_string(outside) + ", set equality " +
                           (equal ? "true" : "false"));
         }});
  }

  for (std::string const spec : {"3", "2+1", "2+2"}) {
    claims.push_back(
        {"S1.metric." + spec, Suite::section1, "orthogonal/signature-preservation",
         [spec](const RunConfig &cfg) {
           IntervalPartition const part = parse_partition(spec);
           SignatureMetric const eta = signature_metric(part);
           SeededRng rng(mix_seed(cfg.seed, 11, static_cast<std::uint64_t>(part.block_count())));
           double worst_metric = 0.0, worst_det = 0.0;
           for (int w = 0; w < 100; ++w) {
             std::size_t const length = 1 + rng.index(50);
             auto const word = random_signature_word(part, length, rng);
             MetricDefect const d = pseudo_orthogonal_defect(word_product(word, part.degree()), eta);
             worst_metric = std::max(worst_metric, d.metric);
             worst_det = std::max(worst_det, d.det);
           }
           double const worst = std::max(worst_metric, worst_det);
           return make(worst, cfg.tolerance, "<=", worst <= cfg.tolerance,
                       "100 words, max|M^T eta M - eta| = " + fmt_sci(worst_metric) +
                           ", max|det M - 1| = " + fmt_sci(worst_det));
         }});
  }

  for (int n = 2; n <= 8; ++n) {
    claims.push_back(
        {"S1.givens.n" + std::to_string(n), Suite::section1, "orthogonal/givens-surjectivity",
         [n](const RunConfig &cfg) {
           double worst = 0.0;
           std::size_t longest = 0;
           for (int sample = 0; sample < 50; ++sample) {
             RealMatrix const m = random_so(n, mix_seed(cfg.seed, 21 + n, sample));
             auto const gens = givens_decompose(m, cfg.tolerance);
             longest = std::max(longest, gens.size());
             worst = std::max(worst, (word_product(gens, n) - m).cwiseAbs().maxCoeff());
           }
           std::size_t const bound = static_cast<std::size_t>(n * (n - 1) / 2 + (n - 1));
           bool const ok = worst < cfg.tolerance && longest <= bound;
           return make(worst, cfg.tolerance, "<", ok,
                       "50 samples; longest decomposition " + std::to_string(longest) +
                           " (bound " + std::to_string(bound) + ")");
         }});
  }
}

// ---------------------------------------------------------------------------
// factorized graphs

void add_section2(std::vector<Claim> &claims, const RunConfig &config)
{
  std::vector<std::string> cases;
  for (int n = 2; n <= config.max_n; ++n) {
    std::string const ns = std::to_string(n);
    cases.push_back("b:n=" + ns + ":classes=axes");
    cases.push_back("b:n=" + ns + ":classes=one");
    cases.push_back("b:n=" + ns + ":classes=point");
    for (auto const &part : multi_block_partitions(n))
      cases.push_back("b:n=" + ns + ":classes=blocks:" + to_string(part));
  }
  for (int n = 2; n <= std::min(config.max_n + 1, kMaxSimpleDegree); ++n) {
    std::string const ns = std::to_string(n);
    cases.push_back("d:n=" + ns + ":classes=one");
    cases.push_back("d:n=" + ns + ":classes=point");
  }

  for (auto const &spec : cases) {
    claims.push_back(
        {"S2.case." + spec, Suite::section2, "factorized-graphs/case-table",
         [spec](const RunConfig &) {
           FactorizedGraph const g = parse_graph_case(spec);
           CaseReport const r = verify_case(g, kClosureCap);
           std::string detail = "predicted " + (r.prediction ? to_string(r.prediction->label)
                                                             : std::string("none"));
           detail += ", set equality " + std::string(r.set_equal ? "true" : "false");
           if (r.equals_generator_presentation)
             detail += ", equals closure of composite generators " +
                       std::string(*r.equals_generator_presentation ? "true" : "false");
           bool const ok = r.prediction.has_value() && r.set_equal;
           return make(static_cast<std::int64_t>(r.computed_order),
                       static_cast<std::int64_t>(r.expected_order), "set-equal", ok, detail);
         }});
  }

  // Reversible-arrow prohibition: the surviving move types per canonical shape.
  struct Shape
  {
    std::string spec;
    std::set<MoveGenerator::Type> expected;
  };
  using T = MoveGenerator::Type;
  int const n = std::max(3, std::min(config.max_n, 4));
  std::string const ns = std::to_string(n);
  std::vector<Shape> const shapes{
      {"d:n=" + ns + ":classes=one", {T::cycle3}},
      {"d:n=" + ns + ":classes=point", {T::swap2, T::cycle3}},
      {"b:n=" + ns + ":classes=axes", {T::signed_swap, T::anti_swap}},
      {"b:n=" + ns + ":classes=one", {T::cycle4}},
      {"b:n=" + ns + ":classes=point", {T::inversion, T::signed_swap, T::anti_swap, T::cycle4}},
  };
  for (auto const &shape : shapes) {
    claims.push_back(
        {"S2.generators." + shape.spec, Suite::section2, "factorized-graphs/prohibition",
         [shape](const RunConfig &) {
           FactorizedGraph const g = parse_graph_case(shape.spec);
           auto const allowed = allowed_generators(g);
           std::set<T> types;
           std::int64_t forbidden = 0;
           for (auto const &m : allowed) {
             types.insert(m.type);
             forbidden += move_forbidden(g, m);
           }
           bool const ok = types == shape.expected && forbidden == 0;
           return make(static_cast<std::int64_t>(types.size()),
                       static_cast<std::int64_t>(shape.expected.size()), "==", ok,
                       std::to_string(allowed.size()) + " moves allowed; forbidden among them: " +
                           std::to_string(forbidden) +
                           (types == shape.expected ? "" : "; move types differ"));
         }});
  }
}

// ---------------------------------------------------------------------------
// quotients, realification, quaternion units

void add_section3(std::vector<Claim> &claims)
{
  std::vector<EvenSubgroup> subgroups;
  for (int n = 1; n <= 6; ++n) {
    subgroups.push_back(EvenSubgroup::trivial(n));
    subgroups.push_back(EvenSubgroup::plus(n));
    subgroups.push_back(EvenSubgroup::full(n));
    for (auto const &part : multi_block_partitions(n))
      subgroups.push_back(EvenSubgroup::blockwise(part));
  }

  for (auto const &h : subgroups) {
    claims.push_back(
        {"S3.quotient." + to_string(h), Suite::section3, "quotients/syndrome",
         [h](const RunConfig &) {
           auto const all = all_bit_vectors(h.dimension());
           std::vector<BitVector> kernel;
           std::set<Syndrome> image;
           for (auto const &v : all) {
             Syndrome const s = syndrome(v, h);
             image.insert(s);
             if (std::all_of(s.parities.begin(), s.parities.end(),
                             [](Bit b) { return b.value() == 0; }))
               kernel.push_back(v);
           }
           std::int64_t hom_violations = 0;
           for (auto const &u : all)
             for (auto const &v : all)
               hom_violations += syndrome(vec_add(u, v), h) !=
                                 syndrome_add(syndrome(u, h), syndrome(v, h));
           bool const kernel_ok = kernel == enumerate(h);
           std::int64_t const cosets = static_cast<std::int64_t>(image.size());
           std::int64_t const expected = pow2(h.syndrome_length());
           bool const ok = kernel_ok && hom_violations == 0 && cosets == expected;
           return make(cosets, expected, "==", ok,
                       std::string("kernel = enumerate: ") + (kernel_ok ? "true" : "false") +
                           ", homomorphism violations: " + std::to_string(hom_violations));
         }});
  }

  for (auto const &h : subgroups) {
    if (h.dimension() < 2)
      continue;
    claims.push_back(
        {"S3.factorization." + to_string(h), Suite::section3, "quotients/induced-factorization",
         [h](const RunConfig &) {
           int const n = h.dimension();
           std::size_t expected_classes = 0;
           GroupLabel expected_label_b = GroupLabel::P_n;
           switch (h.variant()) {
           case EvenSubgroup::Variant::trivial:
             expected_classes = static_cast<std::size_t>(n) + 1;
             expected_label_b = GroupLabel::P_n_minus;
             break;
           case EvenSubgroup::Variant::plus:
             expected_classes = 2;
             expected_label_b = GroupLabel::P_n_plus;
             break;
           case EvenSubgroup::Variant::blockwise: {
             expected_classes = static_cast<std::size_t>(h.partition()->block_count()) + 1;
             auto const sizes = h.partition()->sizes();
             bool const singletons =
                 std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 1; });
             expected_label_b = singletons ? GroupLabel::P_n_minus : GroupLabel::P_n_pm;
             break;
           }
           case EvenSubgroup::Variant::full:
             expected_classes = 1;
             expected_label_b = GroupLabel::P_n;
             break;
           }

           auto const d = induced_factorization(h, GraphKind::simple);
           auto const b = induced_factorization(h, GraphKind::double_);
           bool const base_alone = h.variant() == EvenSubgroup::Variant::full ||
                                   (b.classes[b.basepoint_class].size() == 1 &&
                                    d.classes[d.basepoint_class].size() == 1);
           auto const label = expected_label(FactorizedGraph(b));
           bool const label_ok = label && label->label == expected_label_b;
           bool const ok = d.classes.size() == expected_classes &&
                           b.classes.size() == expected_classes && base_alone && label_ok;
           return make(static_cast<std::int64_t>(b.classes.size()),
                       static_cast<std::int64_t>(expected_classes), "==", ok,
                       "b/~ = " + to_string(b) + "; d/~ = " + to_string(d) + "; b-label " +
                           (label ? to_string(label->label) : std::string("none")));
         }});
  }

  claims.push_back(
      {"S3.realify.homomorphism", Suite::section3, "realification/ring-homomorphism",
       [](const RunConfig &cfg) {
         SeededRng rng(mix_seed(cfg.seed, 31));
         double worst = 0.0;
         for (int k = 0; k < 100; ++k) {
           int const n = 1 + k % 4;
           ComplexMatrix const a = random_complex_matrix(n, rng);
           ComplexMatrix const b = random_complex_matrix(n, rng);
           worst = std::max(worst, (realify(a * b) - realify(a) * realify(b)).cwiseAbs().maxCoeff());
           worst = std::max(worst, (realify(a + b) - realify(a) - realify(b)).cwiseAbs().maxCoeff());
           worst = std::max(worst, (realify(a.adjoint()) - realify(a).transpose()).cwiseAbs().maxCoeff());
         }
         return make(worst, kTightTol, "<=", worst <= kTightTol,
                     "100 pairs: products, sums and adjoints");
       }});

  for (int n = 1; n <= 5; ++n) {
    claims.push_back(
        {"S3.realify.su.n" + std::to_string(n), Suite::section3, "realification/su-in-so",
         [n](const RunConfig &cfg) {
           double worst = 0.0;
           std::int64_t failures = 0;
           for (int sample = 0; sample < 50; ++sample) {
             ComplexMatrix const u = random_su(n, mix_seed(cfg.seed, 41 + n, sample));
             failures += !check_su_embedding(u, cfg.tolerance);
             MetricDefect const d =
                 pseudo_orthogonal_defect(realify(u), SignatureMetric::identity(2 * n));
             worst = std::max({worst, d.metric, d.det});
           }
           return make(worst, cfg.tolerance, "<=", worst <= cfg.tolerance && failures == 0,
                       "50 samples; embedding check failures: " + std::to_string(failures));
         }});
  }

  claims.push_back({"S3.realify.u1_rotation", Suite::section3, "realification/u1-so2",
                    [](const RunConfig &cfg) {
                      SeededRng rng(mix_seed(cfg.seed, 51));
                      double worst = 0.0;
                      std::int64_t failures = 0;
                      for (int k = 0; k < 100; ++k) {
                        double const theta = rng.angle();
                        ComplexMatrix u(1, 1);
                        u(0, 0) = std::polar(1.0, theta);
                        RealMatrix const rot =
                            plane_generator_matrix(PlaneGenerator::rotation(1, theta), 2);
                        worst = std::max(worst, (realify(u) - rot).cwiseAbs().maxCoeff());
                        failures += !check_unitary_embedding(u, kTightTol);
                      }
                      return make(worst, kTightTol, "<=", worst <= kTightTol && failures == 0,
                                  "100 angles; U(1) embedding failures: " +
                                      std::to_string(failures));
                    }});

  claims.push_back({"S3.quat.order", Suite::section3, "quaternion-units/closure",
                    [](const RunConfig &) {
                      auto const group = quat_group_closure();
                      auto const units = quaternion_units();
                      bool members = true;
                      for (auto const &u : units) {
                        members = members && std::binary_search(group.elements.begin(),
                                                                group.elements.end(), u);
                        members = members && std::binary_search(group.elements.begin(),
                                                                group.elements.end(), -u);
                      }
                      auto const order = static_cast<std::int64_t>(group.order());
                      return make(order, std::int64_t{8}, "==", order == 8 && members,
                                  std::string("{+-u_1, +-u_2, +-u_3, +-u_4} present: ") +
                                      (members ? "true" : "false"));
                    }});

  for (int n = 2; n <= 3; ++n) {
    claims.push_back(
        {"S3.quat.expand.n" + std::to_string(n), Suite::section3, "quaternion-units/in-P2n-plus",
         [n](const RunConfig &) {
           auto const group = quat_group_closure(n);
           std::set<ArrowPermutation> images;
           std::int64_t outside = 0;
           for (auto const &g : group.elements) {
             try {
               TransitionMatrix const t = expand_to_real(g);
               ArrowPermutation const p = from_matrix(t);
               outside += !classify(p, IntervalPartition::single(2 * n)).in_plus;
               images.insert(p);
             } catch (const EmbeddingViolation &) {
               ++outside;
             }
           }
           bool const injective = images.size() == group.order();
           return make(outside, std::int64_t{0}, "==", outside == 0 && injective,
                       std::to_string(group.order()) + " elements, injective: " +
                           (injective ? "true" : "false"));
         }});
  }

  claims.push_back({"S3.quat.unit_su2", Suite::section3, "quaternion-units/su2",
                    [](const RunConfig &cfg) {
                      SeededRng rng(mix_seed(cfg.seed, 61));
                      double worst = 0.0;
                      for (int k = 0; k < 100; ++k) {
                        Quat2 const q{rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2),
                                      rng.uniform(-2, 2)};
                        Eigen::Matrix2cd const u = as_matrix(normalize(q));
                        worst = std::max(
                            worst, (u.adjoint() * u - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff());
                        worst = std::max(worst, std::abs(u.determinant() - std::complex<double>(1.0)));
                      }
                      return make(worst, kTightTol, "<=", worst <= kTightTol,
                                  "100 normalized elements: u*u = I and det u = 1");
                    }});
}

std::vector<Claim> build_claims(const RunConfig &config)
{
  std::vector<Claim> claims;
  add_section0(claims);
  add_section1(claims, config);
  add_section2(claims, config);
  add_section3(claims);
  return claims;
}

json value_to_json(const Value &v)
{
  return std::visit([](auto const &x) { return json(x); }, v);
}

} // namespace

Suite parse_suite(std::string_view name)
{
  if (name == "all")
    return Suite::all;
  if (name == "section0")
    return Suite::section0;
  if (name == "section1")
    return Suite::section1;
  if (name == "section2")
    return Suite::section2;
  if (name == "section3")
    return Suite::section3;
  if (name.empty())
    throw std::invalid_argument("empty suite name");
  throw std::invalid_argument("unknown suite '" + std::string(name) +
                              "' (expected all, section0, section1, section2 or section3)");
}

std::string to_string(Suite suite)
{
  switch (suite) {
  case Suite::all: return "all";
  case Suite::section0: return "section0";
  case Suite::section1: return "section1";
  case Suite::section2: return "section2";
  case Suite::section3: return "section3";
  }
  return {};
}

void RunConfig::validate() const
{
  if (max_n < 2 || max_n > kMaxDoubleDegree)
    throw std::invalid_argument("max_n must lie in 2.." + std::to_string(kMaxDoubleDegree));
  if (!(tolerance > 0.0) || !std::isfinite(tolerance))
    throw std::invalid_argument("tolerance must be positive");
}

std::string to_string(Status status)
{
  switch (status) {
  case Status::pass: return "pass";
  case Status::fail: return "fail";
  case Status::skipped: return "skipped";
  }
  return {};
}

std::vector<VerificationReport> run_suite(Suite suite, const RunConfig &config)
{
  config.validate();
  auto claims = build_claims(config);
  std::erase_if(claims, [&](const Claim &c) { return suite != Suite::all && c.suite != suite; });

  std::vector<std::future<VerificationReport>> pending;
  pending.reserve(claims.size());
  for (auto const &claim : claims) {
    pending.push_back(std::async(std::launch::async, [&claim, &config] {
      auto const start = std::chrono::steady_clock::now();
      VerificationReport r;
      try {
        r = claim.run(config);
      } catch (const std::exception &e) {
        r.status = Status::fail;
        r.computed = std::string("error");
        r.expected = std::string("no error");
        r.comparator = "==";
        r.detail = e.what();
      }
      r.claim_id = claim.id;
      r.anchor = claim.anchor;
      r.runtime_ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      return r;
    }));
  }

  std::vector<VerificationReport> reports;
  reports.reserve(pending.size());
  for (auto &f : pending)
    reports.push_back(f.get());
  std::sort(reports.begin(), reports.end(),
            [](const auto &a, const auto &b) { return a.claim_id < b.claim_id; });
  return reports;
}

int exit_code(const std::vector<VerificationReport> &reports)
{
  bool const failed = std::any_of(reports.begin(), reports.end(),
                                  [](const auto &r) { return r.status == Status::fail; });
  return failed ? 1 : 0;
}

std::string render_json(const std::vector<VerificationReport> &reports, Suite suite,
                        const RunConfig &config)
{
  return render_json(reports, to_string(suite), config);
}

std::string render_json(const std::vector<VerificationReport> &reports, std::string_view scope,
                        const RunConfig &config)
{
  json doc;
  doc["schema"] = kReportSchema;
  doc["suite"] = scope;
  doc["config"] = {{"max_n", config.max_n}, {"tolerance", config.tolerance}, {"seed", config.seed}};

  std::int64_t passed = 0, failed = 0, skipped = 0;
  json list = json::array();
  for (auto const &r : reports) {
    json item;
    item["claim_id"] = r.claim_id;
    item["status"] = to_string(r.status);
    item["computed"] = value_to_json(r.computed);
    item["expected"] = value_to_json(r.expected);
    item["comparator"] = r.comparator;
    item["anchor"] = r.anchor;
    item["detail"] = r.detail;
    if (config.timings)
      item["runtime_ms"] = r.runtime_ms;
    list.push_back(std::move(item));
    passed += r.status == Status::pass;
    failed += r.status == Status::fail;
    skipped += r.status == Status::skipped;
  }
  doc["reports"] = std::move(list);
  doc["summary"] = {{"total", static_cast<std::int64_t>(reports.size())},
                    {"passed", passed},
                    {"failed", failed},
                    {"skipped", skipped}};
  return doc.dump(2) + "\n";
}

std::string render_text(const std::vector<VerificationReport> &reports)
{
  std::ostringstream os;
  auto const show = [](const Value &v) {
    return std::visit(
        [](auto const &x) -> std::string {
          using X = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<X, bool>)
            return x ? "true" : "false";
          else if constexpr (std::is_same_v<X, std::string>)
            return x;
          else if constexpr (std::is_same_v<X, double>)
            return fmt_sci(x);
          else
            return std::to_string(x);
        },
        v);
  };
  std::size_t failed = 0;
  for (auto const &r : reports) {
    std::string status = to_string(r.status);
    for (auto &c : status)
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    os << status << "  " << r.claim_id << "  computed=" << show(r.computed) << ' ' << r.comparator
       << " expected=" << show(r.expected);
    if (!r.detail.empty())
      os << "  (" << r.detail << ')';
    os << '\n';
    failed += r.status == Status::fail;
  }
  os << reports.size() << " claims, " << failed << " failed\n";
  return os.str();
}

std::vector<std::string> validate_report_json(std::string_view json_text)
{
  std::vector<std::string> errors;
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    return {std::string("not JSON: ") + e.what()};
  }

  auto const require = [&](const json &obj, const char *key, auto check, const char *what) {
    if (!obj.is_object() || !obj.contains(key) || !check(obj.at(key)))
      errors.push_back(std::string("'") + key + "' missing or not " + what);
  };
  auto const is_string = [](const json &v) { return v.is_string(); };
  auto const is_uint = [](const json &v) { return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0); };
  auto const is_scalar = [](const json &v) {
    return v.is_boolean() || v.is_number() || v.is_string();
  };

  if (!doc.is_object())
    return {"top level is not an object"};
  if (!doc.contains("schema") || doc["schema"] != kReportSchema)
    errors.push_back("'schema' must be \"" + std::string(kReportSchema) + "\"");
  require(doc, "suite", [](const json &v) { return v.is_string() && !v.get<std::string>().empty(); },
          "a nonempty string");
  require(doc, "config", [](const json &v) { return v.is_object(); }, "an object");
  if (doc.contains("config") && doc["config"].is_object()) {
    auto const &c = doc["config"];
    require(c, "max_n", is_uint, "a nonnegative integer");
    require(c, "tolerance", [](const json &v) { return v.is_number() && v.get<double>() > 0; },
            "a positive number");
    require(c, "seed", is_uint, "a nonnegative integer");
  }

  std::set<std::string> ids;
  std::map<std::string, std::string> anchors;
  std::int64_t passed = 0, failed = 0, skipped = 0;
  if (!doc.contains("reports") || !doc["reports"].is_array()) {
    errors.push_back("'reports' missing or not an array");
  } else {
    std::string previous;
    for (auto const &r : doc["reports"]) {
      require(r, "claim_id", [](const json &v) { return v.is_string() && !v.get<std::string>().empty(); },
              "a nonempty string");
      require(r, "status", [](const json &v) {
        return v == "pass" || v == "fail" || v == "skipped";
      }, "pass, fail or skipped");
      require(r, "computed", is_scalar, "a scalar");
      require(r, "expected", is_scalar, "a scalar");
      require(r, "comparator", is_string, "a string");
      require(r, "anchor", [](const json &v) { return v.is_string() && !v.get<std::string>().empty(); },
              "a nonempty string");
      require(r, "detail", is_string, "a string");
      if (r.contains("runtime_ms") && !r["runtime_ms"].is_number())
        errors.push_back("'runtime_ms' present but not a number");
      if (!r.is_object() || !r.contains("claim_id") || !r["claim_id"].is_string())
        continue;
      std::string const id = r["claim_id"];
      if (!ids.insert(id).second)
        errors.push_back("duplicate claim_id " + id);
      if (id < previous)
        errors.push_back("reports not sorted by claim_id at " + id);
      previous = id;
      if (r.contains("status")) {
        passed += r["status"] == "pass";
        failed += r["status"] == "fail";
        skipped += r["status"] == "skipped";
      }
    }
  }

  if (!doc.contains("summary") || !doc["summary"].is_object()) {
    errors.push_back("'summary' missing or not an object");
  } else {
    auto const &s = doc["summary"];
    for (const char *key : {"total", "passed", "failed", "skipped"})
      require(s, key, is_uint, "a nonnegative integer");
    if (errors.empty()) {
      if (s["total"] != static_cast<std::int64_t>(ids.size()) || s["passed"] != passed ||
          s["failed"] != failed || s["skipped"] != skipped)
        errors.push_back("summary counts disagree with reports");
    }
  }
  return errors;
}

} // namespace rigidspace
