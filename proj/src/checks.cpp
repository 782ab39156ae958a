#include "oubraid/checks.hpp"

#include "oubraid/families.hpp"
#include "oubraid/invariants.hpp"
#include "oubraid/layers.hpp"
#include "oubraid/linalg.hpp"
#include "oubraid/warping.hpp"

#include "rng.hpp"

#include <functional>
#include <stdexcept>

namespace oubraid {

namespace {

// A case returns an empty string on success, else a description of the failure.
using CaseFn = std::function<std::string(std::mt19937_64&)>;

int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(detail::uniform_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::string describe(const BraidWord& w) {
  return "n=" + std::to_string(w.strands()) + " word=\"" + format_word(w) + "\"";
}

std::string similarity_case(std::mt19937_64& rng) {
  const int n = draw(rng, 2, 7);
  const BraidWord b = random_braid(n, static_cast<std::size_t>(draw(rng, 0, 30)), rng());
  const IntMatrix base = ou_matrix(b);
  const auto d = det(base);
  const int rk = rank(base);
  const auto cp = charpoly(base);
  const auto o = over_set(base);
  const auto u = under_set(base);
  for (int t = 0; t < 5; ++t) {
    const Permutation pi = random_permutation(n, rng());
    const IntMatrix m = ou_matrix(b, pi);
    if (det(m) != d || rank(m) != rk || charpoly(m) != cp || over_set(m) != o || under_set(m) != u)
      return describe(b) + " pi=" + pi.to_string() + ": invariant changed with the strand order";
  }
  return {};
}

std::string product_case(std::mt19937_64& rng) {
  const int n = draw(rng, 2, 7);
  const BraidWord b = random_braid(n, static_cast<std::size_t>(draw(rng, 0, 20)), rng());
  const BraidWord c = random_braid(n, static_cast<std::size_t>(draw(rng, 0, 20)), rng());
  const Permutation pi = random_permutation(n, rng());
  const BraidWord bc = product(b, c);
  const Permutation rho_b = braid_permutation(b);
  if (ou_matrix(bc, pi) != ou_matrix(b, pi) + ou_matrix(c, compose(pi, rho_b)))
    return describe(b) + " times " + describe(c) + " pi=" + pi.to_string() + ": product formula fails";
  if (braid_permutation(bc) != compose(rho_b, braid_permutation(c)))
    return describe(b) + " times " + describe(c) + ": braid permutation of the product";
  return {};
}

std::string positive_invariance_case(std::mt19937_64& rng) {
  const int n = draw(rng, 2, 7);
  const BraidWord b = random_positive(n, static_cast<std::size_t>(draw(rng, 0, 25)), rng());
  const std::uint64_t move_seed = rng();
  const BraidWord rewritten = random_rewrite(b, 50, move_seed);
  if (braid_permutation(rewritten) != braid_permutation(b))
    return describe(b) + ": rewrite changed the braid permutation";
  for (int t = 0; t < 3; ++t) {
    const Permutation pi = random_permutation(n, rng());
    if (ou_matrix(b, pi) != ou_matrix(rewritten, pi))
      return describe(b) + " rewritten to \"" + format_word(rewritten) + "\" (move seed " +
             std::to_string(move_seed) + ") pi=" + pi.to_string() + ": OU matrix changed";
  }
  return {};
}

BraidWord random_layer(std::mt19937_64& rng, int n) {
  if (n == 1) return BraidWord(1);
  return random_braid(n, static_cast<std::size_t>(draw(rng, 0, 15)), rng());
}

std::string theorem1_case(std::mt19937_64& rng) {
  const int n1 = draw(rng, 1, 7);
  const int n2 = draw(rng, 1, 8 - n1);
  const BraidWord first = random_layer(rng, n1);
  const BraidWord second = random_layer(rng, n2);

  std::vector<int> assignment(static_cast<std::size_t>(n1), 1);
  assignment.insert(assignment.end(), static_cast<std::size_t>(n2), 2);
  for (std::size_t i = assignment.size(); i > 1; --i)
    std::swap(assignment[i - 1], assignment[detail::uniform_below(rng, i)]);

  const BraidWord b = layered_compose(first, second, assignment);
  std::vector<int> s1, s2;
  for (std::size_t p = 0; p < assignment.size(); ++p) (assignment[p] == 1 ? s1 : s2).push_back(static_cast<int>(p) + 1);
  if (!is_valid_layering(b, {s1, s2})) return describe(b) + ": composite is not layered by its assignment";
  if (det_of(b) != det_of(first) * det_of(second))
    return describe(b) + ": det " + det_of(b).get_str() + " != " + det_of(first).get_str() + " * " +
           det_of(second).get_str();
  return {};
}

std::string theorem2_case(std::mt19937_64& rng) {
  const int n = draw(rng, 2, 7);
  const BraidWord b = random_braid(n, static_cast<std::size_t>(draw(rng, 0, 24)), rng());
  if (det_of(b) != 0 && wd_exact(b).value == 0) return describe(b) + ": det != 0 but wd = 0";
  return {};
}

std::string pure_symmetry_case(std::mt19937_64& rng) {
  const int n = draw(rng, 2, 7);
  const BraidWord b = random_positive_pure(n, static_cast<std::size_t>(draw(rng, 0, 20)), rng());
  const std::uint64_t half = b.length() / 2;
  for (int t = 0; t < 10; ++t) {
    const Permutation pi = random_permutation(n, rng());
    if (!is_symmetric(ou_matrix(b, pi))) return describe(b) + " pi=" + pi.to_string() + ": OU matrix not symmetric";
    if (objective(b, pi) != half) return describe(b) + " pi=" + pi.to_string() + ": objective differs from half the length";
  }
  return {};
}

const CaseFn* lookup(std::string_view suite) {
  static const std::vector<std::pair<std::string, CaseFn>> table = {
      {"positive-invariance", positive_invariance_case},
      {"similarity", similarity_case},
      {"product-formula", product_case},
      {"theorem1", theorem1_case},
      {"theorem2", theorem2_case},
      {"pure-symmetry", pure_symmetry_case},
  };
  for (const auto& [name, fn] : table)
    if (name == suite) return &fn;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& check_suites() {
  static const std::vector<std::string> names = {"positive-invariance", "similarity", "product-formula",
                                                 "theorem1",            "theorem2",   "pure-symmetry"};
  return names;
}

CheckResult run_check(std::string_view suite, std::uint64_t seed, std::size_t cases) {
  const CaseFn* fn = lookup(suite);
  if (!fn) throw std::invalid_argument("unknown check suite '" + std::string(suite) + "'");
  CheckResult result{std::string(suite), seed, cases, 0, std::nullopt};
  std::mt19937_64 master(seed);
  for (std::size_t k = 0; k < cases; ++k) {
    const std::uint64_t case_seed = master();
    std::mt19937_64 rng(case_seed);
    std::string failure = (*fn)(rng);
    if (!failure.empty()) {
      result.counterexample = "case " + std::to_string(k) + " (case seed " + std::to_string(case_seed) + "): " + failure;
      break;
    }
    ++result.passed;
  }
  return result;
}

}  // namespace oubraid
