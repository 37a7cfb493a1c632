#include "picardcy/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "picardcy/autgroup.hpp"
#include "picardcy/ball_model.hpp"
#include "picardcy/divisor_ledger.hpp"
#include "picardcy/hermitian.hpp"
#include "picardcy/hilbert.hpp"
#include "picardcy/resgroup.hpp"
#include "picardcy/variety.hpp"

namespace picardcy {

namespace {

struct Outcome {
  bool pass;
  std::string expected;
  std::string actual;
};

// Lazily computed values shared between checks within one run.
class Context {
 public:
  explicit Context(const RunOptions& o) : opts(o) {}

  const FiniteMatrixGroup& gprime() {
    if (!gprime_) gprime_ = gprime_image();
    return *gprime_;
  }
  const std::vector<ProjPoint>& nodes() {
    if (!nodes_) nodes_ = singular_points();
    return *nodes_;
  }

  const RunOptions& opts;

 private:
  std::optional<FiniteMatrixGroup> gprime_;
  std::optional<std::vector<ProjPoint>> nodes_;
};

std::string scalar_name(const ResidueMatrix& m) {
  Mod3Residue u = m(0, 0);
  if (u == Mod3Residue(1, 0)) return "+id";
  if (u == Mod3Residue(2, 0)) return "-id";
  return "(" + std::to_string(u.a()) + "+" + std::to_string(u.b()) + "*z)id";
}

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

std::string fmt(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

Outcome check_group_order(Context& ctx) {
  std::size_t n = ctx.gprime().order();
  return {n == 486, "486", std::to_string(n)};
}

Outcome check_scalars(Context& ctx) {
  auto sc = scalar_subgroup(ctx.gprime());
  std::string actual = "{";
  for (std::size_t i = 0; i < sc.size(); ++i) actual += (i ? "," : "") + scalar_name(sc[i]);
  actual += "}";
  bool has_minus = ctx.gprime().contains(ResidueMatrix::scalar({2, 0}));
  return {sc.size() == 2 && has_minus, "{+id,-id}", actual};
}

Outcome check_degree(Context& ctx) {
  std::size_t d = covering_degree(ctx.gprime());
  return {d == 243, "243", std::to_string(d)};
}

Outcome check_nodes_count(Context& ctx) {
  std::size_t n = ctx.nodes().size();
  return {n == kExpectedNodes, "108", std::to_string(n)};
}

Outcome check_nodes_a1(Context& ctx) {
  std::size_t ok = 0;
  for (const auto& p : ctx.nodes())
    if (is_node(p)) ++ok;
  return {ok == kExpectedNodes, "108 of 108 rank-4 tangent cones", std::to_string(ok) + " of " + std::to_string(ctx.nodes().size()) + " rank-4 tangent cones"};
}

Outcome check_h_order(Context&) {
  std::size_t n = h_group().size();
  std::size_t perm = 0, torus = 0;
  for (const auto& g : h_group()) {
    if (g.scalars() == std::array<Mu3, 6>{}) ++perm;
    if (g.is_torus()) ++torus;
  }
  std::string actual = std::to_string(n) + " (permutations " + std::to_string(perm) + ", torus " + std::to_string(torus) + ")";
  return {n == kHOrder && perm == kPermutationPartOrder && torus == kTorusPartOrder, "5832 (permutations 72, torus 81)", actual};
}

Outcome check_chi_hom(Context& ctx) {
  const auto& h = h_group();
  std::size_t tested = 0, bad = 0;
  auto test = [&](const MonomialAut& a, const MonomialAut& b) {
    ++tested;
    if (!(chi(compose(a, b)) == chi(a) * chi(b))) ++bad;
  };
  for (const auto& a : h_generators())
    for (const auto& b : h_generators()) test(a, b);
  std::mt19937_64 rng(ctx.opts.seed);
  std::uniform_int_distribution<std::size_t> pick(0, h.size() - 1);
  for (int i = 0; i < 1000; ++i) test(h[pick(rng)], h[pick(rng)]);
  return {bad == 0, "0 violations", std::to_string(bad) + " violations in " + std::to_string(tested) + " pairs"};
}

Outcome check_chi_kernel(Context&) {
  std::size_t k = 0;
  for (const auto& g : h_group())
    if (chi(g).is_one()) ++k;
  std::size_t image = chi_image().size();
  std::string actual = std::to_string(k) + " (index " + std::to_string(h_group().size() / std::max<std::size_t>(k, 1)) +
                       ", image size " + std::to_string(image) + ")";
  return {k == kChiKernelOrder && image == 6, "972 (index 6, image size 6)", actual};
}

Outcome check_chi_pullback(Context&) {
  std::size_t agree = 0;
  for (const auto& g : h_group())
    if (chi_via_pullback(g) == chi(g)) ++agree;
  return {agree == kHOrder, "5832 of 5832", std::to_string(agree) + " of " + std::to_string(h_group().size())};
}

Outcome check_divisors_effective(Context&) {
  std::size_t good = 0;
  for (const auto& rec : effectivity_report()) {
    bool ones = true;
    for (int m : rec.divisor.support()) ones = ones && rec.divisor[m] == 1;
    if (rec.effective && rec.support_size == 6 && ones) ++good;
  }
  return {good == kCFormCount, "10 of 10 effective with six multiplicity-1 mirrors", std::to_string(good) + " of 10 effective with six multiplicity-1 mirrors"};
}

Outcome check_c1_support(Context&) {
  Divisor d = divisor_of(c_word(1));
  std::vector<int> expected(kGPrimeMirrors.begin(), kGPrimeMirrors.end());
  bool ones = true;
  for (int m : d.support()) ones = ones && d[m] == 1;
  return {d.support() == expected && ones, join(expected), join(d.support())};
}

Outcome check_trivial_multiplier(Context&) {
  bool ok = trivial_multiplier_support_check();
  return {ok, "disjoint", ok ? "disjoint" : "intersecting"};
}

Outcome check_hilbert_oracle(Context&) {
  std::vector<int> mismatches;
  for (long k = 0; k <= 12; ++k)
    if (ci_dim(k) != ci_dim_oracle(k)) mismatches.push_back(static_cast<int>(k));
  return {mismatches.empty(), "agree for k=0..12", mismatches.empty() ? "agree for k=0..12" : "mismatch at " + join(mismatches)};
}

Outcome check_leading_ratio(Context& ctx) {
  Cubic hp = hilbert_polynomial_ci();
  BigInt ratio = covering_degree_from_leading();
  std::size_t group = covering_degree(ctx.gprime());
  std::ostringstream actual;
  actual << "leading " << fmt(hp.coeffs[3]) << ", ratio " << ratio << ", group covering degree " << group
         << "; polynomial " << fmt(hp.coeffs[3]) << " k^3 + " << fmt(hp.coeffs[2]) << " k^2 + " << fmt(hp.coeffs[1])
         << " k + " << fmt(hp.coeffs[0]);
  bool ok = hp.leading() == Rational(3, 2) && ratio == 243 && ratio == group;
  return {ok, "leading 3/2, ratio 243, group covering degree 243", actual.str()};
}

Outcome check_dim_table(Context&) {
  std::string actual;
  for (long k = 0; k <= 4; ++k) actual += (k ? " " : "") + dim_g33(k).str();
  return {actual == "1 15 130 750 3115", "1 15 130 750 3115", actual};
}

Outcome check_dim_integrality(Context&) {
  std::vector<int> bad;
  for (long k = 1; k <= 1000; ++k)
    if (denominator(dim_g33_cubic()(Rational(k))) != 1) bad.push_back(static_cast<int>(k));
  return {bad.empty(), "integral for k=1..1000", bad.empty() ? "integral for k=1..1000" : "non-integral at " + join(bad)};
}

Outcome check_jacobian(Context& ctx) {
  double worst = 0.0;
  int n = ctx.opts.jacobian_samples;
  for (int i = 0; i < n; ++i) {
    auto s = ctx.opts.seed * 1000003ULL + static_cast<std::uint64_t>(i);
    CMatrix g = random_triflection_product(s, 1 + i % 4);
    BallPoint z = sample_ball_point(s);
    worst = std::max(worst, jacobian_lemma_check(g, z));
  }
  std::ostringstream exp, act;
  exp << "max relative error <= " << ctx.opts.tolerance << " over >= 100 samples";
  act << "max relative error " << worst << " over " << n << " samples";
  return {n >= 100 && worst <= ctx.opts.tolerance, exp.str(), act.str()};
}

Outcome check_substitution(Context&) {
  bool ok = substitution_identity_check();
  return {ok, "both relations reproduced up to sign", ok ? "both relations reproduced up to sign" : "mismatch"};
}

Outcome check_mirror_norms(Context&) {
  std::vector<int> bad;
  for (int l = 1; l <= MirrorTable::kSize; ++l) {
    HermVector b = mirror_table().vector(l);
    if (!(herm_form(b, b) == CycRat(-1))) bad.push_back(l);
  }
  return {bad.empty(), "all 15 norms -1", bad.empty() ? "all 15 norms -1" : "norm != -1 at " + join(bad)};
}

struct CheckDef {
  std::string id;
  std::string citation;
  std::function<Outcome(Context&)> fn;
};

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"group-order-486", "claim: [G' : G3[3]] = 486", check_group_order},
      {"scalars-pm1", "claim: -id lies in G'", check_scalars},
      {"degree-243", "claim: covering degree of X(G3[3]) -> X(G') is 243", check_degree},
      {"nodes-108", "claim: X has 108 singular points", check_nodes_count},
      {"nodes-all-A1", "claim: every singular point of X is a node", check_nodes_a1},
      {"h-order-5832", "claim: |H| = 72 * 81 = 5832", check_h_order},
      {"chi-homomorphism", "claim: chi is a character of H", check_chi_hom},
      {"chi-kernel-972", "claim: ker(chi) has order 972 and index 6", check_chi_kernel},
      {"chi-pullback-agree", "claim: chi is the action of H on the residue of omega", check_chi_pullback},
      {"divisors-effective", "claim: each C_i vanishes on six short mirrors", check_divisors_effective},
      {"divisor-c1-support", "claim: C1^2 vanishes on mirrors 1,2,7,8,9,10", check_c1_support},
      {"trivial-multiplier-supports", "claim: B6,B7,B8,B9,B12,B13 avoid the six G' mirrors", check_trivial_multiplier},
      {"hilbert-ci-oracle", "claim: Hilbert function of the two-cubic complete intersection", check_hilbert_oracle},
      {"hilbert-leading-ratio-243", "claim: (729/2) / (3/2) = 243 = covering degree", check_leading_ratio},
      {"dim-table", "table: dim [G3[3], k] for k <= 4", check_dim_table},
      {"dim-integrality", "table: dim [G3[3], k] cubic for k > 4", check_dim_integrality},
      {"jacobian-lemma", "claim: Jacobian of z -> g<z> is det(g) j(g,z)^-(n+1)", check_jacobian},
      {"substitution-identity", "claim: X0..X5 -> -B6, B8, B13, B7, B9, -B12 maps the cubics to the relations", check_substitution},
      {"mirror-norms", "table: short-mirror representatives have norm -1", check_mirror_norms},
  };
  return defs;
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::error: return "error";
  }
  return "error";
}

bool Report::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.status == CheckStatus::pass; });
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> v;
    for (const auto& d : registry()) v.push_back(d.id);
    return v;
  }();
  return ids;
}

std::string check_citation(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d.citation;
  throw UnknownCheckError("unknown check id: " + id);
}

Report run(const RunOptions& opts) {
  for (const auto& id : opts.checks)
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end())
      throw UnknownCheckError("unknown check id: " + id);

  Report report;
  report.seed = opts.seed;
  Context ctx(opts);
  for (const auto& def : registry()) {
    if (!opts.checks.empty() && std::find(opts.checks.begin(), opts.checks.end(), def.id) == opts.checks.end()) continue;
    CheckResult r;
    r.check_id = def.id;
    r.citation = def.citation;
    auto start = std::chrono::steady_clock::now();
    try {
      Outcome o = def.fn(ctx);
      r.status = o.pass ? CheckStatus::pass : CheckStatus::fail;
      r.expected = std::move(o.expected);
      r.actual = std::move(o.actual);
    } catch (const std::exception& e) {
      r.status = CheckStatus::error;
      r.actual = std::string("exception: ") + e.what();
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    report.results.push_back(std::move(r));
  }
  return report;
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json out;
  out["schema_version"] = r.schema_version;
  out["seed"] = r.seed;
  out["results"] = nlohmann::ordered_json::array();
  for (const auto& c : r.results) {
    nlohmann::ordered_json j;
    j["check_id"] = c.check_id;
    j["status"] = to_string(c.status);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["runtime_ms"] = c.runtime_ms;
    j["citation"] = c.citation;
    out["results"].push_back(std::move(j));
  }
  return out;
}

std::string to_text(const Report& r) {
  std::ostringstream os;
  for (const auto& c : r.results) {
    os << (c.status == CheckStatus::pass ? "PASS " : c.status == CheckStatus::fail ? "FAIL " : "ERROR") << "  "
       << c.check_id << "  expected: " << c.expected << "  actual: " << c.actual << "  (" << c.runtime_ms << " ms)\n";
  }
  return os.str();
}

}  // namespace picardcy
