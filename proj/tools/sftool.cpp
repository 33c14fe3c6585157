// Command-line surface: construct the product families, export function
// tables, verify planarity/APN/axioms, compute nuclei, gamma ranks, and the
// parameter catalog, and emit JSON reports.
//
// Exit codes: 0 = success / verified true, 1 = verified false, 2 = usage or
// parameter error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semifield/gamma.hpp"
#include "semifield/gf.hpp"
#include "semifield/invariants.hpp"
#include "semifield/io.hpp"
#include "semifield/nuclei.hpp"
#include "semifield/products.hpp"
#include "semifield/vecfn.hpp"

using namespace semifield;
using nlohmann::ordered_json;

namespace {

struct Options {
  std::string family;
  std::uint32_t p = 3;
  std::uint32_t m = 3;
  std::uint32_t k = 1;
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  std::uint32_t i = 0;
  std::int64_t alpha = -1;  // -1 = canonical default
  std::int64_t c = -1;
  std::int64_t omega = -1;
  std::int64_t beta = -1;
  std::string modulus;
  std::uint64_t seed = 0;
  unsigned threads = 2;
  bool json = false;
};

std::vector<std::uint32_t> parse_modulus(const std::string& csv) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  return out;
}

std::string modulus_to_string(const std::vector<std::uint32_t>& mod) {
  std::string s;
  for (std::size_t i = 0; i < mod.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(mod[i]);
  }
  return s;
}

Field build_field(std::uint32_t p, std::uint32_t m, const std::string& modulus_csv) {
  if (modulus_csv.empty()) return Field(p, m);
  return Field(p, m, parse_modulus(modulus_csv));
}

void add_family_options(CLI::App* cmd, Options& o, bool with_family = true) {
  if (with_family)
    cmd->add_option("--family", o.family,
                    "family: field, two-param, dickson, diamond, bh, apn-two-param, "
                    "weng1, weng2, weng3")
        ->required();
  cmd->add_option("--p", o.p, "characteristic");
  cmd->add_option("--m", o.m, "base degree m (pairs live over F_{p^m})");
  cmd->add_option("--k", o.k, "twist exponent k (x^(p^k))");
  cmd->add_option("--r", o.r, "sigma exponent r (sigma = x^(p^r))");
  cmd->add_option("--s", o.s, "B-H exponent s");
  cmd->add_option("--i", o.i, "sigma exponent i for the characteristic-2 family");
  cmd->add_option("--alpha", o.alpha, "alpha element index (default: canonical)");
  cmd->add_option("--c", o.c, "diamond shift c element index");
  cmd->add_option("--omega", o.omega, "B-H omega element index (default: canonical)");
  cmd->add_option("--beta", o.beta, "B-H beta element index (default: canonical)");
  cmd->add_option("--modulus", o.modulus, "field modulus, low-degree-first coefficients");
  cmd->add_option("--seed", o.seed, "seed for randomized phases");
  cmd->add_option("--threads", o.threads, "worker cap (results are thread-independent)");
}

// Owns the fields a product points into.
struct ProductHandle {
  std::vector<std::unique_ptr<Field>> fields;
  std::unique_ptr<Product> product;
  std::string family;
};

ProductHandle make_product(const Options& o) {
  ProductHandle h;
  h.family = o.family;
  if (o.family == "field") {
    h.fields.push_back(std::make_unique<Field>(build_field(o.p, o.m, o.modulus)));
    h.product = std::make_unique<FieldProduct>(*h.fields[0]);
  } else if (o.family == "two-param" || o.family == "dickson") {
    h.fields.push_back(std::make_unique<Field>(build_field(o.p, o.m, o.modulus)));
    std::uint32_t k = o.family == "dickson" ? 0 : o.k;
    std::optional<elem_t> alpha;
    if (o.alpha >= 0) alpha = static_cast<elem_t>(o.alpha);
    h.product = std::make_unique<TwoParamProduct>(TwoParamSpec(*h.fields[0], k, o.r, alpha));
  } else if (o.family == "diamond") {
    h.fields.push_back(std::make_unique<Field>(build_field(o.p, o.m, o.modulus)));
    std::optional<elem_t> alpha;
    if (o.alpha >= 0) alpha = static_cast<elem_t>(o.alpha);
    TwoParamSpec base(*h.fields[0], o.k, 0, alpha);
    elem_t c = o.c >= 0 ? static_cast<elem_t>(o.c) : 1;
    h.product = std::make_unique<DiamondProduct>(DiamondSpec(base, c));
  } else if (o.family == "bh") {
    h.fields.push_back(std::make_unique<Field>(build_field(o.p, 2 * o.m, o.modulus)));
    h.fields.push_back(std::make_unique<Field>(o.p, o.m));
    std::optional<elem_t> omega, beta;
    if (o.omega >= 0) omega = static_cast<elem_t>(o.omega);
    if (o.beta >= 0) beta = static_cast<elem_t>(o.beta);
    BhSpec spec = make_bh_spec(*h.fields[0], o.s, omega, beta);
    h.product = std::make_unique<BhPairProduct>(make_bh_pair_product(spec, *h.fields[1]));
  } else {
    throw std::invalid_argument("no product form for family '" + o.family + "'");
  }
  return h;
}

VecFn make_function(const Options& o) {
  if (o.family == "field") {
    Field F = build_field(o.p, o.m, o.modulus);
    return monomial_fn(F, 2);
  }
  if (o.family == "two-param" || o.family == "dickson") {
    Field F = build_field(o.p, o.m, o.modulus);
    std::optional<elem_t> alpha;
    if (o.alpha >= 0) alpha = static_cast<elem_t>(o.alpha);
    return two_param_planar_fn(TwoParamSpec(F, o.family == "dickson" ? 0 : o.k, o.r, alpha));
  }
  if (o.family == "diamond") {
    Field F = build_field(o.p, o.m, o.modulus);
    std::optional<elem_t> alpha;
    if (o.alpha >= 0) alpha = static_cast<elem_t>(o.alpha);
    TwoParamSpec base(F, o.k, 0, alpha);
    return diamond_planar_fn(DiamondSpec(base, o.c >= 0 ? static_cast<elem_t>(o.c) : 1));
  }
  if (o.family == "bh") {
    Field K = build_field(o.p, 2 * o.m, o.modulus);
    std::optional<elem_t> omega, beta;
    if (o.omega >= 0) omega = static_cast<elem_t>(o.omega);
    if (o.beta >= 0) beta = static_cast<elem_t>(o.beta);
    return bh_function(make_bh_spec(K, o.s, omega, beta));
  }
  if (o.family == "apn-two-param") {
    Field F = build_field(o.p, o.m, o.modulus);
    elem_t alpha = o.alpha >= 0 ? static_cast<elem_t>(o.alpha) : F.generator();
    return apn_two_param_fn(F, o.k, o.i, alpha);
  }
  if (o.family == "weng1" || o.family == "weng2" || o.family == "weng3")
    return sporadic_planar(sporadic_by_name(o.family));
  throw std::invalid_argument("unknown family '" + o.family + "'");
}

InvariantReport build_report(const Options& o, bool with_gamma) {
  if (o.family == "two-param" || o.family == "dickson") {
    Field F = build_field(o.p, o.m, o.modulus);
    std::optional<elem_t> alpha;
    if (o.alpha >= 0) alpha = static_cast<elem_t>(o.alpha);
    TwoParamProduct P(TwoParamSpec(F, o.family == "dickson" ? 0 : o.k, o.r, alpha));
    return invariant_report_for_two_param(P, o.seed, o.threads);
  }
  if (o.family == "diamond") {
    Field F = build_field(o.p, o.m, o.modulus);
    std::optional<elem_t> alpha;
    if (o.alpha >= 0) alpha = static_cast<elem_t>(o.alpha);
    DiamondSpec spec(TwoParamSpec(F, o.k, 0, alpha), o.c >= 0 ? static_cast<elem_t>(o.c) : 1);
    DiamondProduct P(spec);
    InvariantReport rep;
    rep.family = "diamond";
    rep.p = F.p();
    rep.dim = 2 * F.m();
    rep.params = {{"m", F.m()},
                  {"k", spec.base.k},
                  {"alpha", spec.base.alpha},
                  {"c", spec.c},
                  {"nonsquare_shift", spec.nonsquare_shift ? 1 : 0}};
    rep.modulus = F.spec().modulus;
    VecFn f = diamond_planar_fn(spec);
    rep.planar = is_planar(f, o.threads);
    rep.spectrum = diff_spectrum(f);
    rep.axioms = check_axioms(P);
    StarSemifield S(P, pair_index(F, {1, 0}));
    bool biadd = S.size() > 4096 && product_is_biadditive(S, o.threads);
    NucleusReport nrep;
    nrep.left = nucleus_set(S, NucleusKind::left, o.seed, o.threads, biadd);
    nrep.middle = nucleus_set(S, NucleusKind::middle, o.seed, o.threads, biadd);
    nrep.right = nucleus_set(S, NucleusKind::right, o.seed, o.threads, biadd);
    nrep.nucleus = intersect_sorted(intersect_sorted(nrep.left, nrep.middle), nrep.right);
    nrep.left_is_field = verify_nucleus_field(S, S.unit(), nrep.left);
    nrep.middle_is_field = verify_nucleus_field(S, S.unit(), nrep.middle);
    nrep.right_is_field = verify_nucleus_field(S, S.unit(), nrep.right);
    nrep.nucleus_is_field = verify_nucleus_field(S, S.unit(), nrep.nucleus);
    rep.nuclei = std::move(nrep);
    return rep;
  }
  // function-only families
  Options local = o;
  InvariantReport rep = invariant_report_for_fn(make_function(o), o.family, with_gamma, o.threads);
  if (o.family == "bh") {
    rep.params = {{"m", o.m}, {"s", o.s}};
  } else if (o.family == "apn-two-param") {
    Field F = build_field(o.p, o.m, o.modulus);
    rep.params = {{"m", o.m},
                  {"k", o.k},
                  {"i", o.i},
                  {"alpha", o.alpha >= 0 ? o.alpha : F.generator()}};
    rep.modulus = F.spec().modulus;
  }
  (void)local;
  return rep;
}

int run_field(const Options& o) {
  Field F = build_field(o.p, o.m, o.modulus);
  if (o.json) {
    ordered_json j;
    j["p"] = F.p();
    j["m"] = F.m();
    j["q"] = F.q();
    j["modulus"] = F.spec().modulus;
    j["generator"] = F.generator();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "F_" << F.q() << " = GF(" << F.p() << "^" << F.m() << ")\n"
              << "modulus (low-first): " << modulus_to_string(F.spec().modulus) << "\n"
              << "primitive element index: " << F.generator() << "\n";
  }
  return 0;
}

int run_construct(const Options& o, const std::string& out, const std::string& as) {
  if (as == "planar") {
    write_function_table(out, make_function(o));
  } else if (as == "square") {
    ProductHandle h = make_product(o);
    write_function_table(out, square_map(*h.product));
  } else if (as == "product") {
    ProductHandle h = make_product(o);
    const PrimeGroup& G = h.product->domain();
    VecFn t = make_vecfn(G.p(), 2 * G.dim());
    const elem_t n = h.product->size();
    for (elem_t x = 0; x < n; ++x)
      for (elem_t y = 0; y < n; ++y)
        t.table[x + std::size_t(n) * y] = h.product->eval(x, y);
    write_function_table(out, t);
  } else {
    throw std::invalid_argument("--as must be planar, square or product");
  }
  std::cout << "wrote " << out << "\n";
  return 0;
}

int run_verify(const Options& o, const std::string& in, bool planar, bool apn, bool axioms) {
  if (int(planar) + int(apn) + int(axioms) != 1)
    throw std::invalid_argument("pick exactly one of --planar, --apn, --axioms");
  if (axioms) {
    if (!in.empty()) throw std::invalid_argument("--axioms needs --family, not --in");
    ProductHandle h = make_product(o);
    AxiomReport rep = check_axioms(*h.product, 1'000'000, o.seed);
    bool ok = rep.distributive() && rep.no_zero_divisors;
    if (o.json) {
      ordered_json j;
      j["left_distributive"] = rep.left_distributive;
      j["right_distributive"] = rep.right_distributive;
      j["commutative"] = rep.commutative;
      j["no_zero_divisors"] = rep.no_zero_divisors;
      j["unit"] = rep.unit ? ordered_json(*rep.unit) : nullptr;
      j["exhaustive"] = rep.exhaustive;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "distributive: " << (rep.distributive() ? "yes" : "no")
                << "\ncommutative: " << (rep.commutative ? "yes" : "no")
                << "\nno zero divisors: " << (rep.no_zero_divisors ? "yes" : "no")
                << "\nunit: " << (rep.unit ? std::to_string(*rep.unit) : "none")
                << "\nmode: " << (rep.exhaustive ? "exhaustive" : "sampled") << "\n";
    }
    return ok ? 0 : 1;
  }
  VecFn f = in.empty() ? make_function(o) : read_function_table(in);
  bool verdict = planar ? is_planar(f, o.threads) : is_apn(f, o.threads);
  const char* what = planar ? "planar" : "apn";
  if (o.json) {
    ordered_json j;
    j[what] = verdict;
    j["p"] = f.p;
    j["n"] = f.dim;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << what << ": " << (verdict ? "true" : "false") << "\n";
  }
  return verdict ? 0 : 1;
}

int run_nuclei(const Options& o) {
  InvariantReport rep = build_report(o, false);
  if (!rep.nuclei) throw std::invalid_argument("family has no product form for nuclei");
  const NucleusReport& n = *rep.nuclei;
  if (o.json) {
    std::cout << report_to_json(rep)["nuclei"].dump(2) << "\n";
  } else {
    std::cout << "|N_l| = " << n.left.size() << "\n|N_m| = " << n.middle.size()
              << "\n|N_r| = " << n.right.size() << "\n|N|   = " << n.nucleus.size() << "\n";
    if (n.predicted_middle)
      std::cout << "predicted |N_m| = " << n.predicted_middle
                << ", predicted |N| = " << n.predicted_nucleus << "\n";
    std::cout << "all nuclei verified as fields: "
              << ((n.left_is_field && n.middle_is_field && n.right_is_field &&
                   n.nucleus_is_field)
                      ? "yes"
                      : "no")
              << "\n";
  }
  return 0;
}

int run_gamma(const Options& o, const std::string& in, bool sweep) {
  if (sweep) {
    if (o.family != "apn-two-param")
      throw std::invalid_argument("--sweep applies to --family apn-two-param");
    // all irreducible moduli of degree m over F_2, all primitive alpha
    std::vector<std::vector<std::uint32_t>> mods;
    std::uint64_t total = ipow(2, o.m);
    for (std::uint64_t t = 0; t < total; ++t) {
      std::vector<std::uint32_t> f(o.m + 1, 0);
      f[o.m] = 1;
      std::uint64_t v = t;
      for (std::uint32_t idx = 0; idx < o.m; ++idx) {
        std::uint64_t w = ipow(2, o.m - 1 - idx);
        f[idx] = static_cast<std::uint32_t>(v / w);
        v %= w;
      }
      if (poly::irreducible(f, 2)) mods.push_back(f);
    }
    std::vector<std::uint32_t> ranks_seen;
    for (const auto& mod : mods) {
      Field F(2, o.m, mod);
      for (elem_t a = 1; a < F.q(); ++a) {
        if (std::gcd<std::uint64_t>(F.dlog(a), F.q() - 1) != 1) continue;  // not primitive
        VecFn f = apn_two_param_fn(F, o.k, o.i, a);
        std::uint32_t rk = gamma_rank(f, o.threads);
        std::cout << "modulus=" << modulus_to_string(mod) << " alpha=" << a
                  << " rank=" << rk << "\n";
        bool seen = false;
        for (std::uint32_t r : ranks_seen) seen |= (r == rk);
        if (!seen) ranks_seen.push_back(rk);
      }
    }
    std::cout << "distinct ranks:";
    for (std::uint32_t r : ranks_seen) std::cout << " " << r;
    std::cout << "\n";
    return 0;
  }
  VecFn f = in.empty() ? make_function(o) : read_function_table(in);
  std::uint32_t rank = gamma_rank(f, o.threads);
  if (o.json) {
    ordered_json j;
    j["gamma_rank"] = rank;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rank << "\n";
  }
  return 0;
}

int run_enumerate(const Options& o) {
  ClassCatalog cat = enumerate_catalog(o.p, o.m);
  if (o.json) {
    ordered_json j;
    j["p"] = cat.p;
    j["m"] = cat.m;
    ordered_json pairs = ordered_json::array();
    for (auto [k, r] : cat.pairs) pairs.push_back({{"k", k}, {"r", r}});
    j["pairs"] = pairs;
    j["raw_count"] = cat.raw_count;
    j["formula_semifields"] = cat.formula_semifields;
    j["formula_planar"] = cat.formula_planar;
    j["mismatch"] = cat.mismatch;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "canonical (k, r) pairs:";
    for (auto [k, r] : cat.pairs) std::cout << " (" << k << "," << r << ")";
    std::cout << "\nraw count: " << cat.raw_count
              << "\nsemifield classes (formula): " << cat.formula_semifields
              << "\nplanar classes (formula): " << cat.formula_planar << "\n";
    if (cat.mismatch)
      std::cout << "note: raw range count differs from the formula (not reconciled)\n";
  }
  return 0;
}

int run_report(const Options& o, bool with_gamma, const std::string& out) {
  InvariantReport rep = build_report(o, with_gamma);
  ordered_json j = report_to_json(rep);
  if (out.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open for writing: " + out);
    os << j.dump(2) << "\n";
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"semifield / planar-function toolkit"};
  app.require_subcommand(1);

  Options o;
  std::string in_path, out_path, as_kind = "planar";
  bool planar = false, apn = false, axioms = false, sweep = false, with_gamma = false;

  CLI::App* c_field = app.add_subcommand("field", "build and describe a finite field");
  c_field->add_option("--p", o.p, "characteristic")->required();
  c_field->add_option("--m", o.m, "degree")->required();
  c_field->add_option("--modulus", o.modulus, "modulus, low-degree-first coefficients");
  c_field->add_flag("--json", o.json, "machine output");

  CLI::App* c_construct = app.add_subcommand("construct", "tabulate a family function");
  add_family_options(c_construct, o);
  c_construct->add_option("--out", out_path, "output table path")->required();
  c_construct->add_option("--as", as_kind, "planar (default), square, or product");

  CLI::App* c_verify = app.add_subcommand("verify", "verify planarity / APN / axioms");
  add_family_options(c_verify, o, false);
  c_verify->add_option("--family", o.family, "family name (alternative to --in)");
  c_verify->add_option("--in", in_path, "function table file");
  c_verify->add_flag("--planar", planar, "check planarity");
  c_verify->add_flag("--apn", apn, "check APN");
  c_verify->add_flag("--axioms", axioms, "check presemifield axioms");
  c_verify->add_flag("--json", o.json, "machine output");

  CLI::App* c_nuclei = app.add_subcommand("nuclei", "compute left/middle/right nuclei");
  add_family_options(c_nuclei, o);
  c_nuclei->add_flag("--json", o.json, "machine output");

  CLI::App* c_gamma = app.add_subcommand("gamma-rank", "GF(2) rank of the developed graph");
  add_family_options(c_gamma, o, false);
  c_gamma->add_option("--family", o.family, "family name (alternative to --in)");
  c_gamma->add_option("--in", in_path, "function table file");
  c_gamma->add_flag("--sweep", sweep, "sweep moduli and primitive alpha");
  c_gamma->add_flag("--json", o.json, "machine output");

  CLI::App* c_enum = app.add_subcommand("enumerate", "canonical parameter catalog and counts");
  c_enum->add_option("--p", o.p, "characteristic")->required();
  c_enum->add_option("--m", o.m, "degree")->required();
  c_enum->add_flag("--json", o.json, "machine output");

  CLI::App* c_report = app.add_subcommand("report", "full invariant report as JSON");
  add_family_options(c_report, o);
  c_report->add_flag("--gamma", with_gamma, "include the gamma rank (p = 2 families)");
  c_report->add_option("--out", out_path, "write JSON here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_field)) return run_field(o);
    if (app.got_subcommand(c_construct)) return run_construct(o, out_path, as_kind);
    if (app.got_subcommand(c_verify)) return run_verify(o, in_path, planar, apn, axioms);
    if (app.got_subcommand(c_nuclei)) return run_nuclei(o);
    if (app.got_subcommand(c_gamma)) return run_gamma(o, in_path, sweep);
    if (app.got_subcommand(c_enum)) return run_enumerate(o);
    if (app.got_subcommand(c_report)) return run_report(o, with_gamma, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
