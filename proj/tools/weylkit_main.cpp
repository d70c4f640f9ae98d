// weylkit: batch CLI over the root-system / Weyl-group library.
//
// Exit codes: 0 success, 1 verification mismatch, 2 argument errors.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylkit/branes.hpp"
#include "weylkit/closedsets.hpp"
#include "weylkit/fixedpoints.hpp"
#include "weylkit/mirror.hpp"
#include "weylkit/quivers.hpp"
#include "weylkit/rootsys.hpp"
#include "weylkit/weyl.hpp"

using json = nlohmann::ordered_json;
using namespace weylkit;

namespace {

long long weyl_guard() {
  if (const char* env = std::getenv("WEYLKIT_WEYL_GUARD")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("WEYLKIT_WEYL_GUARD is not an integer");
    }
  }
  return kDefaultWeylGuard;
}

void print_table(const json& j, std::ostream& out, int indent = 0) {
  std::string pad(indent, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && v[0].is_structured())) {
        out << pad << k << ":\n";
        print_table(v, out, indent + 2);
      } else {
        out << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
            << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) print_table(v, out, indent);
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& j, const std::string& format) {
  if (format == "table")
    print_table(j, std::cout);
  else
    std::cout << j.dump(2) << "\n";
}

std::vector<long long> parse_composition(const std::string& text) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    std::size_t pos = 0;
    long long v = std::stoll(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad composition entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty composition");
  return out;
}

json subset_json(SimpleSet s) {
  json arr = json::array();
  for (int i : set_indices(s)) arr.push_back(i + 1);
  return arr;
}

json words_json(const WeylGroup& W, const std::vector<int>& ids) {
  json arr = json::array();
  for (int id : ids) arr.push_back(W.word_string(id));
  return arr;
}

json diagram_json(const BraneDiagram& d) {
  json branes = json::array(), gaps = json::array();
  for (Brane b : d.branes) branes.push_back(b == Brane::D5 ? "D" : "N");
  for (long long g : d.gaps) gaps.push_back(g);
  return json{{"text", format_diagram(d)}, {"branes", branes}, {"gaps", gaps}};
}

json quiver_json(const QuiverDatum& q) {
  json edges = json::array();
  for (auto [a, b] : q.edges) edges.push_back(json::array({a, b}));
  return json{{"vertices", q.num_vertices()},
              {"edges", edges},
              {"n", q.n},
              {"m", q.m},
              {"higgs_dim", higgs_dim(q)},
              {"coulomb_dim", coulomb_dim(q)}};
}

// Quiver builder specs: "linear:4,3,2,1", "star:2,1", "full-star:2,1",
// "point:3" (one gauge vertex of dim d framed by d).
QuiverDatum parse_quiver_spec(const std::string& spec) {
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("quiver spec needs the form kind:numbers");
  std::string kind = spec.substr(0, colon);
  std::vector<long long> nums = parse_composition(spec.substr(colon + 1));
  if (kind == "linear") return linear_quiver(nums);
  if (kind == "star") return star_quiver(nums);
  if (kind == "full-star") return full_star_quiver(nums);
  if (kind == "point") {
    if (nums.size() != 1 || nums[0] < 1)
      throw std::invalid_argument("point spec needs one positive dimension");
    QuiverDatum q;
    q.n = {nums[0]};
    q.m = {nums[0]};
    return q;
  }
  throw std::invalid_argument("unknown quiver kind '" + kind + "'");
}

BraneDescriptor parse_brane(const std::string& spec, int rank) {
  std::size_t colon = spec.find(':');
  BraneDescriptor d;
  d.kind = parse_brane_kind(colon == std::string::npos ? spec : spec.substr(0, colon));
  d.subset = colon == std::string::npos
                 ? 0
                 : parse_simple_set(spec.substr(colon + 1), rank);
  return d;
}

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---- subcommand bodies ------------------------------------------------

json run_roots(const std::string& type) {
  RootSystem sys = build_root_system(type, weyl_guard());
  json roots = json::array();
  for (int r = 0; r < sys.num_roots(); ++r)
    roots.push_back(json{{"index", r},
                         {"coords", sys.root(r)},
                         {"positive", sys.is_positive(r)}});
  return json{{"type", sys.label()},
              {"rank", sys.rank()},
              {"num_roots", sys.num_roots()},
              {"num_positive", sys.num_positive()},
              {"weyl_order", sys.weyl_order()},
              {"roots", roots}};
}

json run_weyl(const std::string& type) {
  RootSystem sys = build_root_system(type, weyl_guard());
  WeylGroup W = WeylGroup::enumerate(sys);
  json census = json::array();
  for (int c : W.length_census()) census.push_back(c);
  json j{{"type", sys.label()},
         {"order", W.size()},
         {"longest_length", static_cast<int>(W.length_census().size()) - 1},
         {"length_census", census}};
  if (W.size() <= 64) {
    json words = json::array();
    for (int id = 0; id < W.size(); ++id) words.push_back(W.word_string(id));
    j["elements"] = words;
  }
  return j;
}

json run_closed_check(const std::string& type, const std::string& gamma_arg) {
  RootSystem sys = build_root_system(type, weyl_guard());
  std::stringstream in(gamma_arg);
  std::string si, sj, sk;
  if (!std::getline(in, si, ';') || !std::getline(in, sj, ';') ||
      !std::getline(in, sk, ';'))
    throw std::invalid_argument("--gamma needs the form I;J;K");
  SimpleSet I = parse_simple_set(si, sys.rank());
  SimpleSet J = parse_simple_set(sj, sys.rank());
  SimpleSet K = parse_simple_set(sk, sys.rank());

  GammaTriple t = build_gamma(sys, I, J, K);
  bool closed = is_closed(sys, t.gamma);
  auto witness = gamma_closedness_criterion(sys, I, J, K);
  json j{{"type", sys.label()},
         {"I", subset_json(I)},
         {"J", subset_json(J)},
         {"K", subset_json(K)},
         {"gamma_size", t.gamma.size()},
         {"closed", closed},
         {"criterion_witness",
          witness ? json{{"X", subset_json(witness->first)},
                         {"Y", subset_json(witness->second)}}
                  : json(nullptr)},
         {"agree", closed == witness.has_value()}};
  if (closed != witness.has_value())
    throw Mismatch("closedness criterion disagrees with the pair scan");
  return j;
}

json run_invertible(const std::string& type, const std::string& si,
                    const std::string& sk) {
  RootSystem sys = build_root_system(type, weyl_guard());
  SimpleSet I = parse_simple_set(si, sys.rank());
  SimpleSet K = parse_simple_set(sk, sys.rank());
  bool crit = invertibility_criterion(sys, I, K);
  GammaTriple t = build_gamma(sys, I, full_set(sys.rank()), K);
  json j{{"type", sys.label()},
         {"I", subset_json(I)},
         {"K", subset_json(K)},
         {"criterion", crit}};
  if (is_closed(sys, t.gamma)) {
    bool brute = is_invertible(sys, t.gamma);
    j["brute_force"] = brute;
    j["agree"] = brute == crit;
    if (brute != crit) throw Mismatch("invertibility criterion disagrees");
  } else {
    j["brute_force"] = nullptr;
    j["note"] = "Gamma(I,K) is not closed; brute-force check skipped";
  }
  return j;
}

json run_fixed_points(const std::string& type, const std::string& sl,
                      const std::string& si, const std::string& sj,
                      const std::string& sk, const std::string& method) {
  RootSystem sys = build_root_system(type, weyl_guard());
  SimpleSet L = parse_simple_set(sl, sys.rank());
  SimpleSet I = parse_simple_set(si, sys.rank());
  SimpleSet J = parse_simple_set(sj, sys.rank());
  SimpleSet K = parse_simple_set(sk, sys.rank());
  WeylGroup W = WeylGroup::enumerate(sys);

  json j{{"type", sys.label()},
         {"L", subset_json(L)},
         {"I", subset_json(I)},
         {"J", subset_json(J)},
         {"K", subset_json(K)},
         {"method", method}};
  std::optional<FixedPointSet> brute, theorem;
  if (method == "brute" || method == "both") {
    GammaTriple t = build_gamma(sys, I, J, K);
    brute = fixed_points_bruteforce(W, L, t.gamma);
    j["brute"] = json{{"cardinality", brute->size()},
                      {"members", words_json(W, brute->members)}};
  }
  if (method == "theorem" || method == "both") {
    theorem = fixed_points_theorem(W, L, I, J, K);
    j["theorem"] = json{{"cardinality", theorem->size()},
                        {"members", words_json(W, theorem->members)}};
  }
  if (method == "both") {
    bool match = brute->members == theorem->members;
    j["match"] = match;
    if (!match) throw Mismatch("theorem and brute-force fixed points disagree");
  }
  json& front = j[method == "theorem" ? "theorem" : "brute"];
  j["cardinality"] = front["cardinality"];
  return j;
}

json run_decompose_weyl(const std::string& type, const std::string& sl) {
  RootSystem sys = build_root_system(type, weyl_guard());
  SimpleSet L = parse_simple_set(sl, sys.rank());
  WeylGroup W = WeylGroup::enumerate(sys);
  auto blocks = weyl_decomposition(W, L);
  json arr = json::array();
  for (const auto& b : blocks) {
    json e{{"L1", subset_json(b.L1)},
           {"L2", subset_json(b.L2)},
           {"size", static_cast<int>(b.members.size())}};
    if (W.size() <= 64) e["members"] = words_json(W, b.members);
    arr.push_back(std::move(e));
  }
  return json{{"type", sys.label()},
              {"L", subset_json(L)},
              {"order", W.size()},
              {"blocks", arr}};
}

json run_mirror_report(const std::string& type, const std::string& pair_arg) {
  RootSystem sys = build_root_system(type, weyl_guard());
  std::stringstream in(pair_arg);
  std::string s1, s2;
  if (!std::getline(in, s1, '|') || !std::getline(in, s2, '|'))
    throw std::invalid_argument("--pair needs the form kind:subset|kind:subset");
  BraneDescriptor d1 = parse_brane(s1, sys.rank());
  BraneDescriptor d2 = parse_brane(s2, sys.rank());
  MirrorReport r = mirror_report(type, d1, d2, weyl_guard());
  BraneDescriptor m1 = mirror_of(d1), m2 = mirror_of(d2);
  return json{{"type", sys.label()},
              {"dual_type", dual_label(sys.label())},
              {"left",
               json{{"brane1", brane_kind_name(d1.kind)},
                    {"subset1", subset_json(d1.subset)},
                    {"brane2", brane_kind_name(d2.kind)},
                    {"subset2", subset_json(d2.subset)},
                    {"count", r.count_left}}},
              {"right",
               json{{"brane1", brane_kind_name(m1.kind)},
                    {"subset1", subset_json(m1.subset)},
                    {"brane2", brane_kind_name(m2.kind)},
                    {"subset2", subset_json(m2.subset)},
                    {"count", r.count_right}}},
              {"matched", r.matched}};
}

json run_verify_all(const std::string& type, int max_rank) {
  RootSystem sys = build_root_system(type, weyl_guard());
  if (max_rank > 0 && sys.rank() > max_rank)
    throw std::invalid_argument("rank exceeds --max-rank");
  WeylGroup W = WeylGroup::enumerate(sys);
  SimpleSet pi = full_set(sys.rank());
  json checks = json::array();
  bool all_ok = true;
  auto record = [&](const std::string& name, bool ok) {
    checks.push_back(json{{"check", name}, {"ok", ok}});
    all_ok = all_ok && ok;
  };

  {
    bool ok = true;
    for (int i = 0; i < sys.rank(); ++i)
      for (int r = 0; r < sys.num_roots(); ++r)
        if (sys.simple_reflect(i, sys.simple_reflect(i, r)) != r) ok = false;
    record("reflection tables are involutions", ok);
  }
  {
    int total = 0;
    for (int c : W.length_census()) total += c;
    record("length census sums to |W|", total == W.size());
  }
  {
    bool ok = true;
    for (SimpleSet J : all_subsets(pi))
      for (SimpleSet I : all_subsets(J))
        for (SimpleSet K : all_subsets(J)) {
          GammaTriple t = build_gamma(sys, I, J, K);
          bool closed = is_closed(sys, t.gamma);
          auto w = gamma_closedness_criterion(sys, I, J, K);
          if (closed != w.has_value()) ok = false;
          if (closed && symmetric_part(t.gamma) != root_subsystem(sys, I))
            ok = false;
        }
    record("closedness criterion == pair scan; Gamma_s == Phi_I", ok);
  }
  {
    bool ok = true;
    for (SimpleSet I : all_subsets(pi))
      for (SimpleSet K : all_subsets(pi)) {
        GammaTriple t = build_gamma(sys, I, pi, K);
        if (!is_closed(sys, t.gamma)) continue;
        if (is_invertible(sys, t.gamma) != invertibility_criterion(sys, I, K))
          ok = false;
      }
    record("invertibility criterion == complement pair scan", ok);
  }
  {
    bool ok = true;
    for (SimpleSet J : all_subsets(pi))
      for (SimpleSet I : all_subsets(J))
        for (SimpleSet K : all_subsets(J)) {
          if (!gamma_closedness_criterion(sys, I, J, K)) continue;
          GammaTriple t = build_gamma(sys, I, J, K);
          for (SimpleSet L : all_subsets(pi)) {
            FixedPointSet b = fixed_points_bruteforce(W, L, t.gamma);
            FixedPointSet th = fixed_points_theorem(W, L, I, J, K);
            if (b.members != th.members) ok = false;
          }
        }
    record("fixed points: theorem == brute force for all closed triples", ok);
  }
  {
    bool ok = true;
    for (SimpleSet L : all_subsets(pi)) {
      auto blocks = weyl_decomposition(W, L);
      std::size_t total = 0;
      for (const auto& b : blocks) total += b.members.size();
      if (total != static_cast<std::size_t>(W.size())) ok = false;
    }
    record("Weyl decomposition partitions W for all L", ok);
  }
  {
    bool ok = true;
    for (SimpleSet L : all_subsets(pi))
      for (SimpleSet I : all_subsets(pi)) {
        CosetSpace csL = coset_space(W, L, Side::Right);
        CosetSpace csI = coset_space(W, I, Side::Right);
        std::size_t a = free_double_cosets(W, csI, L, Sign::Plus, true).size();
        std::size_t b = free_double_cosets(W, csL, I, Sign::Plus, true).size();
        if (a != b) ok = false;
        if (projection_image(W, I, L).size() != a) ok = false;
        if (free_orbit_census(W, L, I).size() != a) ok = false;
      }
    record("free double cosets: symmetry, projection image, orbit census", ok);
  }
  {
    bool ok = true;
    for (SimpleSet J : all_subsets(pi))
      for (SimpleSet I : all_subsets(J))
        for (SimpleSet K : all_subsets(J)) {
          GammaTriple t = build_gamma(sys, I, J, K);
          RootSubset perp = perp_complement(t.gamma);
          RootSubset p1 = subset_minus(positive_roots(sys), root_subsystem(sys, I));
          RootSubset p2 = subset_minus(subset_negate(positive_roots(sys)),
                                       root_subsystem(sys, J));
          RootSubset p3 = subset_minus(
              subset_intersect(root_subsystem(sys, K),
                               subset_negate(positive_roots(sys))),
              root_subsystem(sys, I));
          if (subset_intersect(p1, p2).size() || subset_intersect(p1, p3).size() ||
              subset_intersect(p2, p3).size())
            ok = false;
          if (subset_union(subset_union(p1, p2), p3) != perp) ok = false;
        }
    record("perp complement is the three-part disjoint union", ok);
  }

  if (!all_ok) {
    emit(json{{"type", sys.label()}, {"checks", checks}, {"pass", false}},
         "json");
    throw Mismatch("verify-all found failures");
  }
  return json{{"type", sys.label()}, {"checks", checks}, {"pass", true}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weylkit: computational Lie theory toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand as well
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::string type, gamma_arg, set_i, set_j = "all", set_k = "all", set_l;
  std::string method = "both", pair_arg, diagram_text, left_spec, right_spec;
  std::string comp_arg, at_arg;
  int pos = -1, split_pivot = -1, max_rank = 0;
  bool full_star = false;

  auto* roots = app.add_subcommand("roots", "Root system data");
  roots->add_option("type", type)->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group data");
  weyl->add_option("type", type)->required();

  auto* closed = app.add_subcommand("closed-check", "Closedness of Gamma(I,J,K)");
  closed->add_option("type", type)->required();
  closed->add_option("--gamma", gamma_arg, "I;J;K as 1-based lists")->required();

  auto* inv = app.add_subcommand("invertible", "Invertibility of Gamma(I,K)");
  inv->add_option("type", type)->required();
  inv->add_option("--I", set_i)->required();
  inv->add_option("--K", set_k)->required();

  auto* fp = app.add_subcommand("fixed-points", "Torus fixed points");
  fp->add_option("type", type)->required();
  fp->add_option("--L", set_l)->required();
  fp->add_option("--I", set_i)->required();
  fp->add_option("--J", set_j);
  fp->add_option("--K", set_k);
  fp->add_option("--method", method)
      ->check(CLI::IsMember({"brute", "theorem", "both"}));

  auto* dec = app.add_subcommand("decompose-weyl", "Sign-pattern decomposition");
  dec->add_option("type", type)->required();
  dec->add_option("--L", set_l)->required();

  auto* mir = app.add_subcommand("mirror-report", "4d mirror brane comparison");
  mir->add_option("type", type)->required();
  mir->add_option("--pair", pair_arg, "kind:subset|kind:subset")->required();

  auto* bow = app.add_subcommand("bow", "Brane diagram calculus");
  bow->require_subcommand(1);
  auto* bow_hw = bow->add_subcommand("hw", "Hanany-Witten move");
  bow_hw->add_option("diagram", diagram_text)->required();
  bow_hw->add_option("--pos", pos, "0-based left brane of the pair")->required();
  auto* bow_norm = bow->add_subcommand("normalize", "Separated form");
  bow_norm->add_option("diagram", diagram_text)->required();
  auto* bow_mir = bow->add_subcommand("mirror", "Mirror dual");
  bow_mir->add_option("diagram", diagram_text)->required();
  auto* bow_split = bow->add_subcommand("split", "Split a separated diagram");
  bow_split->add_option("diagram", diagram_text)->required();
  bow_split->add_option("--pivot", split_pivot, "explicit pivot gap");

  auto* quiver = app.add_subcommand("quiver", "Quiver gauge theory data");
  quiver->require_subcommand(1);
  auto* q_star = quiver->add_subcommand("star", "Star-shaped quiver");
  q_star->add_option("composition", comp_arg)->required();
  q_star->add_flag("--full", full_star, "full descending legs");
  auto* q_dims = quiver->add_subcommand("dims", "Higgs/Coulomb dimensions");
  q_dims->add_option("spec", left_spec, "kind:numbers")->required();
  auto* q_cross = quiver->add_subcommand("crosscheck", "Coulomb dimension check");
  q_cross->add_option("composition", comp_arg)->required();
  auto* q_int = quiver->add_subcommand("intersect", "Intersect two quivers");
  q_int->add_option("--left", left_spec)->required();
  q_int->add_option("--right", right_spec)->required();
  q_int->add_option("--at", at_arg, "i,i' framed vertices")->required();

  auto* verify = app.add_subcommand("verify-all", "Run the invariant suite");
  verify->add_option("type", type)->required();
  verify->add_option("--max-rank", max_rank);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    json out;
    if (*roots) out = run_roots(type);
    else if (*weyl) out = run_weyl(type);
    else if (*closed) out = run_closed_check(type, gamma_arg);
    else if (*inv) out = run_invertible(type, set_i, set_k);
    else if (*fp) out = run_fixed_points(type, set_l, set_i, set_j, set_k, method);
    else if (*dec) out = run_decompose_weyl(type, set_l);
    else if (*mir) out = run_mirror_report(type, pair_arg);
    else if (*bow) {
      BraneDiagram d = parse_diagram(diagram_text);
      if (*bow_hw) {
        out = json{{"input", diagram_json(d)},
                   {"pos", pos},
                   {"result", diagram_json(hw_move(d, pos))}};
      } else if (*bow_norm) {
        out = json{{"input", diagram_json(d)},
                   {"result", diagram_json(normalize_separated(d))}};
      } else if (*bow_mir) {
        out = json{{"input", diagram_json(d)},
                   {"result", diagram_json(mirror_dual(d))}};
      } else {
        auto [mm, mp] =
            split_pivot >= 0 ? split_at(d, split_pivot) : split_separated(d);
        out = json{{"input", diagram_json(d)},
                   {"m_minus", mm},
                   {"m_plus", mp}};
      }
    } else if (*quiver) {
      if (*q_star) {
        auto comp = parse_composition(comp_arg);
        QuiverDatum q = full_star ? full_star_quiver(comp) : star_quiver(comp);
        json psi = json::array();
        for (int v : psi_character(comp)) psi.push_back(v);
        out = quiver_json(q);
        out["psi"] = psi;
      } else if (*q_dims) {
        out = quiver_json(parse_quiver_spec(left_spec));
      } else if (*q_cross) {
        auto comp = parse_composition(comp_arg);
        long long n = 0;
        for (long long c : comp) n += c;
        long long coulomb = coulomb_dim(star_quiver(comp));
        bool ok = coulomb_crosscheck(comp);
        out = json{{"n", n},
                   {"coulomb", coulomb},
                   {"expected", n * n + n},
                   {"ok", ok}};
        if (!ok) throw Mismatch("Coulomb dimension cross-check failed");
      } else {
        std::stringstream in(at_arg);
        std::string a, b;
        if (!std::getline(in, a, ',') || !std::getline(in, b, ','))
          throw std::invalid_argument("--at needs i,i'");
        QuiverDatum ql = parse_quiver_spec(left_spec);
        QuiverDatum qr = parse_quiver_spec(right_spec);
        out = quiver_json(intersect(ql, std::stoi(a), qr, std::stoi(b)));
      }
    } else if (*verify) {
      out = run_verify_all(type, max_rank);
    }
    emit(out, format);
    return 0;
  } catch (const Mismatch& e) {
    std::cerr << "mismatch: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
