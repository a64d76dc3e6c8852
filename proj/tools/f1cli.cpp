// f1cli: command-line front end for the f1geom library.
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or input
// error, 3 a resource bound was exceeded.

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "f1/bnpair.hpp"
#include "f1/braids.hpp"
#include "f1/coxeter.hpp"
#include "f1/f1linalg.hpp"
#include "f1/finite_field.hpp"
#include "f1/geometry.hpp"
#include "f1/incidence.hpp"
#include "f1/qnum.hpp"
#include "json.hpp"

using namespace f1;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

struct Bounds {
  std::size_t max_cosets = 200000;
  std::size_t max_group_order = 500000;
  std::size_t max_objects = 200000;
};

struct Result {
  json data;
  std::string text;
  std::optional<std::string> dot;
  bool pass = true;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

json read_json(const std::string& path) { return json::parse(read_input(path)); }

// A diagram argument is a file, "-" for standard input, or the text itself.
std::string diagram_text(const std::string& arg) {
  if (arg == "-") return read_input(arg);
  std::ifstream in(arg);
  if (in) return std::string(std::istreambuf_iterator<char>(in), {});
  return arg;
}

Result json_result(json data, bool pass = true) {
  Result r;
  r.text = data.dump(2);
  r.data = std::move(data);
  r.pass = pass;
  return r;
}

Result geometry_result(const Geometry& g) {
  Result r = json_result(to_json(g));
  r.dot = to_dot(g);
  return r;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string word_text(const Word& w) {
  if (w.empty()) return "1";
  std::vector<std::string> parts;
  for (int x : w) parts.push_back("s" + std::to_string(x));
  return join(parts, " ");
}

template <class T>
T unwrap(std::variant<T, Overflow> v, const std::string& what) {
  if (auto* o = std::get_if<Overflow>(&v))
    throw ResourceError(what + ": coset enumeration overflow after " + std::to_string(o->defined) +
                        " cosets (limit " + std::to_string(o->limit) + ")");
  return std::get<T>(std::move(v));
}

// ---------------------------------------------------------------------------
// qnum, f1linalg

Result cmd_qbinom(std::size_t n, std::size_t k, const std::optional<long long>& at) {
  require(k <= n, "qbinom needs k <= n");
  const auto p = gaussian_binomial(n, k);
  json j{{"n", n}, {"k", k}, {"coefficients", to_json(p)}};
  Result r;
  if (at) {
    const auto v = eval(p, BigInt(*at));
    j["q"] = *at;
    j["value"] = v.str();
    r.text = v.str();
  } else {
    r.text = p.to_string();
  }
  r.data = j;
  return r;
}

Result cmd_npoly(std::size_t n) {
  const auto p = pgl_order_poly(n);
  const auto at1 = eval(p, BigInt(1));
  const auto expected = factorial(n + 1);
  const bool pass = at1 == expected;
  Result r;
  r.data = {{"n", n}, {"coefficients", to_json(p)}, {"N_at_1", at1.str()}, {"expected", expected.str()}, {"pass", pass}};
  r.text = "N(q) = " + p.to_string() + "\nN(1) = " + at1.str() + (pass ? " = " : " != ") + std::to_string(n + 1) + "!";
  r.pass = pass;
  return r;
}

Result cmd_gauss(unsigned q, std::uint32_t n) {
  const auto [p, e] = prime_power(q);
  require(p != 0, std::to_string(q) + " is not a prime power");
  require(n >= 1 && (q - 1) % n == 0, "n must divide q - 1");
  const FqField field(p, e);
  std::vector<std::uint32_t> failures;
  for (std::uint32_t code = 1; code < q; ++code) {
    const auto a = field.element(code);
    if (!(mm_det(mult_as_monomial(field, a, n)) == power_residue(field, a, n))) failures.push_back(code);
  }
  Result r;
  r.data = {{"q", q}, {"n", n}, {"checked", q - 1}, {"failures", failures}};
  r.text = "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + std::to_string(q - 1 - failures.size()) + "/" +
           std::to_string(q - 1) + " elements have det = power residue";
  r.pass = failures.empty();
  return r;
}

Result cmd_gl_f1(std::size_t d, std::uint32_t n, bool dump, const Bounds& b) {
  const auto gl = gl_enumerate(d, n, b.max_group_order);
  BigInt expected = factorial(d);
  for (std::size_t i = 0; i < d; ++i) expected *= n;
  const bool pass = expected == gl.group.order();
  Result r;
  r.data = {{"d", d}, {"n", n}, {"order", gl.group.order()}, {"expected", expected.str()}};
  if (dump) {
    json elems = json::array();
    for (const auto& m : gl.elements) elems.push_back(to_json(m));
    r.data["elements"] = elems;
  }
  r.text = dump ? r.data.dump(2) : std::to_string(gl.group.order());
  r.pass = pass;
  return r;
}

// ---------------------------------------------------------------------------
// coxeter

Result cmd_coxeter(const std::string& action, const std::string& arg, const Bounds& b) {
  const auto m = parse_diagram(diagram_text(arg));
  if (action == "classify") {
    const auto t = classify_spherical(m);
    json j{{"type", t.name()}, {"spherical", t.spherical()}, {"rank", m.size()}};
    if (auto o = t.group_order()) j["group_order"] = *o;
    Result r;
    r.data = j;
    r.text = t.name();
    r.dot = to_dot(diagram_of(m));
    return r;
  }
  if (action == "order") {
    const auto w = unwrap(coxeter_group(m, b.max_cosets), "Coxeter group");
    const auto t = classify_spherical(m);
    Result r;
    r.data = {{"order", w.order()}, {"type", t.name()}};
    r.text = std::to_string(w.order());
    if (auto o = t.group_order()) r.pass = *o == w.order();
    if (!satisfies_coxeter_relations(w, m)) r.pass = false;
    return r;
  }
  if (action == "complex") return geometry_result(coxeter_complex(m, b.max_cosets));
  throw UsageError("unknown coxeter action '" + action + "'");
}

// ---------------------------------------------------------------------------
// geometry

BTDiagram bt_diagram_from_text(const std::string& text, std::size_t rank) {
  if (text == "path") return path_diagram(rank);
  json j = json::parse(text, nullptr, false);
  if (!j.is_discarded() && j.is_object()) {
    BTDiagram d;
    d.rank = j.value("rank", rank);
    for (const auto& e : j.at("labels")) {
      require(e.is_array() && e.size() == 3, "diagram labels are [i, j, label] triples");
      d.labels[{e[0].get<std::uint32_t>(), e[1].get<std::uint32_t>()}] = e[2].get<std::string>();
    }
    return d;
  }
  return bt_diagram_of(parse_diagram(text));
}

json gp_json(const GPReport& r) {
  return {{"n", r.n}, {"s", r.s}, {"t", r.t}, {"thick", r.thick}, {"thin", r.thin}};
}

Result cmd_geometry(const std::string& action, const std::string& path, const std::string& diagram) {
  const auto g = geometry_from_json(read_json(path));
  if (action == "validate") {
    const auto v = validate(g);
    json j{{"valid", v.valid}, {"connected", v.connected}, {"violations", v.violations}, {"rank", g.rank()}, {"size", g.size()}};
    if (v.valid) {
      j["residually_connected"] = residually_connected(g);
      j["thin"] = is_thin(g);
      j["thick"] = is_thick(g);
      j["chambers"] = chambers(g).size();
    }
    Result r;
    r.data = j;
    r.text = v.valid ? "valid" : "invalid: " + join(v.violations, "; ");
    r.pass = v.valid;
    return r;
  }
  if (action == "gp") {
    const auto rep = gp_recognize(g);
    Result r;
    if (!rep) {
      r.data = {{"generalized_polygon", false}};
      r.text = "not a generalized polygon";
      r.pass = false;
      return r;
    }
    r.data = gp_json(*rep);
    r.data["generalized_polygon"] = true;
    r.text = "n=" + std::to_string(rep->n) + " s=" + std::to_string(rep->s) + " t=" + std::to_string(rep->t) +
             (rep->thin ? " thin" : rep->thick ? " thick" : "");
    return r;
  }
  if (action == "classify") {
    const auto label = rank2_f1_classify(g);
    Result r;
    r.data = {{"label", label.name()}};
    r.text = label.name();
    r.pass = label.kind != Rank2Label::Kind::Unclassified;
    return r;
  }
  if (action == "diagram-check") {
    if (diagram.empty()) throw UsageError("diagram-check needs --diagram");
    const auto rep = diagram_check(g, bt_diagram_from_text(diagram_text(diagram), g.rank()));
    json entries = json::array();
    std::size_t failed = 0;
    for (const auto& e : rep.entries) {
      entries.push_back({{"flag", e.flag}, {"types", {e.i, e.j}}, {"label", e.label}, {"pass", e.pass}});
      if (!e.pass) ++failed;
    }
    Result r;
    r.data = {{"pass", rep.pass}, {"residues", rep.entries.size()}, {"entries", entries}};
    r.text = std::string(rep.pass ? "pass" : "FAIL") + ": " + std::to_string(rep.entries.size() - failed) + "/" +
             std::to_string(rep.entries.size()) + " corank-2 residues match";
    r.pass = rep.pass;
    return r;
  }
  if (action == "dualize") return geometry_result(dualize(g));
  throw UsageError("unknown geometry action '" + action + "'");
}

// ---------------------------------------------------------------------------
// bnpair

TitsSystem tits_from(const std::string& instance, const std::vector<std::string>& files, const Bounds& b,
                     std::optional<BNFailure>* failure) {
  ConcreteGroup g;
  ElementSet bs, ns;
  if (!instance.empty()) {
    unsigned n = 0, p = 0;
    char tail = 0;
    if (std::sscanf(instance.c_str(), "gl:%u:%u%c", &n, &p, &tail) != 2)
      throw UsageError("instance must look like gl:N:P, got '" + instance + "'");
    auto gl = builtin_gl(n, p, b.max_group_order);
    g = std::move(gl.G);
    bs = std::move(gl.B);
    ns = std::move(gl.N);
  } else {
    if (files.size() != 3) throw UsageError("--files needs three paths: group, B, N");
    g = concrete_group_from_json(read_json(files[0]), b.max_group_order);
    bs = subgroup_from_json(g, read_json(files[1]));
    ns = subgroup_from_json(g, read_json(files[2]));
  }
  auto res = verify_bn(g, bs, ns);
  if (auto* f = std::get_if<BNFailure>(&res)) {
    *failure = *f;
    return {};
  }
  return std::get<TitsSystem>(std::move(res));
}

Result cmd_bn(const std::string& action, const std::string& instance, const std::vector<std::string>& files,
              const Bounds& b) {
  if (instance.empty() == files.empty()) throw UsageError("bn needs exactly one of --instance and --files");
  std::optional<BNFailure> failure;
  auto ts = tits_from(instance, files, b, &failure);
  if (failure) {
    Result r;
    r.data = {{"valid", false}, {"axiom", failure->axiom}, {"message", failure->message}};
    r.text = "FAIL " + failure->axiom + ": " + failure->message;
    r.pass = false;
    return r;
  }
  if (action == "verify") {
    const auto again = recheck_bn(ts);
    Result r;
    r.data = {{"valid", !again},
              {"axioms", {{"BN1", true}, {"BN2", true}, {"BN3", true}, {"BN4", true}}},
              {"order_G", ts.G.order()},
              {"W_order", ts.W.order()},
              {"S_size", ts.rank()},
              {"recheck", again ? "FAIL " + again->axiom + ": " + again->message : "pass"}};
    r.text = again ? "FAIL recheck " + again->axiom + ": " + again->message
                   : "BN1 BN2 BN3 BN4 pass; |W| = " + std::to_string(ts.W.order()) + ", |S| = " + std::to_string(ts.rank());
    r.pass = !again;
    return r;
  }
  if (action == "bruhat") {
    const auto br = bruhat(ts);
    json cells = json::array();
    std::string text;
    std::size_t total = 0;
    for (std::size_t w = 0; w < br.cells.size(); ++w) {
      const auto& word = ts.W.word(static_cast<EnumeratedGroup::Element>(w));
      cells.push_back({{"w", word}, {"size", br.cells[w].size()}});
      text += "w = " + word_text(word) + "  |BwB| = " + std::to_string(br.cells[w].size()) + "\n";
      total += br.cells[w].size();
    }
    Result r;
    r.data = {{"cells", cells}, {"total", total}, {"order_G", ts.G.order()}};
    r.text = text + "total " + std::to_string(total) + " = |G|";
    return r;
  }
  if (action == "build") return geometry_result(coset_geometry(ts).geometry);
  if (action == "report") {
    json j = report_json(ts);
    j["chamber_transitive"] = chamber_transitivity(ts);
    const auto ap = apartment_embedding(ts);
    j["apartment"] = {{"objects", ap.image}, {"thin", true}, {"isomorphic_to_coxeter_complex", true}};
    Result r = json_result(j, j["chamber_transitive"].get<bool>());
    return r;
  }
  throw UsageError("unknown bn action '" + action + "'");
}

// ---------------------------------------------------------------------------
// weyl

EnumeratedGroup weyl_group_from(const json& j, const Bounds& b) {
  if (j.is_string()) return unwrap(coxeter_group(parse_diagram(j.get<std::string>()), b.max_cosets), "Weyl group");
  return unwrap(enumerate_presentation(presentation_from_json(j), b.max_cosets), "Weyl group");
}

Result cmd_weyl(const std::string& path, const Bounds& b) {
  const json j = read_json(path);
  require(j.is_object() && j.contains("kind"), "weyl input needs a kind");
  const auto kind = j["kind"].get<std::string>();
  WeylInput input;
  if (kind == "projective_space") {
    const int n = j.at("n").get<int>();
    const unsigned q = j.value("q", 1u);
    Geometry g;
    if (j.contains("geometry"))
      g = geometry_from_json(j["geometry"]);
    else
      g = q == 1 ? pg_f1(n, b.max_objects) : pg_fq(n, q, b.max_objects).geometry;
    input = ProjectiveSpaceClaim{n, q, std::move(g)};
  } else if (kind == "polygon") {
    input = PolygonClaim{geometry_from_json(j.at("geometry"))};
  } else if (kind == "building") {
    if (j.contains("instance")) {
      std::optional<BNFailure> failure;
      auto ts = tits_from(j["instance"].get<std::string>(), {}, b, &failure);
      if (failure) throw VerificationError(failure->axiom + ": " + failure->message);
      input = building_claim(ts);
    } else {
      input = BuildingClaim{geometry_from_json(j.at("geometry")), weyl_group_from(j.at("weyl"), b)};
    }
  } else if (kind == "thin") {
    input = ThinClaim{geometry_from_json(j.at("geometry"))};
  } else {
    throw DomainError("unknown weyl input kind '" + kind + "'");
  }
  return geometry_result(weyl_image(input));
}

// ---------------------------------------------------------------------------
// braids

SimpleGraph parse_graph(const std::string& text) {
  if (text.rfind("path:", 0) == 0) return path_graph(std::stoul(text.substr(5)));
  const auto colon = text.find(':');
  SimpleGraph g;
  try {
    g.vertices = std::stoul(text.substr(0, colon));
  } catch (const std::exception&) {
    throw DomainError("graph must be path:K or V:a-b,c-d, got '" + text + "'");
  }
  if (colon != std::string::npos) {
    std::stringstream edges(text.substr(colon + 1));
    std::string e;
    while (std::getline(edges, e, ',')) {
      if (e.empty()) continue;
      std::size_t a = 0, c = 0;
      char dash = 0, extra = 0;
      std::istringstream es(e);
      if (!(es >> a >> dash >> c) || dash != '-' || (es >> extra)) throw DomainError("bad graph edge '" + e + "'");
      g.edges.emplace_back(a, c);
    }
  }
  check_graph(g);
  return g;
}

Result cmd_braid(const std::string& action, const std::vector<std::string>& args, std::size_t strands,
                 const Bounds& b) {
  if (action == "gamma" || action == "rho") {
    const auto w = parse_braid(join(args, " "), strands);
    Result r;
    if (action == "gamma") {
      const auto p = gamma(w);
      r.data = {{"strands", w.strands}, {"permutation", p}, {"cycles", cycle_notation(p)}, {"pure", is_pure(w)}};
      r.text = cycle_notation(p);
    } else {
      r.data = to_json(rho(w));
      r.text = r.data.dump(2);
    }
    return r;
  }
  if (action == "image") {
    if (args.size() != 1) throw UsageError("braid image needs the strand count");
    const auto n = std::stoul(args[0]);
    const auto img = rho_image(n, b.max_group_order);
    const bool certified = img.involutions && img.braid_relations && (n < 3 || img.nonabelian);
    Result r;
    r.data = {{"strands", n},
              {"order", img.closure.group.order()},
              {"nonabelian", img.nonabelian},
              {"involutions", img.involutions},
              {"braid_relations", img.braid_relations},
              {"not_faithful", img.not_faithful}};
    r.text = "order " + std::to_string(img.closure.group.order()) + (certified ? ", isomorphic to S_" : ", NOT certified as S_") +
             std::to_string(n);
    r.pass = certified;
    return r;
  }
  if (action == "shephard") {
    if (args.size() != 2) throw UsageError("braid shephard needs a graph and an exponent");
    const auto g = parse_graph(args[0]);
    const auto d = static_cast<unsigned>(std::stoul(args[1]));
    const auto group = unwrap(shephard_group(g, d, b.max_cosets), "Shephard group");
    Result r;
    r.data = {{"order", group.order()}, {"abelian", group.is_abelian()}};
    if (d == 2) {
      const bool ok = satisfies_coxeter_relations(group, graph_coxeter_matrix(g));
      r.data["coxeter_relations"] = ok;
      r.pass = ok;
    }
    r.text = std::to_string(group.order());
    return r;
  }
  throw UsageError("unknown braid action '" + action + "'");
}

// ---------------------------------------------------------------------------

std::string render(const Result& r, const std::string& format, bool meta, const std::vector<std::string>& argv) {
  if (format == "text") return r.text;
  if (format == "dot") {
    if (!r.dot) throw UsageError("this command has no DOT output");
    return *r.dot;
  }
  if (!meta) return r.data.dump(2);
  return json{{"meta", {{"tool", "f1cli"}, {"version", "1.0.0"}, {"argv", argv}}}, {"result", r.data}}.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite geometry, buildings and F1 linear algebra"};
  app.require_subcommand(1);
  app.fallthrough();
  Bounds bounds;
  std::string format;
  std::string output;
  bool meta = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("-o,--output", output, "Write to a file instead of standard output");
  app.add_flag("--meta", meta, "Wrap JSON output in a metadata envelope");
  app.add_option("--max-cosets", bounds.max_cosets, "Todd-Coxeter coset cap")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-group-order", bounds.max_group_order, "Closure bound for enumerated groups")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-objects", bounds.max_objects, "Object bound for constructed geometries")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  std::function<Result()> run;
  std::string default_format = "text";

  std::size_t n = 0, k = 0, d = 0;
  unsigned q = 0;
  std::optional<long long> at;
  auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [n, k]_q");
  qbinom->add_option("n", n)->required();
  qbinom->add_option("k", k)->required();
  qbinom->add_option("--at", at, "Evaluate at this q");
  qbinom->callback([&] { run = [&] { return cmd_qbinom(n, k, at); }; });

  auto* npoly = app.add_subcommand("npoly", "N(q) with |PGL_(n+1)(q)| = (q-1)^n N(q), and the N(1) = (n+1)! check");
  npoly->add_option("n", n)->required();
  npoly->callback([&] { run = [&] { return cmd_npoly(n); }; });

  std::uint32_t root_n = 0;
  auto* gauss = app.add_subcommand("gauss-lemma", "det of multiplication by a over F1^n equals the power residue symbol");
  gauss->add_option("--q", q)->required();
  gauss->add_option("--n", root_n)->required();
  gauss->callback([&] { run = [&] { return cmd_gauss(q, root_n); }; });

  bool dump = false;
  std::uint32_t mod_n = 0;
  auto* glf1 = app.add_subcommand("gl-f1", "Enumerate GL_d(F1^n)");
  glf1->add_option("d", d)->required();
  glf1->add_option("n", mod_n)->required();
  glf1->add_flag("--dump", dump, "List every element");
  glf1->callback([&] { run = [&] { return cmd_gl_f1(d, mod_n, dump, bounds); }; });

  std::string action, target, diagram;
  auto* cox = app.add_subcommand("coxeter", "Coxeter diagrams: classify, order, complex");
  cox->add_option("action", action)->required()->check(CLI::IsMember({"classify", "order", "complex"}));
  cox->add_option("diagram", target, "Diagram file, - for standard input, or a type such as A3 or I2(7)")->required();
  cox->callback([&] {
    if (action == "complex") default_format = "json";
    run = [&] { return cmd_coxeter(action, target, bounds); };
  });

  auto* geo = app.add_subcommand("geometry", "Checks on a geometry JSON file");
  geo->add_option("action", action)
      ->required()
      ->check(CLI::IsMember({"validate", "gp", "classify", "diagram-check", "dualize"}));
  geo->add_option("file", target, "Geometry JSON, - for standard input")->required();
  geo->add_option("--diagram", diagram, "For diagram-check: Coxeter type, DOT, label JSON or 'path'");
  geo->callback([&] {
    if (action == "dualize") default_format = "json";
    run = [&] { return cmd_geometry(action, target, diagram); };
  });

  int dim = 0;
  auto* pgf1 = app.add_subcommand("pg-f1", "PG(n, F1)");
  pgf1->add_option("n", dim)->required();
  pgf1->callback([&] {
    default_format = "json";
    run = [&] { return geometry_result(pg_f1(dim, bounds.max_objects)); };
  });

  auto* pgfq = app.add_subcommand("pg-fq", "PG(n, q)");
  pgfq->add_option("n", dim)->required();
  pgfq->add_option("q", q)->required();
  pgfq->callback([&] {
    default_format = "json";
    run = [&] { return geometry_result(pg_fq(dim, q, bounds.max_objects).geometry); };
  });

  bool even = false;
  std::uint32_t qn = 0;
  auto* quad = app.add_subcommand("quadric-f1", "Quadric over F1 on 2(n+1) points");
  quad->add_option("n", qn)->required();
  quad->add_flag("--even", even, "Split the maximal subspaces by parity");
  quad->callback([&] {
    default_format = "json";
    run = [&] { return geometry_result(quadric_f1(qn, even, bounds.max_objects).geometry); };
  });

  std::uint32_t m = 0;
  auto* ngon = app.add_subcommand("ngon", "Ordinary m-gon");
  ngon->add_option("m", m)->required();
  ngon->callback([&] {
    default_format = "json";
    run = [&] { return geometry_result(ordinary_ngon(m)); };
  });

  std::string instance;
  std::vector<std::string> files;
  auto* bn = app.add_subcommand("bn", "BN-pairs: verify, bruhat, build, report");
  bn->add_option("action", action)->required()->check(CLI::IsMember({"verify", "bruhat", "build", "report"}));
  bn->add_option("--instance", instance, "Built-in instance gl:N:P");
  bn->add_option("--files", files, "Group, B and N JSON files")->expected(3);
  bn->callback([&] {
    if (action == "build" || action == "report") default_format = "json";
    run = [&] { return cmd_bn(action, instance, files, bounds); };
  });

  auto* weyl = app.add_subcommand("weyl", "Weyl functor image of a tagged input");
  weyl->add_option("file", target, "Tagged JSON input, - for standard input")->required();
  weyl->callback([&] {
    default_format = "json";
    run = [&] { return cmd_weyl(target, bounds); };
  });

  std::vector<std::string> args;
  std::size_t strands = 0;
  auto* braid = app.add_subcommand("braid", "Braids: gamma, rho, image, shephard");
  braid->add_option("action", action)->required()->check(CLI::IsMember({"gamma", "rho", "image", "shephard"}));
  braid->add_option("args", args, "Braid word, strand count, or graph and exponent");
  braid->add_option("--strands", strands, "Strand count (default: smallest that fits)");
  braid->callback([&] {
    if (action == "rho") default_format = "json";
    run = [&] { return cmd_braid(action, args, strands, bounds); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const std::vector<std::string> arg_list(argv + 1, argv + argc);
  try {
    const Result r = run();
    std::string out = render(r, format.empty() ? default_format : format, meta, arg_list);
    if (out.empty() || out.back() != '\n') out += '\n';
    if (output.empty()) {
      std::cout << out;
    } else {
      std::ofstream f(output);
      if (!f) throw UsageError("cannot write '" + output + "'");
      f << out;
    }
    return r.pass ? kOk : kFailed;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kFailed;
  } catch (const ResourceError& e) {
    std::cerr << "resource bound exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON input: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
