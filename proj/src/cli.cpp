#include "flagbundle/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "flagbundle/bottsam.hpp"
#include "flagbundle/bundle.hpp"
#include "flagbundle/cohom.hpp"
#include "flagbundle/diagrams.hpp"
#include "flagbundle/error.hpp"
#include "flagbundle/lattice.hpp"
#include "flagbundle/rootsys.hpp"
#include "flagbundle/verify.hpp"
#include "flagbundle/weyl.hpp"

namespace flagbundle::cli {

namespace {

using json = nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by verify when a check fails; carries the finished report.
struct VerificationFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Context {
  json inputs = json::object();
  json outputs = json::object();
  std::optional<DynkinDiagram> diagram;
  Table table;
};

IntVector parse_ints(const std::string& text, const std::string& what) {
  IntVector out;
  if (text.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(',', start);
    const std::string token = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    Int value = 0;
    const char* first = token.data();
    const char* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc() || ptr != last)
      throw UsageError("malformed " + what + " '" + text + "': expected comma-separated integers");
    out.push_back(value);
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

IntVector parse_vector(const std::string& text, const std::string& what, int k) {
  IntVector v = parse_ints(text, what);
  if (v.size() != static_cast<std::size_t>(k))
    throw Error(ErrorKind::RankMismatch, what + " has " + std::to_string(v.size()) +
                                             " entries but the diagram has rank " + std::to_string(k));
  return v;
}

NodeSet parse_subset(const std::string& text, int k) {
  std::vector<int> nodes;
  for (Int x : parse_ints(text, "subset")) {
    if (x < 1 || x > k)
      throw Error(ErrorKind::IndexOutOfRange,
                  "node " + std::to_string(x) + " outside 1.." + std::to_string(k));
    nodes.push_back(static_cast<int>(x));
  }
  return NodeSet(nodes);
}

Word parse_word(const std::string& text, int k) {
  std::vector<int> letters;
  for (Int x : parse_ints(text, "word")) {
    if (x < 1 || x > k)
      throw Error(ErrorKind::IndexOutOfRange,
                  "letter " + std::to_string(x) + " outside 1.." + std::to_string(k));
    letters.push_back(static_cast<int>(x));
  }
  return Word(letters);
}

IntMatrix parse_basis(const std::string& text, int k) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception&) {
    throw UsageError("basis is not valid JSON: " + text);
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(k))
    throw UsageError("basis must be a JSON array of " + std::to_string(k) + " rows");
  IntMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols())
      throw UsageError("basis row " + std::to_string(r + 1) + " must hold " + std::to_string(k) + " integers");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!j[r][c].is_number_integer()) throw UsageError("basis entries must be integers");
      m(r, c) = j[r][c].get<Int>();
    }
  }
  return m;
}

IsogenyLattice make_lattice(const DynkinDiagram& d, const std::string& name,
                            const std::string& basis, Context& ctx) {
  ctx.inputs["lattice"] = name;
  if (name == "adjoint") return IsogenyLattice::adjoint(d);
  if (name == "sc") return IsogenyLattice::simply_connected(d);
  if (name == "custom") {
    if (basis.empty()) throw UsageError("lattice 'custom' needs --basis");
    const IntMatrix m = parse_basis(basis, d.rank());
    ctx.inputs["basis"] = json::parse(basis);
    return IsogenyLattice::custom(d, m);
  }
  throw UsageError("unknown lattice '" + name + "': expected adjoint, sc or custom");
}

json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<Int>::min() && n <= std::numeric_limits<Int>::max())
    return json(static_cast<Int>(n));
  return json(n.str());
}

std::string cell(std::span<const Int> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string cell(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

DynkinDiagram load_diagram(const std::string& spec, Context& ctx) {
  DynkinDiagram d = parse_diagram(spec);
  ctx.diagram = d;
  return d;
}

std::size_t enumeration_limit() {
  const char* env = std::getenv(kEnumerationLimitEnv);
  if (env == nullptr || *env == '\0') return kDefaultEnumerationLimit;
  const std::string text(env);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw UsageError(std::string(kEnumerationLimitEnv) + " must be a positive integer, got '" + text + "'");
  return value;
}

// Components of type A in a simply-connected lattice: the group is a product
// involving Sl(n+1), whose admissible tags are sometimes quoted as having
// index n. The computed index is n+1; both are reported.
json sl_index_notes(const DynkinDiagram& d) {
  json notes = json::array();
  for (const auto& c : d.components()) {
    if (c.family != Family::A) continue;
    notes.push_back({{"component", DynkinDiagram({c}).to_string()},
                     {"group", "Sl(" + std::to_string(c.rank + 1) + ")"},
                     {"quoted_index", c.rank},
                     {"computed_index", c.rank + 1},
                     {"note", "the index n quoted for Sl(n+1) disagrees with the Smith normal form of "
                              "the Cartan matrix, which gives n+1; the computed value is authoritative"}});
  }
  return notes;
}

void cmd_table1(const std::string& spec, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const IntVector b = b_coefficients(d);
  ctx.outputs["b"] = b;
  ctx.table.header = {"node", "b"};
  for (std::size_t i = 0; i < b.size(); ++i) ctx.table.rows.push_back({std::to_string(i + 1), std::to_string(b[i])});
}

void cmd_roots(const std::string& spec, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const RootSystem rs = RootSystem::generate(d);
  json roots = json::array(), coroots = json::array();
  ctx.table.header = {"index", "height", "root", "coroot"};
  for (std::size_t n = 0; n < rs.num_positive(); ++n) {
    const Root& r = rs.positive_roots()[n];
    const Coroot& c = rs.positive_coroots()[n];
    roots.push_back(r.values);
    coroots.push_back(c.values);
    Int height = 0;
    for (Int x : r.values) height += x;
    ctx.table.rows.push_back({std::to_string(n + 1), std::to_string(height), cell(r.span()), cell(c.span())});
  }
  ctx.outputs["count"] = rs.num_positive();
  ctx.outputs["positive_roots"] = roots;
  ctx.outputs["positive_coroots"] = coroots;
  ctx.outputs["highest_root"] = d.connected() ? json(highest_root(rs).values) : json(nullptr);
}

void cmd_weyl(const std::string& spec, std::optional<std::size_t> limit, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const RootSystem rs = RootSystem::generate(d);
  const auto [w0, word] = longest_element(rs, NodeSet::all(d.rank()));
  ctx.outputs["num_positive"] = rs.num_positive();
  ctx.outputs["order"] = weyl_group_order(d);
  ctx.outputs["longest_length"] = w0.length();
  ctx.outputs["longest_word"] = word.letters;
  if (!limit) {
    ctx.table.header = {"key", "value"};
    ctx.table.rows = {{"num_positive", std::to_string(rs.num_positive())},
                      {"order", std::to_string(weyl_group_order(d))},
                      {"longest_length", std::to_string(w0.length())},
                      {"longest_word", cell(word.letters)}};
    return;
  }
  ctx.inputs["enumerate"] = *limit;
  const auto all = enumerate(rs, *limit);
  std::vector<std::size_t> counts(rs.num_positive() + 1, 0);
  for (const auto& w : all) ++counts[static_cast<std::size_t>(w.length())];
  ctx.outputs["enumerated"] = all.size();
  ctx.outputs["length_counts"] = counts;
  ctx.table.header = {"length", "count"};
  for (std::size_t l = 0; l < counts.size(); ++l)
    ctx.table.rows.push_back({std::to_string(l), std::to_string(counts[l])});
}

void cmd_tag(const std::string& spec, const std::string& lattice, const std::string& cocycle,
             const std::string& basis, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const IsogenyLattice l = make_lattice(d, lattice, basis, ctx);
  ctx.inputs["cocycle"] = cocycle;
  const Cocycle theta(l, Coweight(parse_vector(cocycle, "cocycle", d.rank())));
  const Tag t = tag_of(theta);
  ctx.outputs["tag"] = t.values;
  ctx.outputs["dominant"] = std::all_of(t.values.begin(), t.values.end(), [](Int x) { return x >= 0; });
  ctx.table.header = {"node", "tag"};
  for (std::size_t i = 0; i < t.size(); ++i) ctx.table.rows.push_back({std::to_string(i + 1), std::to_string(t[i])});
}

void cmd_admissible(const std::string& spec, const std::string& lattice, const std::string& tag_text,
                    const std::string& basis, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const IsogenyLattice l = make_lattice(d, lattice, basis, ctx);
  ctx.inputs["tag"] = tag_text;
  const Tag t(parse_vector(tag_text, "tag", d.rank()));
  const auto witness = is_admissible(t, l);
  ctx.outputs["admissible"] = witness.has_value();
  ctx.outputs["witness"] = witness ? json(witness->cocycle.coords().values) : json(nullptr);
  ctx.outputs["basis_coefficients"] = witness ? json(witness->basis_coefficients) : json(nullptr);
  ctx.outputs["index"] = admissible_index(l);
  ctx.outputs["smith_index"] = smith_index(l);
  ctx.outputs["invariant_factors"] = l.smith().invariant_factors();
  if (l.name() == "sc") {
    const json notes = sl_index_notes(d);
    if (!notes.empty()) ctx.outputs["index_discrepancy"] = notes;
  }
  ctx.table.header = {"key", "value"};
  ctx.table.rows = {{"admissible", witness ? "true" : "false"},
                    {"witness", witness ? cell(witness->cocycle.coords().span()) : ""},
                    {"index", std::to_string(admissible_index(l))},
                    {"smith_index", std::to_string(smith_index(l))}};
  if (ctx.outputs.contains("index_discrepancy"))
    for (const auto& n : ctx.outputs["index_discrepancy"])
      ctx.table.rows.push_back({"index_discrepancy", n["group"].get<std::string>() + " quoted " +
                                                         std::to_string(n["quoted_index"].get<int>()) +
                                                         " computed " +
                                                         std::to_string(n["computed_index"].get<int>())});
}

void cmd_sections(const std::string& spec, const std::string& lattice, const std::string& cocycle,
                  const std::string& basis, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const IsogenyLattice l = make_lattice(d, lattice, basis, ctx);
  ctx.inputs["cocycle"] = cocycle;
  const FlagBundleModel model(l, Coweight(parse_vector(cocycle, "cocycle", d.rank())));
  const RootSystem rs = RootSystem::generate(d);
  const auto sections = fundamental_sections(rs, model, enumeration_limit());
  json rows = json::array(), minimal = json::array();
  ctx.table.header = {"word", "length", "degrees", "minimal"};
  for (const auto& sd : sections) {
    const Word w = reduced_word(rs, sd.w);
    const bool is_min = is_minimal_section(sd);
    rows.push_back({{"word", w.letters}, {"length", sd.w.length()}, {"degrees", sd.degrees}, {"minimal", is_min}});
    if (is_min) minimal.push_back(w.letters);
    ctx.table.rows.push_back({cell(w.letters), std::to_string(sd.w.length()), cell(sd.degrees), is_min ? "true" : "false"});
  }
  ctx.outputs["tag"] = tag(model).values;
  ctx.outputs["count"] = sections.size();
  ctx.outputs["minimal"] = minimal;
  ctx.outputs["sections"] = rows;
}

json cohomology_json(const CohomologyResult& h) {
  if (h.all_zero) return {{"result", "ALL_ZERO"}};
  return {{"result", "H^" + std::to_string(h.degree)}, {"degree", h.degree}, {"dimension", to_json(h.dimension)}};
}

void cmd_cohom(const std::string& spec, const std::string& lambda_text, const std::string& strategy,
               Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  ctx.inputs["lambda"] = lambda_text;
  ctx.inputs["strategy"] = strategy;
  ReflectionStrategy s;
  if (strategy == "smallest") s = ReflectionStrategy::SmallestIndex;
  else if (strategy == "largest") s = ReflectionStrategy::LargestIndex;
  else if (strategy == "most-negative") s = ReflectionStrategy::MostNegative;
  else throw UsageError("unknown strategy '" + strategy + "': expected smallest, largest or most-negative");
  const RootSystem rs = RootSystem::generate(d);
  const LineBundleClass lambda(parse_vector(lambda_text, "lambda", d.rank()));
  const CohomologyResult h = cohomology(rs, lambda, s);
  ctx.outputs = cohomology_json(h);
  ctx.outputs["singular"] = is_singular(rs, lambda);
  ctx.table.header = {"degree", "dimension"};
  if (!h.all_zero) ctx.table.rows.push_back({std::to_string(h.degree), h.dimension.str()});
}

void cmd_euler(const std::string& spec, const std::string& lambda_text, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  ctx.inputs["lambda"] = lambda_text;
  const RootSystem rs = RootSystem::generate(d);
  const BigInt chi = euler_characteristic(rs, LineBundleClass(parse_vector(lambda_text, "lambda", d.rank())));
  ctx.outputs["euler_characteristic"] = to_json(chi);
  ctx.table.header = {"euler_characteristic"};
  ctx.table.rows.push_back({chi.str()});
}

void cmd_bott(const std::string& spec, const std::string& word_text, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  ctx.inputs["word"] = word_text;
  const RootSystem rs = RootSystem::generate(d);
  const Word w = parse_word(word_text, d.rank());
  const int dim = image_dimension(rs, w);
  const Word product = reduced_word(rs, demazure_product(rs, w));
  ctx.outputs["image_dimension"] = dim;
  ctx.outputs["word_length"] = w.size();
  ctx.outputs["reduced"] = is_reduced(rs, w);
  ctx.outputs["demazure_product"] = product.letters;
  ctx.table.header = {"key", "value"};
  ctx.table.rows = {{"image_dimension", std::to_string(dim)},
                    {"word_length", std::to_string(w.size())},
                    {"reduced", is_reduced(rs, w) ? "true" : "false"},
                    {"demazure_product", cell(product.letters)}};
}

void cmd_faces(const std::string& spec, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  const RootSystem rs = RootSystem::generate(d);
  json rows = json::array();
  ctx.table.header = {"nodes", "dimension", "longest_word"};
  for (const auto& row : simplicial_face_report(rs)) {
    rows.push_back({{"nodes", row.nodes.nodes()}, {"dimension", row.dimension}, {"longest_word", row.longest_word.letters}});
    ctx.table.rows.push_back({cell(row.nodes.nodes()), std::to_string(row.dimension), cell(row.longest_word.letters)});
  }
  ctx.outputs["rows"] = rows;
}

void cmd_homog(const std::string& spec, const std::string& subset, Context& ctx) {
  const DynkinDiagram d = load_diagram(spec, ctx);
  ctx.inputs["I"] = subset;
  const RootSystem rs = RootSystem::generate(d);
  const NodeSet i = parse_subset(subset, d.rank());
  const auto solutions = unsplit_tag_solutions(rs, i);
  json tags = json::array();
  bool all_trivial = true;
  for (const auto& t : solutions) {
    tags.push_back(t.values);
    all_trivial = all_trivial && restricted_trivial(t, i);
  }
  const bool ineq1 = homogeneity_inequality_1(rs, i);
  const bool ineq2 = homogeneity_inequality_2(rs, i);
  ctx.outputs["b"] = b_coefficients(rs);
  ctx.outputs["c"] = c_coefficients(rs, i);
  ctx.outputs["rel_canonical"] = rel_canonical_decomposition(rs, i);
  ctx.outputs["dim_GP"] = dim_GP(rs, i);
  ctx.outputs["inequality_1"] = ineq1;
  ctx.outputs["inequality_2"] = ineq2;
  ctx.outputs["unsplit_solutions"] = tags;
  ctx.outputs["restricted_trivial"] = all_trivial;
  ctx.table.header = {"node", "b", "c", "b_minus_c", "in_I"};
  const IntVector b = b_coefficients(rs), c = c_coefficients(rs, i);
  for (std::size_t n = 0; n < b.size(); ++n)
    ctx.table.rows.push_back({std::to_string(n + 1), std::to_string(b[n]), std::to_string(c[n]),
                              std::to_string(b[n] - c[n]), i.contains(static_cast<int>(n) + 1) ? "1" : "0"});
}

void cmd_verify(int rank_max, std::optional<std::uint64_t> seed, Context& ctx) {
  ctx.inputs["rank_max"] = rank_max;
  ctx.inputs["mutate_seed"] = seed ? json(*seed) : json(nullptr);
  if (rank_max < 1 || rank_max > 8) throw Error(ErrorKind::InvalidRank, "rank bound must lie in 1..8");
  const VerifyReport report = run_verify({rank_max, seed});
  json checks = json::array();
  ctx.table.header = {"check", "diagram", "result", "detail"};
  for (const auto& r : report.results) {
    checks.push_back({{"check", r.check}, {"diagram", r.diagram}, {"passed", r.passed}, {"detail", r.detail}});
    ctx.table.rows.push_back({r.check, r.diagram, r.passed ? "pass" : "FAIL", r.detail});
  }
  ctx.outputs["checks"] = checks;
  ctx.outputs["failures"] = report.failures();
  ctx.outputs["passed"] = report.passed();
  if (report.mutation) {
    const Mutation& m = *report.mutation;
    ctx.outputs["mutation"] = {{"diagram", m.diagram}, {"row", m.row + 1}, {"col", m.col + 1},
                               {"bit", m.bit}, {"before", m.before}, {"after", m.after}};
  } else {
    ctx.outputs["mutation"] = nullptr;
  }
  if (!report.passed())
    throw VerificationFailed(std::to_string(report.failures()) + " of " +
                             std::to_string(report.results.size()) + " checks failed");
}

std::string render_tsv(const Table& t) {
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "\t" : "") << cells[i];
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return os.str();
}

}  // namespace

Outcome run(const std::vector<std::string>& args) {
  CLI::App app{"Exact invariants of flag bundles over the projective line", "flagbundle"};
  app.require_subcommand(1);
  app.fallthrough();
  bool tsv = false;
  app.add_flag("--tsv", tsv, "Emit a tab-separated table instead of JSON");

  std::string diagram, lattice, vec, basis, strategy = "smallest", subset;
  std::optional<std::size_t> enumerate_limit;
  std::optional<std::uint64_t> mutate_seed;
  int rank_max = 4;

  auto positional_diagram = [&](CLI::App* sub) {
    sub->add_option("diagram", diagram, "Dynkin diagram, e.g. A3 or B2+G2")->required();
  };
  auto lattice_args = [&](CLI::App* sub, const char* what) {
    positional_diagram(sub);
    sub->add_option("lattice", lattice, "adjoint, sc or custom")->required();
    sub->add_option("vector", vec, what)->required();
    sub->add_option("--basis", basis, "Custom lattice basis as a JSON integer matrix (columns span L)");
  };

  auto* table1 = app.add_subcommand("table1", "b-coefficients of the diagram");
  positional_diagram(table1);
  auto* roots = app.add_subcommand("roots", "Positive roots and coroots");
  positional_diagram(roots);
  auto* weyl = app.add_subcommand("weyl", "Weyl group data");
  positional_diagram(weyl);
  weyl->add_option("--enumerate", enumerate_limit, "Enumerate W with this element limit");
  auto* tagc = app.add_subcommand("tag", "Tag of a cocycle");
  lattice_args(tagc, "Cocycle in fundamental-coweight coordinates");
  auto* adm = app.add_subcommand("admissible", "Admissibility of a tag");
  lattice_args(adm, "Tag");
  auto* sections = app.add_subcommand("sections", "Fundamental sections of a bundle model");
  lattice_args(sections, "Dominant cocycle");
  auto* cohom = app.add_subcommand("cohom", "Line bundle cohomology on G/B");
  positional_diagram(cohom);
  cohom->add_option("lambda", vec, "Class in fundamental-weight coordinates")->required();
  cohom->add_option("--strategy", strategy, "smallest, largest or most-negative");
  auto* euler = app.add_subcommand("euler", "Euler characteristic of a line bundle");
  positional_diagram(euler);
  euler->add_option("lambda", vec, "Class in fundamental-weight coordinates")->required();
  auto* bott = app.add_subcommand("bott", "Bott-Samelson image dimension of a word");
  positional_diagram(bott);
  bott->add_option("word", vec, "Word as comma-separated node indices")->required();
  auto* faces = app.add_subcommand("faces", "ch(I) dimensions for every proper subset");
  positional_diagram(faces);
  auto* homog = app.add_subcommand("homog", "Homogeneity data for a node subset I");
  positional_diagram(homog);
  homog->add_option("--I", subset, "Subset of nodes")->required();
  auto* verify = app.add_subcommand("verify", "Run every invariant sweep");
  verify->add_option("--rank-max", rank_max, "Largest rank swept");
  verify->add_option("--mutate-seed", mutate_seed, "Flip one seeded bit of one Cartan entry first");

  json report = {{"schema", 1}, {"argv", args}, {"command", nullptr}, {"diagram", nullptr},
                 {"inputs", json::object()}, {"outputs", nullptr}, {"status", "ok"}, {"error", nullptr}};
  Context ctx;
  int code = kExitOk;
  auto fail = [&](int exit_code, const std::string& kind, const std::string& detail) {
    code = exit_code;
    report["status"] = "error";
    report["error"] = {{"kind", kind}, {"detail", detail}};
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    CLI::App* sub = app.get_subcommands().front();
    report["command"] = sub->get_name();
    const std::string name = sub->get_name();
    if (name == "table1") cmd_table1(diagram, ctx);
    else if (name == "roots") cmd_roots(diagram, ctx);
    else if (name == "weyl") cmd_weyl(diagram, enumerate_limit, ctx);
    else if (name == "tag") cmd_tag(diagram, lattice, vec, basis, ctx);
    else if (name == "admissible") cmd_admissible(diagram, lattice, vec, basis, ctx);
    else if (name == "sections") cmd_sections(diagram, lattice, vec, basis, ctx);
    else if (name == "cohom") cmd_cohom(diagram, vec, strategy, ctx);
    else if (name == "euler") cmd_euler(diagram, vec, ctx);
    else if (name == "bott") cmd_bott(diagram, vec, ctx);
    else if (name == "faces") cmd_faces(diagram, ctx);
    else if (name == "homog") cmd_homog(diagram, subset, ctx);
    else if (name == "verify") cmd_verify(rank_max, mutate_seed, ctx);
    report["outputs"] = ctx.outputs;
  } catch (const CLI::CallForHelp&) {
    return {kExitOk, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {kExitOk, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    fail(kExitUsageError, "usage", e.what());
  } catch (const UsageError& e) {
    fail(kExitUsageError, "usage", e.what());
  } catch (const VerificationFailed& e) {
    report["outputs"] = ctx.outputs;
    fail(kExitDomainError, "verification-failed", e.what());
  } catch (const Error& e) {
    fail(kExitDomainError, std::string(to_string(e.kind())), e.what());
  } catch (const std::overflow_error& e) {
    fail(kExitDomainError, "arithmetic-overflow", e.what());
  }

  if (ctx.diagram) report["diagram"] = ctx.diagram->to_string();
  report["inputs"] = ctx.inputs;
  if (ctx.diagram) report["inputs"]["diagram"] = diagram;

  if (tsv) {
    if (code != kExitOk && report["outputs"].is_null())
      return {code, "error\t" + report["error"]["kind"].get<std::string>() + "\t" +
                        report["error"]["detail"].get<std::string>() + "\n"};
    std::string out = render_tsv(ctx.table);
    if (code != kExitOk)
      out += "error\t" + report["error"]["kind"].get<std::string>() + "\t" +
             report["error"]["detail"].get<std::string>() + "\n";
    return {code, out};
  }
  return {code, report.dump(2) + "\n"};
}

}  // namespace flagbundle::cli
