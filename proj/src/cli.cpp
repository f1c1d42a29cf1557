#include "dmx/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "dmx/errors.hpp"
#include "dmx/io.hpp"
#include "dmx/verify/checks.hpp"

namespace dmx::cli {

namespace {

// Thrown for unreadable files and bad --set labels; reported with exit code 2.
struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": error: cannot read file"};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SubsetMask parse_set(const std::string& text, const GroundSet& ground) {
  SubsetMask out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  int column = 1;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    const std::string label = b == std::string::npos ? "" : item.substr(b, e - b + 1);
    const auto index = ground.index_of(label);
    if (!index) throw InputError{"--set:1:" + std::to_string(column) + ": error: unknown label '" + label + "'"};
    out = out.with(*index);
    column += static_cast<int>(item.size()) + 1;
  }
  return out;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string compact_rows(const std::vector<std::uint32_t>& rows, int width) {
  std::string out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r != 0) out += ' ';
    for (int c = 0; c < width; ++c) out += ((rows[r] >> c) & 1U) ? '1' : '0';
  }
  return out;
}

std::string subsets_line(const GroundSet& ground, const std::vector<SubsetMask>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) out += (i == 0 ? "" : " ") + format_subset(ground, sets[i]);
  return out;
}

const char* kind_name(io::DmKind k) {
  switch (k) {
    case io::DmKind::matroid: return "matroid";
    case io::DmKind::set_system: return "set-system";
    case io::DmKind::delta_matroid: break;
  }
  return "delta-matroid";
}

std::string violation_text(const GroundSet& g, const ExchangeViolation& v) {
  return "X=" + format_subset(g, v.x) + " Y=" + format_subset(g, v.y) + " u=" + g.label(v.u);
}

// Loads any of the three formats as a delta-matroid; validation failures become InputError.
DeltaMatroid load_delta(const std::string& path, const std::string& text) {
  switch (io::detect_kind(path, text)) {
    case io::FileKind::gf2: {
      const auto doc = io::parse_gf2(text);
      if (const auto* a = std::get_if<Gf2SymmetricMatrix>(&doc)) return delta_matroid_from_symmetric(*a);
      return column_matroid(std::get<Gf2Matrix>(doc)).as_delta_matroid();
    }
    case io::FileKind::rg: return delta_matroid_of_ribbon(io::parse_rg(text));
    case io::FileKind::dm: break;
  }
  const auto doc = io::parse_dm(text);
  if (!doc.system.proper()) throw InputError{path + ": error: empty feasible family"};
  auto v = validate_delta_matroid(doc.system);
  if (!v.valid()) {
    throw InputError{path + ": error: not a delta-matroid, exchange fails at " + violation_text(doc.system.ground(), *v.violation)};
  }
  if (doc.kind == io::DmKind::matroid && !matroid_from_bases(doc.system).valid()) {
    throw InputError{path + ": error: declared matroid but the bases are not equicardinal"};
  }
  return *v.delta_matroid;
}

int cmd_check(const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  switch (io::detect_kind(path, text)) {
    case io::FileKind::gf2: {
      const auto doc = io::parse_gf2(text);
      if (const auto* a = std::get_if<Gf2SymmetricMatrix>(&doc)) {
        out << "kind: gf2-symmetric\norder: " << a->order() << "\nvalid: yes\n";
      } else {
        const auto& b = std::get<Gf2Matrix>(doc);
        out << "kind: gf2-matrix\nrows: " << b.rows() << "\ncolumns: " << b.cols() << "\nvalid: yes\n";
      }
      return kExitOk;
    }
    case io::FileKind::rg: {
      const RibbonGraph g = io::parse_rg(text);
      out << "kind: ribbon-graph\nvertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
          << "\nconnected: " << yes_no(g.is_connected()) << "\nvalid: yes\n";
      return kExitOk;
    }
    case io::FileKind::dm: break;
  }
  const auto doc = io::parse_dm(text);
  const SetSystem& s = doc.system;
  out << "kind: " << kind_name(doc.kind) << "\n";
  out << "ground-size: " << s.ground_size() << "\n";
  out << "feasible-sets: " << s.family_size() << "\n";
  if (!s.proper()) {
    out << "valid: no\nwitness: empty feasible family\n";
    return kExitInputError;
  }
  const auto violation = find_exchange_violation(s);
  if (doc.kind == io::DmKind::set_system) {
    out << "valid: yes\n";
    out << "delta-matroid: " << yes_no(!violation) << "\n";
    if (violation) out << "witness: " << violation_text(s.ground(), *violation) << "\n";
    return kExitOk;
  }
  if (violation) {
    out << "valid: no\nwitness: " << violation_text(s.ground(), *violation) << "\n";
    return kExitInputError;
  }
  if (doc.kind == io::DmKind::matroid) {
    const auto m = matroid_from_bases(s);
    if (!m.valid()) {
      const auto& v = *m.violation;
      out << "valid: no\nwitness: " << format_subset(s.ground(), v.first) << " and "
          << format_subset(s.ground(), v.second) << " differ in size\n";
      return kExitInputError;
    }
    out << "valid: yes\nrank: " << m.matroid->rank() << "\n";
    return kExitOk;
  }
  out << "valid: yes\n";
  return kExitOk;
}

int cmd_op(const std::string& op, const std::string& set_text, const std::string& path, std::ostream& out,
           std::ostream& err) {
  const std::string text = read_file(path);
  const auto doc = io::parse_dm(text);
  const SetSystem& s = doc.system;
  const SubsetMask x = parse_set(set_text, s.ground());
  const bool delta = doc.kind != io::DmKind::set_system;
  if (delta) load_delta(path, text);
  SetSystem result;
  if (op == "twist") {
    result = twist(s, x);
  } else if (op == "dual") {
    result = twist(s, s.ground().full());
  } else if (op == "delete") {
    result = minor(s, x, SubsetMask());
  } else if (op == "contract") {
    result = minor(s, SubsetMask(), x);
  } else {
    result = loop_complement(s, x);
    if (!result.proper()) {
      err << "warning: the loop complement has no feasible sets\n";
    } else if (delta && find_exchange_violation(result)) {
      err << "warning: the loop complement is not a delta-matroid\n";
    }
  }
  out << io::format_dm(result);
  return kExitOk;
}

void print_classification(const DeltaMatroid& d, std::ostream& out) {
  const GroundSet& g = d.ground();
  out << "even: " << yes_no(parity(d) == Parity::even) << "\n";
  const BinaryCertificate bin = is_binary_delta(d);
  out << "binary: " << yes_no(bin.verdict) << "\n";
  if (bin.verdict) {
    out << "binary-twist: " << format_subset(g, bin.twist_set) << "\n";
    out << "binary-matrix: " << compact_rows(bin.matrix->rows(), bin.matrix->order()) << "\n";
  }
  const ClassificationReport k = classify_delta(d);
  out << "bipartite: " << yes_no(k.bipartite) << "\n";
  if (k.odd_circuit_witness) out << "odd-circuit: " << format_subset(g, *k.odd_circuit_witness) << "\n";
  out << "eulerian: " << yes_no(k.eulerian) << "\n";
  if (k.eulerian_partition) out << "eulerian-partition: " << subsets_line(g, *k.eulerian_partition) << "\n";
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const std::string text = read_file(path);
  print_classification(load_delta(path, text), out);
  return kExitOk;
}

int cmd_ribbon(const std::string& action, const std::optional<std::string>& set_text, const std::string& path,
               std::ostream& out) {
  const RibbonGraph g = io::parse_rg(read_file(path));
  if (action == "petrial") {
    const GroundSet edges = g.edge_ground();
    const SubsetMask x = set_text ? parse_set(*set_text, edges) : edges.full();
    out << io::format_rg(petrial(g, x));
    return kExitOk;
  }
  const DeltaMatroid d = delta_matroid_of_ribbon(g);
  if (action == "to-dm") {
    out << io::format_dm(d.system());
    return kExitOk;
  }
  out << "vertices: " << g.vertex_count() << "\n";
  out << "edges: " << g.edge_count() << "\n";
  out << "faces: " << boundary_components(g, g.edge_ground().full()) << "\n";
  out << "orientable: " << yes_no(is_orientable(g)) << "\n";
  out << "graph-bipartite: " << yes_no(underlying_bipartite(g)) << "\n";
  out << "graph-eulerian: " << yes_no(underlying_eulerian(g)) << "\n";
  out << "quasi-trees: " << d.family().size() << "\n";
  print_classification(d, out);
  out << "dual-eulerian: " << yes_no(is_eulerian_delta(dual(d))) << "\n";
  return kExitOk;
}

std::string strip_position(const ParseError& e) {
  const std::string what = e.what();
  const std::string prefix = std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": ";
  return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Delta-matroid toolkit", "dmx"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;

  std::string file;
  auto* check = app.add_subcommand("check", "Validate a .dm, .gf2 or .rg file");
  check->add_option("file", file, "Input file")->required();

  std::string op;
  std::string set_text;
  auto* op_cmd = app.add_subcommand("op", "Apply an operation and print the result in .dm form");
  op_cmd->add_option("operation", op, "twist, lc, dual, delete or contract")
      ->required()
      ->check(CLI::IsMember({"twist", "lc", "dual", "delete", "contract"}));
  op_cmd->add_option("--set", set_text, "Comma-separated labels");
  op_cmd->add_option("file", file, "Input .dm file")->required();

  auto* classify = app.add_subcommand("classify", "Parity, binary, bipartite and Eulerian verdicts");
  classify->add_option("file", file, "Input file")->required();

  int n = 0;
  std::size_t samples = 1000;
  auto* enumerate = app.add_subcommand("enumerate", "Catalogue of delta-matroids on n elements");
  enumerate->add_option("--n", n, "Ground set size")->required()->check(CLI::Range(0, verify::kMaxCatalogueGround));
  enumerate->add_option("--seed", seed, "Sampling seed")->envname("DMX_SEED");
  enumerate->add_option("--samples", samples, "Random instances for n = 5, 6");

  verify::RunOptions options;
  std::string suite;
  std::string format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suites = verify::suite_names();
  suites.insert(suites.begin(), "all");
  verify_cmd->add_option("--suite", suite, "Suite name or all")->required()->check(CLI::IsMember(suites));
  verify_cmd->add_option("--max-n", options.max_n, "Ground size cap for exhaustive corpora")->check(CLI::Range(0, 8));
  verify_cmd->add_option("--seed", seed, "Seed for random corpora")->envname("DMX_SEED");
  verify_cmd->add_option("--shards", options.shards, "Worker threads")->check(CLI::Range(1, 256));
  verify_cmd->add_option("--samples", options.samples, "Random instances per random corpus");
  verify_cmd->add_option("--random-n", options.random_max_n, "Ground size cap for random instances")
      ->check(CLI::Range(1, verify::kMaxRandomGround));
  verify_cmd->add_option("--format", format, "text or records")->check(CLI::IsMember({"text", "records"}));

  std::string action;
  std::string ribbon_set;
  auto* ribbon = app.add_subcommand("ribbon", "Ribbon graph commands");
  ribbon->add_option("action", action, "classify, petrial or to-dm")
      ->required()
      ->check(CLI::IsMember({"classify", "petrial", "to-dm"}));
  auto* ribbon_set_opt = ribbon->add_option("--set", ribbon_set, "Edges to twist for petrial");
  ribbon->add_option("file", file, "Input .rg file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check) return cmd_check(file, out);
    if (*op_cmd) return cmd_op(op, set_text, file, out, err);
    if (*classify) return cmd_classify(file, out);
    if (*enumerate) {
      out << verify::format_catalogue(verify::enumerate_delta_matroids(n, seed, samples));
      return kExitOk;
    }
    if (*verify_cmd) {
      options.seed = seed;
      const auto reports = verify::run_suite(suite, options);
      out << (format == "records" ? verify::format_records(reports) : verify::format_text(reports));
      return verify::all_passed(reports) ? kExitOk : kExitVerdictFailed;
    }
    std::optional<std::string> ribbon_arg;
    if (ribbon_set_opt->count() > 0) ribbon_arg = ribbon_set;
    return cmd_ribbon(action, ribbon_arg, file, out);
  } catch (const InputError& e) {
    err << e.message << "\n";
  } catch (const ParseError& e) {
    err << file << ":" << e.line() << ":" << e.column() << ": error: " << strip_position(e) << "\n";
  } catch (const std::invalid_argument& e) {
    err << (file.empty() ? "" : file + ": ") << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace dmx::cli
