#include "backstrom/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "backstrom/classify.hpp"
#include "backstrom/dsg.hpp"
#include "backstrom/errors.hpp"
#include "backstrom/oracle.hpp"
#include "backstrom/species.hpp"
#include "backstrom/syzygy.hpp"

namespace backstrom::cli {

using Json = nlohmann::ordered_json;

namespace {

template <class T>
T get_as(const nlohmann::json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput(what + " has the wrong type");
  }
}

std::size_t get_count(const nlohmann::json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InvalidInput(what + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 0) throw InvalidInput(what + " must be nonnegative");
  return static_cast<std::size_t>(v);
}

GroundField parse_field(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type")) throw InvalidInput("field must be an object with a type");
  const auto type = get_as<std::string>(j.at("type"), "field.type");
  if (type == "Q") return RationalField{};
  if (type == "Fp") {
    if (!j.contains("p")) throw InvalidInput("field of type Fp needs p");
    const auto p = get_count(j.at("p"), "field.p");
    if (p > 0xffffffffu) throw InvalidInput("field.p is too large");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  throw InvalidInput("unknown field type '" + type + "'");
}

OrderDescription parse_order(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("order must be an object");
  OrderDescription d;
  if (!j.contains("cycles") || !j.at("cycles").is_array()) throw InvalidInput("order.cycles must be an array");
  for (const auto& c : j.at("cycles")) d.hereditary.cycles.push_back(get_count(c, "cycle length"));
  if (!j.contains("partition") || !j.at("partition").is_array()) {
    throw InvalidInput("order.partition must be an array");
  }
  for (const auto& part : j.at("partition")) {
    if (!part.is_array()) throw InvalidInput("each part must be an array of node ids");
    auto& out = d.gluing.parts.emplace_back();
    for (const auto& id : part) out.push_back(get_count(id, "node id"));
  }
  return d;
}

ValuedQuiver parse_quiver(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("quiver must be an object");
  ValuedQuiver q;
  if (!j.contains("vertices") || !j.at("vertices").is_array()) throw InvalidInput("quiver.vertices must be an array");
  for (const auto& v : j.at("vertices")) {
    if (!v.is_object() || !v.contains("id")) throw InvalidInput("each vertex needs an id");
    const int weight = v.contains("weight") ? get_as<int>(v.at("weight"), "vertex weight") : 1;
    q.vertices.push_back({get_as<int>(v.at("id"), "vertex id"), weight});
  }
  if (j.contains("arrows")) {
    if (!j.at("arrows").is_array()) throw InvalidInput("quiver.arrows must be an array");
    for (const auto& a : j.at("arrows")) {
      if (!a.is_object() || !a.contains("src") || !a.contains("dst")) throw InvalidInput("each arrow needs src and dst");
      Valuation val;
      if (a.contains("val")) {
        const auto& pair = a.at("val");
        if (!pair.is_array() || pair.size() != 2) throw InvalidInput("arrow val must be [a, b]");
        val = {get_as<int>(pair[0], "valuation"), get_as<int>(pair[1], "valuation")};
      }
      const auto src = q.index_of(get_as<int>(a.at("src"), "arrow src"));
      const auto dst = q.index_of(get_as<int>(a.at("dst"), "arrow dst"));
      q.arrows.push_back({src, dst, val});
    }
  }
  return q;
}

Json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  return Json{{"kind", to_string(w->kind)}, {"vertices", w->vertices}, {"detail", w->detail}};
}

Json quiver_json(const ValuedQuiver& q) {
  Json vertices = Json::array(), arrows = Json::array();
  for (const auto& v : q.vertices) vertices.push_back({{"id", v.id}, {"weight", v.weight}});
  for (const auto& a : sorted_arrows(q)) {
    arrows.push_back({{"src", q.vertices[a.src].id}, {"dst", q.vertices[a.dst].id}, {"val", {a.val.a, a.val.b}}});
  }
  return {{"vertices", vertices}, {"arrows", arrows}};
}

Json report_json(const ClassificationReport& r, bool is_order) {
  Json j;
  j["input"] = is_order ? "order" : "quiver";
  j["hereditary"] = r.hereditary ? Json(*r.hereditary) : Json("unknown");
  j["finite_gldim"] = r.finite_gldim.value;
  j["gorenstein"] = r.gorenstein.value;
  j["iwanaga_gorenstein"] = r.iwanaga_gorenstein.value;
  j["sg_hom_finite"] = r.sg_hom_finite.value;
  j["self_injective"] = r.self_injective.value;
  j["finite_cm_type"] = r.finite_cm_type ? Json(r.finite_cm_type->value) : Json("unknown");
  j["indecomposable_cm_count"] = r.indec_cm_count ? Json(*r.indec_cm_count) : Json(nullptr);
  j["j_prime"] = r.j_prime;
  j["a_quiver"] = quiver_json(r.a_quiver);
  j["core"] = r.core;
  j["gproj_vertices"] = r.gproj_vertices;
  j["witnesses"] = {
      {"finite_gldim", witness_json(r.finite_gldim.witness)},
      {"iwanaga_gorenstein", witness_json(r.iwanaga_gorenstein.witness)},
      {"gorenstein", witness_json(r.gorenstein.witness)},
      {"self_injective", witness_json(r.self_injective.witness)},
      {"sg_hom_finite", witness_json(r.sg_hom_finite.witness)},
      {"finite_cm_type", r.finite_cm_type ? witness_json(r.finite_cm_type->witness) : Json(nullptr)},
  };
  return j;
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string a_quiver_dot(const ValuedQuiver& q) {
  std::ostringstream os;
  os << "digraph A {\n";
  for (const auto& v : q.vertices) {
    os << "  " << dot_id(std::to_string(v.id));
    if (v.weight != 1) os << " [xlabel=\"d=" << v.weight << "\"]";
    os << ";\n";
  }
  for (const auto& a : sorted_arrows(q)) {
    os << "  " << dot_id(std::to_string(q.vertices[a.src].id)) << " -> " << dot_id(std::to_string(q.vertices[a.dst].id));
    if (!a.val.trivial()) os << " [label=\"(" << a.val.a << "," << a.val.b << ")\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string h_quiver_dot(const BackstromOrder& order) {
  const auto h = build_h(order);
  std::ostringstream os;
  os << "digraph H {\n";
  for (auto p : h.lambda_vertices) os << "  " << dot_id("P" + std::to_string(p + 1)) << ";\n";
  for (const auto& g : h.gamma_vertices) os << "  " << dot_id(std::to_string(g.id)) << ";\n";
  for (const auto& a : h.arrows) {
    os << "  " << dot_id("P" + std::to_string(h.lambda_vertices[a.part] + 1)) << " -> "
       << dot_id(std::to_string(h.gamma_vertices[a.node].id)) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string history_field(const StabilizedHom& h) {
  std::string s;
  for (std::size_t i = 0; i < h.history.size(); ++i) s += (i ? ";" : "") + std::to_string(h.history[i]);
  return s;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

// Both kinds of input reduce to a quiver plus a syzygy operator for the
// order-independent analyses.
struct Analysed {
  std::optional<BackstromOrder> order;
  ValuedQuiver quiver;
  SyzygyOperator op;
};

Analysed analyse(const InputDocument& doc) {
  Analysed a;
  if (doc.is_order()) {
    auto d = std::get<OrderDescription>(doc.content);
    d.field = doc.field;
    a.order.emplace(std::move(d));
    a.quiver = build_a_lambda(*a.order).quiver;
    a.op = order_syzygy_operator(*a.order);
  } else {
    a.quiver = std::get<ValuedQuiver>(doc.content);
    const auto problems = validate(a.quiver);
    if (!problems.empty()) {
      std::string msg = "invalid valued quiver:";
      for (const auto& p : problems) msg += " " + p + ";";
      throw InvalidInput(msg);
    }
    a.op = quiver_syzygy_operator(a.quiver);
  }
  return a;
}

const BackstromOrder& require_order(const Analysed& a, const std::string& command) {
  if (!a.order) throw InvalidInput(command + " needs an order description, not a bare quiver");
  return *a.order;
}

ClassificationReport classify_any(const Analysed& a) {
  return a.order ? classify(*a.order) : classify_quiver(a.quiver);
}

Json v_structure_json(const VStructure& v) {
  if (const auto* ns = std::get_if<NotSemisimple>(&v)) {
    return {{"semisimple", false}, {"witness", witness_json(ns->witness)}};
  }
  const auto& w = std::get<WedderburnData>(v);
  Json blocks = Json::array(), suspension = Json::array();
  std::uint64_t dim = 0;
  for (const auto& b : w.blocks) {
    blocks.push_back({{"vertex", b.vertex}, {"multiplicity", b.multiplicity}, {"weight", b.weight}});
    dim += b.multiplicity * b.multiplicity * static_cast<std::uint64_t>(b.weight);
  }
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    suspension.push_back({{"from", w.blocks[i].vertex}, {"to", w.blocks[w.suspension[i]].vertex}});
  }
  return {{"semisimple", true}, {"level", w.level}, {"dim_end", dim}, {"blocks", blocks}, {"suspension", suspension}};
}

std::string end_dimension(const Analysed& a) {
  std::uint64_t total = 0;
  for (std::size_t x = 0; x < a.op.size(); ++x) {
    for (std::size_t y = 0; y < a.op.size(); ++y) {
      const auto h = stabilized_hom(a.op, x, y);
      if (h.infinite()) return "inf";
      total += *h.dim;
    }
  }
  return std::to_string(total);
}

int cmd_validate(const std::string& path, std::ostream& out) {
  const auto doc = load_document(path);
  Json violations = Json::array();
  if (doc.is_order()) {
    for (const auto& v : validate(std::get<OrderDescription>(doc.content))) {
      Json item{{"kind", to_string(v.kind)}, {"message", v.message}};
      item["node"] = v.node ? Json(*v.node) : Json(nullptr);
      item["part"] = v.part ? Json(*v.part + 1) : Json(nullptr);
      violations.push_back(item);
    }
  } else {
    for (const auto& m : validate(std::get<ValuedQuiver>(doc.content))) {
      violations.push_back({{"kind", "quiver"}, {"message", m}, {"node", nullptr}, {"part", nullptr}});
    }
  }
  const bool valid = violations.empty();
  out << Json{{"valid", valid}, {"input", doc.is_order() ? "order" : "quiver"}, {"field", describe(doc.field)},
              {"violations", violations}}.dump(2)
      << "\n";
  return valid ? 0 : 1;
}

int cmd_classify(const std::string& path, std::ostream& out) {
  const auto doc = load_document(path);
  const auto a = analyse(doc);
  auto j = report_json(classify_any(a), doc.is_order());
  j["field"] = describe(doc.field);
  out << j.dump(2) << "\n";
  return 0;
}

int cmd_cm_count(const std::string& path, std::ostream& out) {
  const auto a = analyse(load_document(path));
  const auto& order = require_order(a, "cm-count");
  const auto report = is_finite_cm_type(order);
  Json comps = Json::array();
  for (const auto& c : report.components) {
    Json labels = Json::array();
    for (auto v : c.vertices) labels.push_back(report.graph.vertices[v].label);
    Json item{{"vertices", labels}};
    if (c.is_dynkin()) {
      item["type"] = to_string(std::get<DynkinType>(c.kind));
      item["reason"] = nullptr;
    } else {
      const auto& bad = std::get<NotDynkin>(c.kind);
      item["type"] = nullptr;
      item["reason"] = to_string(bad.reason) + ": " + bad.detail;
    }
    comps.push_back(item);
  }
  const auto count = count_indec_cm(order);
  out << Json{{"finite_cm_type", report.finite},
              {"indecomposable_cm_count", count ? Json(*count) : Json(nullptr)},
              {"components", comps}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_syzygy(const std::string& path, std::size_t node_id, std::size_t iterate, std::ostream& out) {
  const auto a = analyse(load_document(path));
  const auto& order = require_order(a, "syzygy");
  if (node_id < 1 || node_id > order.node_count()) {
    throw InvalidInput("node " + std::to_string(node_id) + " is outside 1.." + std::to_string(order.node_count()));
  }
  const Node j = order.node_from_external(node_id);
  const auto cover = full_cover_kernel(order, j);
  Json kernel = Json::array();
  for (const auto& k : cover.kernel) kernel.push_back(order.external_id(k));
  Json steps = Json::array();
  if (!cover.lambda_projective) {
    StableObject x = StableObject::single(j);
    for (std::size_t k = 1; k <= iterate; ++k) {
      x = syzygy(order, x);
      Json obj = Json::object();
      for (const auto& [node, m] : x.multiplicities()) obj[std::to_string(order.external_id(node))] = m;
      steps.push_back(obj);
    }
  }
  out << Json{{"node", node_id},
              {"lambda_projective", cover.lambda_projective},
              {"part", cover.part + 1},
              {"cover_kernel", kernel},
              {"iterate", iterate},
              {"syzygies", steps}}
             .dump(2)
      << "\n";
  return 0;
}

int cmd_dsg_hom(const std::string& path, const std::vector<int>& pair, std::ostream& out) {
  const auto a = analyse(load_document(path));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (pair.empty()) {
    for (std::size_t x = 0; x < a.op.size(); ++x) {
      for (std::size_t y = 0; y < a.op.size(); ++y) pairs.emplace_back(x, y);
    }
  } else {
    pairs.emplace_back(a.op.index_of(pair[0]), a.op.index_of(pair[1]));
  }
  out << "a,b,dim,level,history\n";
  for (const auto& [x, y] : pairs) {
    const auto h = stabilized_hom(a.op, x, y);
    out << a.op.ids[x] << "," << a.op.ids[y] << "," << (h.dim ? std::to_string(*h.dim) : "inf") << "," << h.level
        << "," << history_field(h) << "\n";
  }
  return 0;
}

int cmd_v_structure(const std::string& path, std::ostream& out) {
  const auto a = analyse(load_document(path));
  out << v_structure_json(v_structure(a.quiver, a.op)).dump(2) << "\n";
  return 0;
}

int cmd_oracle(const std::string& path, std::uint64_t seed, std::size_t trials, std::ostream& out) {
  if (const char* env = std::getenv("BACKSTROM_SEED")) {
    try {
      seed = std::stoull(env);
    } catch (const std::exception&) {
      throw InvalidInput("BACKSTROM_SEED is not an unsigned integer");
    }
  }
  OracleSummary s;
  if (path.empty()) {
    s = run_oracle(seed, trials);
  } else {
    const auto a = analyse(load_document(path));
    s = run_oracle(require_order(a, "oracle-check"), seed);
  }
  out << Json{{"ok", s.ok()},
              {"seed", s.seed},
              {"trials", s.trials},
              {"syzygy_mismatches", s.syzygy_mismatches},
              {"dsg_mismatches", s.dsg_mismatches},
              {"details", s.details}}
             .dump(2)
      << "\n";
  return s.ok() ? 0 : 2;
}

struct BatchRow {
  std::string name;
  std::string cells;  // everything after the name
  bool error = false;
};

BatchRow batch_row(const std::filesystem::path& file) {
  BatchRow row{file.stem().string(), {}, false};
  std::string error;
  try {
    const auto a = analyse(load_document(file));
    const auto r = classify_any(a);
    auto b = [](bool v) { return std::string(v ? "true" : "false"); };
    row.cells = std::to_string(r.j_prime.size()) + "," +
                (r.hereditary ? b(*r.hereditary) : std::string("unknown")) + "," + b(r.finite_gldim.value) + "," +
                b(r.gorenstein.value) + "," + b(r.iwanaga_gorenstein.value) + "," + b(r.sg_hom_finite.value) + "," +
                (r.finite_cm_type ? b(r.finite_cm_type->value) : std::string("unknown")) + "," +
                (r.indec_cm_count ? std::to_string(*r.indec_cm_count) : std::string(r.finite_cm_type ? "inf" : "")) +
                "," + end_dimension(a) + ",";
    return row;
  } catch (const InternalError& e) {
    error = std::string("internal: ") + e.what();
  } catch (const std::exception& e) {
    error = e.what();
  }
  row.error = true;
  row.cells = ",,,,,,,,," + csv_escape(error);
  return row;
}

int cmd_batch(const std::string& dir, std::size_t jobs, std::ostream& out) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidInput("'" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<BatchRow> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) rows[i] = batch_row(files[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < std::max<std::size_t>(jobs, 1); ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(rows.begin(), rows.end(), [](const BatchRow& x, const BatchRow& y) { return x.name < y.name; });

  out << "name,j_prime,hereditary,finite_gldim,gorenstein,iwanaga_gorenstein,sg_hom_finite,finite_cm_type,"
         "indec_count,dim_end_dsg,error\n";
  bool any_error = false;
  for (const auto& r : rows) {
    out << csv_escape(r.name) << "," << r.cells << "\n";
    any_error = any_error || r.error;
  }
  return any_error ? 1 : 0;
}

}  // namespace

InputDocument parse_document(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("input must be a JSON object");
  InputDocument doc;
  if (j.contains("field")) doc.field = parse_field(j.at("field"));
  const bool has_order = j.contains("order"), has_quiver = j.contains("quiver");
  if (has_order == has_quiver) throw InvalidInput("input needs exactly one of 'order' and 'quiver'");
  if (has_order) {
    doc.content = parse_order(j.at("order"));
  } else {
    doc.content = parse_quiver(j.at("quiver"));
  }
  return doc;
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cohen-Macaulay, syzygy and singularity-category data of split basic Backstrom orders", "backstrom"};
  app.require_subcommand(1);

  std::string input, dir;
  std::size_t node = 0, iterate = 1, trials = 200, jobs = 1;
  std::uint64_t seed = 1;
  std::vector<int> pair;
  bool all = false, dot = false;

  auto* validate_cmd = app.add_subcommand("validate", "check an input document and list violations");
  validate_cmd->add_option("input", input, "input JSON")->required();
  auto* classify_cmd = app.add_subcommand("classify", "homological verdicts as JSON");
  classify_cmd->add_option("input", input, "input JSON")->required();
  auto* h_cmd = app.add_subcommand("h-quiver", "the bipartite H-quiver as DOT");
  h_cmd->add_option("input", input, "input JSON")->required();
  h_cmd->add_flag("--dot", dot, "emit DOT (the only format)");
  auto* a_cmd = app.add_subcommand("a-quiver", "the valued quiver of A(Lambda) as DOT");
  a_cmd->add_option("input", input, "input JSON")->required();
  a_cmd->add_flag("--dot", dot, "emit DOT (the only format)");
  auto* cm_cmd = app.add_subcommand("cm-count", "finite CM type and number of indecomposables");
  cm_cmd->add_option("input", input, "input JSON")->required();
  auto* syz_cmd = app.add_subcommand("syzygy", "iterated stable syzygies of Q_J");
  syz_cmd->add_option("input", input, "input JSON")->required();
  syz_cmd->add_option("--node", node, "external node id")->required();
  syz_cmd->add_option("--iterate", iterate, "number of syzygy steps")->check(CLI::NonNegativeNumber);
  auto* dsg_cmd = app.add_subcommand("dsg-hom", "stabilized Hom dimensions as CSV");
  dsg_cmd->add_option("input", input, "input JSON")->required();
  auto* all_opt = dsg_cmd->add_flag("--all", all, "every pair (default)");
  dsg_cmd->add_option("--pair", pair, "two vertex ids")->expected(2)->excludes(all_opt);
  auto* v_cmd = app.add_subcommand("v-structure", "Wedderburn data of V(Lambda) as JSON");
  v_cmd->add_option("input", input, "input JSON")->required();
  auto* oracle_cmd = app.add_subcommand("oracle-check", "cross-check against the independent pipelines");
  oracle_cmd->add_option("input", input, "optional input JSON; random orders when absent");
  oracle_cmd->add_option("--seed", seed, "random seed (BACKSTROM_SEED overrides)");
  oracle_cmd->add_option("--trials", trials, "number of random orders");
  auto* batch_cmd = app.add_subcommand("batch", "CSV summary of every *.json in a directory");
  batch_cmd->add_option("dir", dir, "input directory")->required();
  batch_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  std::vector<std::string> argv_store{"backstrom"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(input, out);
    if (classify_cmd->parsed()) return cmd_classify(input, out);
    if (h_cmd->parsed()) {
      const auto a = analyse(load_document(input));
      out << h_quiver_dot(require_order(a, "h-quiver"));
      return 0;
    }
    if (a_cmd->parsed()) {
      out << a_quiver_dot(analyse(load_document(input)).quiver);
      return 0;
    }
    if (cm_cmd->parsed()) return cmd_cm_count(input, out);
    if (syz_cmd->parsed()) return cmd_syzygy(input, node, iterate, out);
    if (dsg_cmd->parsed()) return cmd_dsg_hom(input, pair, out);
    if (v_cmd->parsed()) return cmd_v_structure(input, out);
    if (oracle_cmd->parsed()) return cmd_oracle(input, seed, trials, out);
    if (batch_cmd->parsed()) return cmd_batch(dir, jobs, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace backstrom::cli
