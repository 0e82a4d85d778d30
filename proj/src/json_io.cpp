#include "hitrans/json_io.hpp"

#include <fstream>
#include <sstream>

namespace hitrans {

Json finperm_to_json(const FinPerm& p) {
  Json j;
  if (p.is_shift()) {
    j["kind"] = "shift";
    j["s"] = p.shift_amount();
    return j;
  }
  j["kind"] = "table";
  Json pairs = Json::array();
  for (const auto& [src, tgt] : p.table_data().pairs()) pairs.push_back(Json::array({src, tgt}));
  j["pairs"] = std::move(pairs);
  return j;
}

FinPerm finperm_from_json(const Json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "shift") return FinPerm::shift(j.at("s").get<Int>());
  if (kind != "table") throw std::invalid_argument("FinPerm JSON: unknown kind " + kind);
  PartialInjection t;
  for (const auto& pair : j.at("pairs")) t.insert(pair.at(0).get<Int>(), pair.at(1).get<Int>());
  return FinPerm::table(std::move(t));
}

Json assignment_to_json(const GeneratorAssignment& a) {
  Json j = Json::array();
  for (const auto& [name, perm] : a.entries())
    j.push_back(Json::array({name, finperm_to_json(perm)}));
  return j;
}

GeneratorAssignment assignment_from_json(const Json& j) {
  GeneratorAssignment a;
  for (const auto& entry : j)
    a.set(entry.at(0).get<std::string>(), finperm_from_json(entry.at(1)));
  return a;
}

Json budget_to_json(const ConstructionBudget& b) {
  Json j;
  j["n_free"] = b.n_free;
  j["word_len"] = b.word_len;
  j["tuple_max"] = b.tuple_max;
  j["window_radius"] = b.window.radius();
  j["orbit_target"] = b.orbit_target;
  Json designated = Json::array();
  for (const Word& w : b.designated) designated.push_back(w.str());
  j["designated"] = std::move(designated);
  if (b.seed)
    j["seed"] = *b.seed;
  else
    j["seed"] = nullptr;
  return j;
}

ConstructionBudget budget_from_json(const Json& j) {
  ConstructionBudget b;
  b.n_free = j.at("n_free").get<int>();
  b.word_len = j.at("word_len").get<int>();
  b.tuple_max = j.at("tuple_max").get<int>();
  b.window = Window(j.at("window_radius").get<Int>());
  b.orbit_target = j.at("orbit_target").get<Int>();
  for (const auto& w : j.at("designated")) b.designated.push_back(Word::parse(w.get<std::string>()));
  if (j.contains("seed") && !j.at("seed").is_null()) b.seed = j.at("seed").get<std::uint64_t>();
  return b;
}

namespace {

std::string kind_name(Witness::Kind k) {
  switch (k) {
    case Witness::Kind::Nontrivial: return "nontrivial";
    case Witness::Kind::Mapping: return "mapping";
    case Witness::Kind::LongOrbit: return "long_orbit";
    case Witness::Kind::FiniteOrbit: return "finite_orbit";
  }
  throw std::logic_error("unknown witness kind");
}

Witness::Kind kind_from_name(const std::string& name) {
  if (name == "nontrivial") return Witness::Kind::Nontrivial;
  if (name == "mapping") return Witness::Kind::Mapping;
  if (name == "long_orbit") return Witness::Kind::LongOrbit;
  if (name == "finite_orbit") return Witness::Kind::FiniteOrbit;
  throw std::invalid_argument("Witness JSON: unknown kind " + name);
}

Json points_to_json(const std::vector<Int>& pts) {
  Json j = Json::array();
  for (Int p : pts) j.push_back(p);
  return j;
}

std::vector<Int> points_from_json(const Json& j) {
  std::vector<Int> out;
  for (const auto& p : j) out.push_back(p.get<Int>());
  return out;
}

}  // namespace

Json witness_to_json(const Witness& w) {
  Json j;
  j["kind"] = kind_name(w.kind);
  j["word"] = w.word.str();
  switch (w.kind) {
    case Witness::Kind::Nontrivial:
      j["moved_from"] = w.moved_from;
      j["moved_to"] = w.moved_to;
      break;
    case Witness::Kind::Mapping:
      j["from"] = points_to_json(w.from);
      j["to"] = points_to_json(w.to);
      j["shift"] = w.shift;
      break;
    case Witness::Kind::LongOrbit:
      j["core"] = w.core.str();
      j["conjugator"] = w.conjugator.str();
      j["chain"] = points_to_json(w.chain);
      break;
    case Witness::Kind::FiniteOrbit:
      j["core"] = w.core.str();
      j["conjugator"] = w.conjugator.str();
      j["base"] = w.base;
      j["base_conj"] = w.base_conj;
      j["cycle"] = points_to_json(w.cycle);
      break;
  }
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.kind = kind_from_name(j.at("kind").get<std::string>());
  w.word = Word::parse(j.at("word").get<std::string>());
  switch (w.kind) {
    case Witness::Kind::Nontrivial:
      w.moved_from = j.at("moved_from").get<Int>();
      w.moved_to = j.at("moved_to").get<Int>();
      break;
    case Witness::Kind::Mapping:
      w.from = points_from_json(j.at("from"));
      w.to = points_from_json(j.at("to"));
      w.shift = j.at("shift").get<Int>();
      break;
    case Witness::Kind::LongOrbit:
      w.core = Word::parse(j.at("core").get<std::string>());
      w.conjugator = Word::parse(j.at("conjugator").get<std::string>());
      w.chain = points_from_json(j.at("chain"));
      break;
    case Witness::Kind::FiniteOrbit:
      w.core = Word::parse(j.at("core").get<std::string>());
      w.conjugator = Word::parse(j.at("conjugator").get<std::string>());
      w.base = j.at("base").get<Int>();
      w.base_conj = j.at("base_conj").get<Int>();
      w.cycle = points_from_json(j.at("cycle"));
      break;
  }
  return w;
}

Json log_entry_to_json(const LogEntry& e) {
  Json j;
  j["op"] = e.op;
  j["word"] = e.witness.word.str();
  Json inserted = Json::array();
  for (const Insertion& ins : e.inserted)
    inserted.push_back(Json::array({ins.gen, ins.src, ins.tgt}));
  j["inserted"] = std::move(inserted);
  j["witness"] = witness_to_json(e.witness);
  return j;
}

LogEntry log_entry_from_json(const Json& j) {
  LogEntry e;
  e.op = j.at("op").get<std::string>();
  for (const auto& ins : j.at("inserted"))
    e.inserted.push_back(Insertion{ins.at(0).get<std::string>(), ins.at(1).get<Int>(),
                                   ins.at(2).get<Int>()});
  e.witness = witness_from_json(j.at("witness"));
  return e;
}

Json log_to_json(const ConstructionLog& log) {
  Json j = Json::array();
  for (const LogEntry& e : log.entries) j.push_back(log_entry_to_json(e));
  return j;
}

ConstructionLog log_from_json(const Json& j) {
  ConstructionLog log;
  for (const auto& e : j) log.entries.push_back(log_entry_from_json(e));
  return log;
}

std::string log_to_jsonl(const ConstructionLog& log) {
  std::ostringstream out;
  for (const LogEntry& e : log.entries) out << log_entry_to_json(e).dump() << '\n';
  return out.str();
}

ConstructionLog log_from_jsonl(const std::string& text) {
  ConstructionLog log;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    log.entries.push_back(log_entry_from_json(Json::parse(line)));
  }
  return log;
}

Json embedding_to_json(const EmbeddingSpec& spec) {
  Json j;
  j["format"] = "hitrans-embedding/1";
  j["genus"] = spec.genus;
  j["r"] = spec.r;
  j["parity"] = spec.even ? "even" : "odd";
  j["power"] = spec.power_n;
  if (spec.budget)
    j["budget"] = budget_to_json(*spec.budget);
  else
    j["budget"] = nullptr;
  Json phi_map = Json::array();
  for (const auto& [phi, target] : spec.phi_map)
    phi_map.push_back(Json::array({phi, target}));
  j["phi_map"] = std::move(phi_map);
  j["gamma"] = spec.gamma_phi.str();
  Json images = Json::array();
  for (const auto& [gen, w] : spec.images) images.push_back(Json::array({gen, w.str()}));
  j["images"] = std::move(images);
  j["assignment"] = assignment_to_json(spec.assignment);
  j["log"] = log_to_json(spec.log);
  return j;
}

EmbeddingSpec embedding_from_json(const Json& j) {
  EmbeddingSpec spec;
  spec.genus = j.at("genus").get<int>();
  spec.r = j.at("r").get<int>();
  spec.even = j.at("parity").get<std::string>() == "even";
  spec.power_n = j.at("power").get<int>();
  if (j.contains("budget") && !j.at("budget").is_null())
    spec.budget = budget_from_json(j.at("budget"));
  for (const auto& entry : j.at("phi_map"))
    spec.phi_map.emplace_back(entry.at(0).get<std::string>(), entry.at(1).get<std::string>());
  spec.gamma_phi = Word::parse(j.at("gamma").get<std::string>());
  for (const auto& entry : j.at("images"))
    spec.images.emplace_back(entry.at(0).get<std::string>(),
                             Word::parse(entry.at(1).get<std::string>()));
  spec.assignment = assignment_from_json(j.at("assignment"));
  spec.log = log_from_json(j.at("log"));
  return spec;
}

std::string artifact_to_string(const EmbeddingSpec& spec) {
  return embedding_to_json(spec).dump(2) + "\n";
}

EmbeddingSpec artifact_from_string(const std::string& text) {
  return embedding_from_json(Json::parse(text));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace hitrans
