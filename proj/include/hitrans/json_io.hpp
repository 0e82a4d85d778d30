#pragma once

#include <filesystem>
#include <json.hpp>

#include "hitrans/engine.hpp"

namespace hitrans {

// Stable, byte-reproducible serialization of every artifact. Maps are
// emitted as ordered arrays of pairs so identical inputs always produce
// identical bytes.

using Json = nlohmann::ordered_json;

Json finperm_to_json(const FinPerm& p);
FinPerm finperm_from_json(const Json& j);

Json assignment_to_json(const GeneratorAssignment& a);
GeneratorAssignment assignment_from_json(const Json& j);

Json budget_to_json(const ConstructionBudget& b);
ConstructionBudget budget_from_json(const Json& j);

Json witness_to_json(const Witness& w);
Witness witness_from_json(const Json& j);

Json log_entry_to_json(const LogEntry& e);
LogEntry log_entry_from_json(const Json& j);

Json log_to_json(const ConstructionLog& log);
ConstructionLog log_from_json(const Json& j);

// Construction log as JSON lines, one entry per line.
std::string log_to_jsonl(const ConstructionLog& log);
ConstructionLog log_from_jsonl(const std::string& text);

Json embedding_to_json(const EmbeddingSpec& spec);
EmbeddingSpec embedding_from_json(const Json& j);

std::string artifact_to_string(const EmbeddingSpec& spec);
EmbeddingSpec artifact_from_string(const std::string& text);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace hitrans
