#include "corpus_runner.hpp"

#include <sstream>

#include "cli.hpp"
#include "examples.hpp"
#include "json.hpp"
#include "weakhopf/io.hpp"

namespace weakhopf::examples {

namespace fs = std::filesystem;

std::vector<CorpusCase> load_manifest() {
  const auto j = nlohmann::json::parse(read_text(fs::path(corpus_dir) / "manifest.json"));
  std::vector<CorpusCase> out;
  for (const auto& c : j.at("cases")) {
    out.push_back({c.at("name").get<std::string>(), c.at("args").get<std::vector<std::string>>(),
                   c.at("exit").get<int>()});
  }
  return out;
}

namespace {

std::string substitute(std::string s, const std::string& key, const std::string& value) {
  for (auto pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size())) {
    s.replace(pos, key.size(), value);
  }
  return s;
}

}  // namespace

std::vector<CorpusResult> run_corpus(const fs::path& tmp) {
  std::vector<CorpusResult> out;
  for (const auto& c : load_manifest()) {
    std::vector<std::string> args;
    for (const auto& a : c.args) args.push_back(substitute(substitute(a, "{corpus}", corpus_dir), "{tmp}", tmp.string()));
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    std::string text = o.str();
    if (!e.str().empty()) text += "--- stderr ---\n" + e.str();
    out.push_back({c, code, text});
  }
  return out;
}

fs::path fixture_path(const std::string& name) { return fs::path(corpus_dir) / "expected" / (name + ".out"); }

fs::path scratch_dir(const std::string& tag) {
  const fs::path p = fs::temp_directory_path() / ("weakhopf-" + tag);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace weakhopf::examples
