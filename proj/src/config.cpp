#include "thinset/config.hpp"

#include <fstream>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "thinset/errors.hpp"
#include "thinset/rng.hpp"

namespace thinset {

namespace {

template <class T, class F>
T convert(const std::string& key, const std::string& text, F parse) {
  try {
    std::size_t used = 0;
    T v = parse(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("config key '" + key + "': cannot parse '" + text + "'");
  }
}

}  // namespace

Config Config::parse(const std::string& text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw UsageError(std::string("config: ") + e.what());
  }
  Config cfg;
  for (const auto& [name, node] : tree) {
    if (node.empty()) {
      cfg.set(name, node.data());
      continue;
    }
    for (const auto& [key, leaf] : node) cfg.set(name + "." + key, leaf.data());
  }
  return cfg;
}

Config Config::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void Config::set(const std::string& key, const std::string& value) {
  entries_[key] = boost::algorithm::trim_copy(value);
}

bool Config::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return convert<double>(key, it->second,
                         [](const std::string& s, std::size_t* n) { return std::stod(s, n); });
}

long long Config::get_int(const std::string& key, long long fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  return convert<long long>(key, it->second,
                            [](const std::string& s, std::size_t* n) { return std::stoll(s, n); });
}

std::vector<double> Config::get_doubles(const std::string& key,
                                        const std::vector<double>& fallback) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  std::vector<std::string> parts;
  boost::split(parts, it->second, boost::is_any_of(","));
  std::vector<double> out;
  for (auto& part : parts) {
    boost::algorithm::trim(part);
    if (part.empty()) continue;
    out.push_back(convert<double>(key, part,
                                  [](const std::string& s, std::size_t* n) { return std::stod(s, n); }));
  }
  return out;
}

std::uint64_t Config::seed() const {
  for (const char* key : {"seed", "general.seed"}) {
    auto it = entries_.find(key);
    if (it == entries_.end()) continue;
    return convert<std::uint64_t>(key, it->second, [](const std::string& s, std::size_t* n) {
      if (!s.empty() && s[0] == '-') throw std::invalid_argument(s);
      return static_cast<std::uint64_t>(std::stoull(s, n));
    });
  }
  return resolve_seed(nullptr);
}

}  // namespace thinset
