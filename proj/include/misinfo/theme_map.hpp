#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "misinfo/errors.hpp"
#include "misinfo/tweet.hpp"

namespace misinfo {

// Mapping from the 17 corpus annotation themes to the three legitimacy
// bins. The map is total over the configured registry; lookups of unknown
// themes are errors, not silent Irrelevant.
class ThemeMap {
 public:
  ThemeMap() = default;

  explicit ThemeMap(std::map<std::string, LabelBin> entries) : entries_(std::move(entries)) {}

  // Default registry. The binning convention: "true ..." themes are
  // Legitimate, "fake/false/conspiracy ..." themes are Misinformation,
  // everything else is Irrelevant. Contested assignments (e.g. "correct
  // news") stay configurable through load().
  static ThemeMap default_map() {
    std::map<std::string, LabelBin> m;
    m["true treatment"] = LabelBin::Legitimate;
    m["true prevention"] = LabelBin::Legitimate;
    m["true public health response"] = LabelBin::Legitimate;
    m["conspiracy"] = LabelBin::Misinformation;
    m["fake cure"] = LabelBin::Misinformation;
    m["fake treatment"] = LabelBin::Misinformation;
    m["fake remedy"] = LabelBin::Misinformation;
    m["false fact"] = LabelBin::Misinformation;
    m["false public health response"] = LabelBin::Misinformation;
    m["politics"] = LabelBin::Irrelevant;
    m["panic buying"] = LabelBin::Irrelevant;
    m["irrelevant"] = LabelBin::Irrelevant;
    m["news"] = LabelBin::Irrelevant;
    m["correct news"] = LabelBin::Irrelevant;
    m["calling out or correction"] = LabelBin::Irrelevant;
    m["ambiguous or hard to classify"] = LabelBin::Irrelevant;
    m["emergency response"] = LabelBin::Irrelevant;
    return ThemeMap(std::move(m));
  }

  // Key=value text config, one "theme = bin" per line. '#' starts a comment.
  static ThemeMap load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open theme map: " + path);
    std::map<std::string, LabelBin> m;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        if (trim(line).empty()) continue;
        throw ValidationError("theme map entry missing '=': \"" + line + "\"", lineno);
      }
      const std::string theme = trim(line.substr(0, eq));
      const std::string bin = trim(line.substr(eq + 1));
      if (theme.empty()) throw ValidationError("empty theme name", lineno);
      m[theme] = label_bin_from_string(bin);
    }
    return ThemeMap(std::move(m));
  }

  bool contains(const std::string& theme) const { return entries_.count(theme) > 0; }

  LabelBin bin(const std::string& theme) const {
    const auto it = entries_.find(theme);
    if (it == entries_.end()) throw ValidationError("theme not in registry: \"" + theme + "\"");
    return it->second;
  }

  std::size_t size() const { return entries_.size(); }

  const std::map<std::string, LabelBin>& entries() const { return entries_; }

  std::string to_text() const {
    std::ostringstream os;
    for (const auto& [theme, bin] : entries_) os << theme << " = " << to_string(bin) << "\n";
    return os.str();
  }

 private:
  static std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
  }

  std::map<std::string, LabelBin> entries_;
};

inline LabelBin bin_label(const std::string& theme, const ThemeMap& map) { return map.bin(theme); }

}  // namespace misinfo
