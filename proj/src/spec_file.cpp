#include "apword/spec_file.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "apword/ap.hpp"

namespace apword {

  namespace {

    char single_char(nlohmann::json const& v, char const* what) {
      if (!v.is_string() || v.get<std::string>().size() != 1) {
        throw Error(std::string(what) + " must be a one-character string");
      }
      return v.get<std::string>()[0];
    }

  }  // namespace

  Letter SubstitutionSpec::letter(char name) const {
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (names[i] == name) {
        return static_cast<Letter>(i);
      }
    }
    throw Error(std::string("unknown letter '") + name + "'");
  }

  std::string SubstitutionSpec::spell(std::span<Letter const> w) const {
    std::string out;
    out.reserve(w.size());
    for (Letter x : w) {
      out.push_back(names.at(x));
    }
    return out;
  }

  Word SubstitutionSpec::parse(std::string const& text) const {
    Word out;
    out.reserve(text.size());
    for (char c : text) {
      out.push_back(letter(c));
    }
    return out;
  }

  SubstitutionSpec parse_spec(std::string const& json_text) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(json_text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("alphabet") || !doc.contains("rules")) {
      throw Error("spec needs \"alphabet\" and \"rules\"");
    }
    auto const& alphabet = doc["alphabet"];
    auto const& rules    = doc["rules"];
    if (!alphabet.is_array() || !rules.is_object()) {
      throw Error("\"alphabet\" must be an array and \"rules\" an object");
    }
    if (alphabet.empty()) {
      throw Error("empty alphabet");
    }
    if (alphabet.size() > max_alphabet_size) {
      throw Error("alphabet has more than " + std::to_string(max_alphabet_size)
                  + " letters");
    }
    std::vector<char> names;
    for (auto const& v : alphabet) {
      char const c = single_char(v, "letter name");
      if (std::find(names.begin(), names.end(), c) != names.end()) {
        throw Error(std::string("duplicate letter '") + c + "'");
      }
      names.push_back(c);
    }
    auto index_of = [&](char c) -> int {
      auto it = std::find(names.begin(), names.end(), c);
      return it == names.end() ? -1 : static_cast<int>(it - names.begin());
    };
    for (auto const& [key, value] : rules.items()) {
      if (key.size() != 1 || index_of(key[0]) < 0) {
        throw Error("rule for unknown letter \"" + key + "\"");
      }
    }
    std::vector<Word> images;
    for (char c : names) {
      std::string const key(1, c);
      if (!rules.contains(key)) {
        throw Error("missing rule for letter '" + key + "'");
      }
      if (!rules[key].is_string()) {
        throw Error("rule for '" + key + "' must be a string");
      }
      Word img;
      for (char x : rules[key].get<std::string>()) {
        int const i = index_of(x);
        if (i < 0) {
          throw Error("unknown letter in an image");
        }
        img.push_back(static_cast<Letter>(i));
      }
      images.push_back(std::move(img));
    }
    SubstitutionSpec spec{names, Substitution(names.size(), std::move(images)),
                          std::nullopt};
    if (doc.contains("seed")) {
      spec.seed = spec.letter(single_char(doc["seed"], "seed"));
    }
    return spec;
  }

  SubstitutionSpec load_spec_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_spec(buf.str());
  }

  Substitution load_spec(std::string const& path) {
    return load_spec_file(path).rule;
  }

  SubstitutionSpec resolve_subst(std::string const& text) {
    if (text.rfind("spec:", 0) == 0) {
      return load_spec_file(text.substr(5));
    }
    Family const f = parse_family(text);
    return SubstitutionSpec{{'0', '1'}, f.substitution(), Letter{0}};
  }

}  // namespace apword
