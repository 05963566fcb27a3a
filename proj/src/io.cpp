#include "posetcube/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"
#include "posetcube/error.hpp"

namespace posetcube {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
  throw Error(ErrorKind::SyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

void check_identifier(const std::string& id, int line, int column) {
  if (id.empty()) syntax_error(line, column, "empty element identifier");
  if (id.find_first_of("<>") != std::string::npos) {
    syntax_error(line, column, "identifier \"" + id + "\" may not contain '<' or '>'");
  }
}

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line, size_t from) {
  std::vector<Token> out;
  size_t i = from;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

PosetDocument parse_poset_text(const std::string& text) {
  PosetDocument doc;
  bool saw_elements = false;
  bool saw_covers = false;

  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = tokenize(line, 0);
    if (tokens.empty()) continue;
    const Token& head = tokens.front();

    if (head.text == "poset") {
      if (saw_elements || doc.name) syntax_error(line_no, head.column, "misplaced poset header");
      if (tokens.size() != 2) syntax_error(line_no, head.column, "expected: poset <name>");
      doc.name = tokens[1].text;
    } else if (head.text == "elements:") {
      if (saw_elements) syntax_error(line_no, head.column, "duplicate elements line");
      saw_elements = true;
      for (size_t i = 1; i < tokens.size(); ++i) {
        check_identifier(tokens[i].text, line_no, tokens[i].column);
        doc.elements.push_back(tokens[i].text);
      }
    } else if (head.text == "covers:") {
      if (!saw_elements) syntax_error(line_no, head.column, "covers before elements");
      if (saw_covers) syntax_error(line_no, head.column, "duplicate covers line");
      saw_covers = true;
      for (size_t i = 1; i < tokens.size(); ++i) {
        const std::string& pair = tokens[i].text;
        const size_t sep = pair.find('<');
        if (sep == std::string::npos || sep == 0 || sep + 1 >= pair.size() ||
            pair.find('<', sep + 1) != std::string::npos) {
          syntax_error(line_no, tokens[i].column, "expected a cover of the form a<b, got \"" + pair + "\"");
        }
        doc.covers.emplace_back(pair.substr(0, sep), pair.substr(sep + 1));
      }
    } else {
      syntax_error(line_no, head.column,
                   "expected \"poset\", \"elements:\" or \"covers:\", got \"" + head.text + "\"");
    }
  }
  if (!saw_elements) {
    throw Error(ErrorKind::SyntaxError, "missing \"elements:\" line");
  }
  return doc;
}

ordered_json parse_json(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
}

void check_keys(const ordered_json& obj, std::initializer_list<const char*> allowed) {
  for (const auto& [key, _] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(),
                     [&](const char* k) { return key == k; }) == allowed.end()) {
      throw Error(ErrorKind::SyntaxError, "unexpected key \"" + key + "\"");
    }
  }
}

PosetDocument parse_poset_json(const std::string& text) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::SyntaxError, "expected a JSON object");
  check_keys(j, {"name", "elements", "covers"});

  PosetDocument doc;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw Error(ErrorKind::SyntaxError, "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (!j.contains("elements") || !j["elements"].is_array()) {
    throw Error(ErrorKind::SyntaxError, "\"elements\" must be an array of strings");
  }
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw Error(ErrorKind::SyntaxError, "\"elements\" must be an array of strings");
    doc.elements.push_back(e.get<std::string>());
    check_identifier(doc.elements.back(), 1, 1);
  }
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw Error(ErrorKind::SyntaxError, "\"covers\" must be an array");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string()) {
        throw Error(ErrorKind::SyntaxError, "each cover must be a [\"a\",\"b\"] pair");
      }
      doc.covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  return doc;
}

}  // namespace

PosetDocument parse_poset_document(const std::string& text) {
  const size_t first = text.find_first_not_of(" \t\r\n");
  PosetDocument doc = (first != std::string::npos && text[first] == '{')
                          ? parse_poset_json(text)
                          : parse_poset_text(text);
  doc.to_poset();  // surfaces DuplicateElement / UnknownElement / CycleDetected
  return doc;
}

std::string emit_poset_text(const PosetDocument& doc) {
  std::ostringstream out;
  if (doc.name) out << "poset " << *doc.name << "\n";
  out << "elements:";
  for (const auto& e : doc.elements) out << " " << e;
  out << "\ncovers:";
  for (const auto& [a, b] : doc.covers) out << " " << a << "<" << b;
  out << "\n";
  return out.str();
}

std::string emit_poset_json(const PosetDocument& doc) {
  ordered_json j;
  if (doc.name) j["name"] = *doc.name;
  j["elements"] = doc.elements;
  auto covers = ordered_json::array();
  for (const auto& [a, b] : doc.covers) covers.push_back({a, b});
  j["covers"] = std::move(covers);
  return j.dump(2);
}

PosetDocument poset_to_document(const Poset& p, std::optional<std::string> name) {
  PosetDocument doc;
  doc.name = std::move(name);
  doc.elements = p.element_ids();
  const int t = p.size();
  for (int i = 1; i <= t; ++i) {
    for (int j = 1; j <= t; ++j) {
      if (!p.less(i, j)) continue;
      bool covered = true;
      for (int z = 1; z <= t && covered; ++z) {
        if (z != i && z != j && p.less(i, z) && p.less(z, j)) covered = false;
      }
      if (covered) doc.covers.emplace_back(p.element_id(i), p.element_id(j));
    }
  }
  return doc;
}

Embedding parse_embedding_json(const std::string& text, const Poset& p) {
  const ordered_json j = parse_json(text);
  if (!j.is_object()) throw Error(ErrorKind::SyntaxError, "expected a JSON object");
  check_keys(j, {"ground", "sets"});
  if (!j.contains("ground") || !j["ground"].is_number_integer() || j["ground"].get<int64_t>() < 0) {
    throw Error(ErrorKind::SyntaxError, "\"ground\" must be a non-negative integer");
  }
  if (!j.contains("sets") || !j["sets"].is_object()) {
    throw Error(ErrorKind::SyntaxError, "\"sets\" must be an object keyed by element id");
  }

  Embedding e;
  e.ground = j["ground"].get<int>();
  e.sets.assign(p.size(), {});
  std::vector<bool> assigned(p.size(), false);
  for (const auto& [id, coords] : j["sets"].items()) {
    const auto index = p.index_of(id);
    if (!index) throw Error(ErrorKind::UnknownElement, "\"" + id + "\" is not a poset element");
    if (!coords.is_array()) {
      throw Error(ErrorKind::SyntaxError, "set of \"" + id + "\" must be an array");
    }
    std::vector<int>& s = e.sets[*index - 1];
    for (const auto& c : coords) {
      if (!c.is_number_integer()) {
        throw Error(ErrorKind::SyntaxError, "coordinates of \"" + id + "\" must be integers");
      }
      const int64_t v = c.get<int64_t>();
      if (v < 1 || v > e.ground) {
        throw Error(ErrorKind::SyntaxError, "coordinate " + std::to_string(v) + " of \"" + id +
                                                "\" outside 1.." + std::to_string(e.ground));
      }
      if (!s.empty() && v <= s.back()) {
        throw Error(ErrorKind::SyntaxError,
                    "coordinates of \"" + id + "\" must be strictly ascending");
      }
      s.push_back(static_cast<int>(v));
    }
    assigned[*index - 1] = true;
  }
  for (int i = 1; i <= p.size(); ++i) {
    if (!assigned[i - 1]) {
      throw Error(ErrorKind::MissingAssignment, "no set for element \"" + p.element_id(i) + "\"");
    }
  }
  return e;
}

std::string emit_embedding_json(const Embedding& e, const Poset& p) {
  ordered_json sets = ordered_json::object();
  for (int i = 1; i <= p.size(); ++i) sets[p.element_id(i)] = e.sets[i - 1];
  ordered_json j;
  j["ground"] = e.ground;
  j["sets"] = std::move(sets);
  return j.dump(2);
}

std::string emit_trace_json(const CompressionTrace& trace, const Poset& p) {
  auto ids = [&](const std::vector<int>& xs) {
    auto arr = ordered_json::array();
    for (int i : xs) arr.push_back(p.element_id(i));
    return arr;
  };
  auto id_map = [&](const std::map<int, int>& m) {
    ordered_json obj = ordered_json::object();
    for (const auto& [i, c] : m) obj[p.element_id(i)] = c;
    return obj;
  };
  ordered_json j;
  j["X"] = ids(trace.deficient);
  j["Y"] = ids(trace.represented);
  j["G"] = trace.deficient_union;
  j["f"] = id_map(trace.representative);
  j["fresh"] = id_map(trace.fresh);
  return j.dump(2);
}

}  // namespace posetcube
