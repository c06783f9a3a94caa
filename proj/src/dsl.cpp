#include "catgrp/dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "catgrp/errors.hpp"
#include "catgrp/internal_category.hpp"

namespace catgrp {

const Declaration* SpecDocument::find(const std::string& name) const {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based
};

struct Line {
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

bool is_special(char c) {
  return c == '(' || c == ')' || c == ',' || c == '=' || c == ':';
}

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  int line_no = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    Line line;
    line.number = line_no;
    std::size_t i = pos;
    while (i < eol) {
      const char c = text[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      const int column = static_cast<int>(i - pos) + 1;
      if (is_special(c)) {
        line.tokens.push_back({std::string(1, c), column});
        ++i;
        continue;
      }
      if (c == '-' && i + 1 < eol && text[i + 1] == '>') {
        line.tokens.push_back({"->", column});
        i += 2;
        continue;
      }
      std::size_t j = i;
      while (j < eol && !std::isspace(static_cast<unsigned char>(text[j])) &&
             !is_special(text[j]) && text[j] != '#' &&
             !(text[j] == '-' && j + 1 < eol && text[j + 1] == '>'))
        ++j;
      line.tokens.push_back({text.substr(i, j - i), column});
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
    pos = eol + 1;
    ++line_no;
  }
  return lines;
}

const char* const kKeywords[] = {"group", "hom", "action", "xmod",
                                 "internalcat"};

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

// One declaration's parse, with first-error-wins semantics.
class Parser {
 public:
  Parser(const std::vector<Line>& lines, std::vector<Diagnostic>& diags)
      : lines_(lines), diags_(diags) {}

  SpecDocument run() {
    SpecDocument doc;
    while (pos_ < lines_.size()) {
      const Line& line = lines_[pos_];
      const std::string& kw = line.tokens[0].text;
      if (!is_keyword(kw)) {
        error(line.number, line.tokens[0].column,
              "expected a declaration keyword, got '" + kw + "'");
        skip_to_next_declaration();
        continue;
      }
      const std::size_t before = diags_.size();
      Declaration decl;
      decl.line = line.number;
      decl.column = line.tokens[0].column;
      bool parsed = false;
      if (kw == "group") parsed = parse_group(doc, decl);
      else if (kw == "hom") parsed = parse_hom(doc, decl);
      else if (kw == "action") parsed = parse_action(doc, decl);
      else if (kw == "xmod") parsed = parse_xmod(doc, decl);
      else parsed = parse_internalcat(doc, decl);
      if (parsed && diags_.size() == before) {
        doc.decls.push_back(std::move(decl));
      } else {
        skip_to_next_declaration();
      }
    }
    return doc;
  }

 private:
  const std::vector<Line>& lines_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;

  void error(int line, int column, const std::string& message) {
    diags_.push_back({"error", line, column, message});
  }

  void skip_to_next_declaration() {
    ++pos_;
    while (pos_ < lines_.size() && !is_keyword(lines_[pos_].tokens[0].text))
      ++pos_;
  }

  std::optional<int> parse_int(const Token& tok, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(
        tok.text.data(), tok.text.data() + tok.text.size(), value);
    if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
      error(line, tok.column, "expected an integer, got '" + tok.text + "'");
      return std::nullopt;
    }
    return value;
  }

  bool take_name(const Line& line, std::size_t idx, std::string& out) {
    if (idx >= line.tokens.size()) {
      error(line.number, 1, "declaration header is truncated");
      return false;
    }
    const Token& tok = line.tokens[idx];
    if (is_keyword(tok.text) || is_special(tok.text[0]) || tok.text == "->" ||
        std::isdigit(static_cast<unsigned char>(tok.text[0]))) {
      error(line.number, tok.column, "expected a name, got '" + tok.text + "'");
      return false;
    }
    out = tok.text;
    return true;
  }

  bool expect(const Line& line, std::size_t idx, const std::string& text) {
    if (idx >= line.tokens.size()) {
      error(line.number, 1, "expected '" + text + "' in declaration header");
      return false;
    }
    if (line.tokens[idx].text != text) {
      error(line.number, line.tokens[idx].column,
            "expected '" + text + "', got '" + line.tokens[idx].text + "'");
      return false;
    }
    return true;
  }

  bool check_unique(const SpecDocument& doc, const Declaration& decl) {
    if (doc.find(decl.name)) {
      error(decl.line, decl.column,
            "name '" + decl.name + "' is already declared");
      return false;
    }
    return true;
  }

  const Declaration* resolve(const SpecDocument& doc, const std::string& name,
                             int line, int column) {
    const Declaration* d = doc.find(name);
    if (!d)
      error(line, column,
            "reference to '" + name + "' does not resolve to an earlier "
            "declaration");
    return d;
  }

  const GroupDecl* resolve_group(const SpecDocument& doc,
                                 const std::string& name, int line,
                                 int column) {
    const Declaration* d = resolve(doc, name, line, column);
    if (!d) return nullptr;
    const auto* g = std::get_if<GroupDecl>(&d->body);
    if (!g) error(line, column, "'" + name + "' is not a group");
    return g;
  }

  // Reads `count` integers in [0, range) from the next line.
  bool read_row(std::vector<int>& out, int count, int range,
                const char* what) {
    ++pos_;
    if (pos_ >= lines_.size()) {
      error(lines_.back().number, 1,
            std::string("missing ") + what + " row");
      return false;
    }
    const Line& line = lines_[pos_];
    if (is_keyword(line.tokens[0].text)) {
      error(line.number, line.tokens[0].column,
            std::string("missing ") + what + " row");
      --pos_;  // let the outer loop see the declaration line again
      return false;
    }
    if (static_cast<int>(line.tokens.size()) != count) {
      error(line.number, line.tokens[0].column,
            "row length " + std::to_string(line.tokens.size()) +
                ", expected " + std::to_string(count));
      return false;
    }
    for (const Token& tok : line.tokens) {
      const auto v = parse_int(tok, line.number);
      if (!v) return false;
      if (*v < 0 || *v >= range) {
        error(line.number, tok.column,
              "entry " + std::to_string(*v) + " out of range [0," +
                  std::to_string(range) + ")");
        return false;
      }
      out.push_back(*v);
    }
    return true;
  }

  bool parse_group(SpecDocument& doc, Declaration& decl) {
    const Line& header = lines_[pos_];
    if (!take_name(header, 1, decl.name) || !check_unique(doc, decl))
      return false;
    if (header.tokens.size() < 3) {
      error(header.number, 1, "group header needs 'order <n>' or 'builtin'");
      return false;
    }
    GroupDecl body;
    if (header.tokens[2].text == "builtin") {
      if (!parse_builtin(header, body)) return false;
    } else if (header.tokens[2].text == "order") {
      if (header.tokens.size() != 4) {
        error(header.number, header.tokens[2].column,
              "group header is 'group <name> order <n>'");
        return false;
      }
      const auto n = parse_int(header.tokens[3], header.number);
      if (!n) return false;
      if (*n < 1) {
        error(header.number, header.tokens[3].column,
              "group order must be positive");
        return false;
      }
      if (*n > order_cap()) {
        error(header.number, header.tokens[3].column,
              "group order " + std::to_string(*n) + " exceeds the cap of " +
                  std::to_string(order_cap()));
        return false;
      }
      body.order = *n;
      for (int r = 0; r < *n; ++r)
        if (!read_row(body.table, *n, *n, "table")) return false;
      // Identity-at-0 convention is enforced at parse time.
      for (int x = 0; x < *n; ++x)
        if (body.table[x] != x || body.table[x * *n] != x) {
          error(lines_[pos_ - *n + 1].number, 1,
                "element 0 is not a two-sided identity");
          return false;
        }
    } else {
      error(header.number, header.tokens[2].column,
            "expected 'order' or 'builtin', got '" + header.tokens[2].text +
                "'");
      return false;
    }
    decl.body = std::move(body);
    ++pos_;
    return true;
  }

  bool parse_builtin(const Line& header, GroupDecl& body) {
    if (header.tokens.size() < 4) {
      error(header.number, header.tokens[2].column,
            "builtin needs a kind: cyclic, dihedral, symmetric or "
            "quaternion8");
      return false;
    }
    const std::string& kind = header.tokens[3].text;
    std::optional<int> k;
    if (header.tokens.size() == 5) {
      k = parse_int(header.tokens[4], header.number);
      if (!k) return false;
    } else if (header.tokens.size() > 5) {
      error(header.number, header.tokens[5].column, "too many builtin tokens");
      return false;
    }
    try {
      GroupRef g;
      if (kind == "quaternion8") {
        if (k) {
          error(header.number, header.tokens[4].column,
                "quaternion8 takes no argument");
          return false;
        }
        g = make_quaternion8();
      } else {
        if (!k) {
          error(header.number, header.tokens[3].column,
                "builtin " + kind + " needs an argument k");
          return false;
        }
        if (kind == "cyclic") g = make_cyclic(*k);
        else if (kind == "dihedral") g = make_dihedral(*k);
        else if (kind == "symmetric") g = make_symmetric(*k);
        else {
          error(header.number, header.tokens[3].column,
                "unknown builtin '" + kind + "'");
          return false;
        }
      }
      body.order = g->order();
      body.table = g->table();
    } catch (const Error& e) {
      error(header.number, header.tokens[3].column, e.what());
      return false;
    }
    return true;
  }

  bool parse_hom(SpecDocument& doc, Declaration& decl) {
    const Line& header = lines_[pos_];
    if (!take_name(header, 1, decl.name) || !check_unique(doc, decl))
      return false;
    HomDecl body;
    if (!expect(header, 2, ":")) return false;
    if (!take_name(header, 3, body.source)) return false;
    if (!expect(header, 4, "->")) return false;
    if (!take_name(header, 5, body.target)) return false;
    if (header.tokens.size() != 6) {
      error(header.number, header.tokens[5].column,
            "hom header is 'hom <name> : <G> -> <H>'");
      return false;
    }
    const GroupDecl* src = resolve_group(doc, body.source, header.number,
                                         header.tokens[3].column);
    const GroupDecl* tgt = resolve_group(doc, body.target, header.number,
                                         header.tokens[5].column);
    if (!src || !tgt) return false;
    if (!read_row(body.map, src->order, tgt->order, "image")) return false;
    decl.body = std::move(body);
    ++pos_;
    return true;
  }

  bool parse_action(SpecDocument& doc, Declaration& decl) {
    const Line& header = lines_[pos_];
    if (!take_name(header, 1, decl.name) || !check_unique(doc, decl))
      return false;
    ActionDecl body;
    if (!expect(header, 2, ":")) return false;
    if (!take_name(header, 3, body.group)) return false;
    if (!expect(header, 4, "on")) return false;
    if (!take_name(header, 5, body.carrier)) return false;
    if (header.tokens.size() != 6) {
      error(header.number, header.tokens[5].column,
            "action header is 'action <name> : <G> on <C>'");
      return false;
    }
    const GroupDecl* grp = resolve_group(doc, body.group, header.number,
                                         header.tokens[3].column);
    const GroupDecl* car = resolve_group(doc, body.carrier, header.number,
                                         header.tokens[5].column);
    if (!grp || !car) return false;
    for (int r = 0; r < grp->order; ++r)
      if (!read_row(body.table, car->order, car->order, "action"))
        return false;
    decl.body = std::move(body);
    ++pos_;
    return true;
  }

  bool parse_xmod(SpecDocument& doc, Declaration& decl) {
    const Line& header = lines_[pos_];
    if (!take_name(header, 1, decl.name) || !check_unique(doc, decl))
      return false;
    XmodDecl body;
    std::size_t i = 2;
    if (!expect(header, i++, "=")) return false;
    if (!expect(header, i++, "(")) return false;
    if (!take_name(header, i++, body.c)) return false;
    if (!expect(header, i++, ",")) return false;
    if (!take_name(header, i++, body.g)) return false;
    if (!expect(header, i++, ",")) return false;
    if (!take_name(header, i++, body.boundary)) return false;
    if (!expect(header, i++, ",")) return false;
    if (!take_name(header, i++, body.action)) return false;
    if (!expect(header, i++, ")")) return false;
    if (header.tokens.size() != i) {
      error(header.number, header.tokens[i].column,
            "trailing tokens after xmod declaration");
      return false;
    }

    const GroupDecl* c = resolve_group(doc, body.c, header.number, 1);
    const GroupDecl* g = resolve_group(doc, body.g, header.number, 1);
    const Declaration* hd = resolve(doc, body.boundary, header.number, 1);
    const Declaration* ad = resolve(doc, body.action, header.number, 1);
    if (!c || !g || !hd || !ad) return false;
    const auto* hom = std::get_if<HomDecl>(&hd->body);
    if (!hom || hom->source != body.c || hom->target != body.g) {
      error(header.number, header.tokens[0].column,
            "'" + body.boundary + "' must be a hom " + body.c + " -> " +
                body.g);
      return false;
    }
    const auto* act = std::get_if<ActionDecl>(&ad->body);
    if (!act || act->group != body.g || act->carrier != body.c) {
      error(header.number, header.tokens[0].column,
            "'" + body.action + "' must be an action of " + body.g + " on " +
                body.c);
      return false;
    }
    decl.body = std::move(body);
    ++pos_;
    return true;
  }

  bool parse_internalcat(SpecDocument& doc, Declaration& decl) {
    const Line& header = lines_[pos_];
    if (!take_name(header, 1, decl.name) || !check_unique(doc, decl))
      return false;
    InternalCatDecl body;
    std::size_t i = 2;
    if (!expect(header, i++, "=")) return false;
    if (!expect(header, i++, "(")) return false;
    if (!take_name(header, i++, body.arrows)) return false;
    if (!expect(header, i++, ",")) return false;
    if (!take_name(header, i++, body.objects)) return false;
    for (auto [label, field] :
         {std::pair<const char*, std::string*>{"s", &body.src},
          {"t", &body.tgt},
          {"e", &body.unit}}) {
      if (!expect(header, i++, ",")) return false;
      if (!expect(header, i++, label)) return false;
      if (!expect(header, i++, "=")) return false;
      if (!take_name(header, i++, *field)) return false;
    }
    if (!expect(header, i++, ")")) return false;
    if (header.tokens.size() != i) {
      error(header.number, header.tokens[i].column,
            "trailing tokens after internalcat declaration");
      return false;
    }

    const GroupDecl* a = resolve_group(doc, body.arrows, header.number, 1);
    const GroupDecl* o = resolve_group(doc, body.objects, header.number, 1);
    if (!a || !o) return false;
    const auto check_hom = [&](const std::string& name,
                               const std::string& from,
                               const std::string& to) -> const HomDecl* {
      const Declaration* d = resolve(doc, name, header.number, 1);
      if (!d) return nullptr;
      const auto* h = std::get_if<HomDecl>(&d->body);
      if (!h || h->source != from || h->target != to) {
        error(header.number, header.tokens[0].column,
              "'" + name + "' must be a hom " + from + " -> " + to);
        return nullptr;
      }
      return h;
    };
    const HomDecl* src = check_hom(body.src, body.arrows, body.objects);
    const HomDecl* tgt = check_hom(body.tgt, body.arrows, body.objects);
    const HomDecl* unit = check_hom(body.unit, body.objects, body.arrows);
    if (!src || !tgt || !unit) return false;

    // comp section: one row per composable pair in canonical order.
    ++pos_;
    if (pos_ >= lines_.size() || lines_[pos_].tokens[0].text != "comp") {
      error(header.number, header.tokens[0].column,
            "internalcat needs a 'comp' section");
      if (pos_ < lines_.size()) --pos_;
      return false;
    }
    const ComposablePairs pairs =
        enumerate_composable_pairs(a->order, src->map, tgt->map);
    for (int p = 0; p < pairs.size(); ++p)
      if (!read_row(body.comp, 1, a->order, "comp")) return false;
    decl.body = std::move(body);
    ++pos_;
    return true;
  }
};

void append_row(std::ostringstream& out, const int* begin, int count) {
  for (int i = 0; i < count; ++i) {
    if (i) out << ' ';
    out << begin[i];
  }
  out << '\n';
}

}  // namespace

ParseResult parse_spec(const std::string& text) {
  ParseResult result;
  const std::vector<Line> lines = tokenize(text);
  Parser parser(lines, result.diagnostics);
  result.doc = parser.run();
  if (!result.diagnostics.empty()) result.doc.decls.clear();
  return result;
}

std::string serialize_spec(const SpecDocument& doc) {
  std::ostringstream out;
  for (const auto& decl : doc.decls) {
    if (const auto* g = std::get_if<GroupDecl>(&decl.body)) {
      out << "group " << decl.name << " order " << g->order << '\n';
      for (int r = 0; r < g->order; ++r)
        append_row(out, g->table.data() + std::size_t(r) * g->order,
                   g->order);
    } else if (const auto* h = std::get_if<HomDecl>(&decl.body)) {
      out << "hom " << decl.name << " : " << h->source << " -> " << h->target
          << '\n';
      append_row(out, h->map.data(), static_cast<int>(h->map.size()));
    } else if (const auto* a = std::get_if<ActionDecl>(&decl.body)) {
      out << "action " << decl.name << " : " << a->group << " on "
          << a->carrier << '\n';
      const auto* carrier = doc.find(a->carrier);
      const int cols = std::get<GroupDecl>(carrier->body).order;
      const int rows = static_cast<int>(a->table.size()) / cols;
      for (int r = 0; r < rows; ++r)
        append_row(out, a->table.data() + std::size_t(r) * cols, cols);
    } else if (const auto* x = std::get_if<XmodDecl>(&decl.body)) {
      out << "xmod " << decl.name << " = (" << x->c << ", " << x->g << ", "
          << x->boundary << ", " << x->action << ")\n";
    } else {
      const auto& ic = std::get<InternalCatDecl>(decl.body);
      out << "internalcat " << decl.name << " = (" << ic.arrows << ", "
          << ic.objects << ", s=" << ic.src << ", t=" << ic.tgt
          << ", e=" << ic.unit << ")\n";
      out << "comp\n";
      for (int v : ic.comp) out << v << '\n';
    }
  }
  return out.str();
}

}  // namespace catgrp
