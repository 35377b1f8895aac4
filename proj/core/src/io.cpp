#include "semiring_lab/io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace semiring_lab {

SemiringPtr Corpus::find_semiring(const std::string& name) const {
  for (const SemiringPtr& s : semirings)
    if (s->name() == name) return s;
  return nullptr;
}

SemimodulePtr Corpus::find_module(const std::string& name) const {
  for (const SemimodulePtr& m : modules)
    if (m->name() == name) return m;
  return nullptr;
}

namespace {

struct TokenLine {
  int line = 0;
  std::vector<std::string> tokens;
};

std::vector<TokenLine> tokenize(const std::string& text) {
  std::vector<TokenLine> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    TokenLine tl;
    tl.line = line;
    std::string tok;
    while (ls >> tok) tl.tokens.push_back(tok);
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
  }
  return out;
}

/// One syntactically parsed block; semantics (base resolution, axiom
/// checks) happen later so bases may be declared in any order.
struct RawBlock {
  bool is_module = false;
  int line = 0;         // line of the block header
  int action_line = 0;  // line of the action-table keyword (modules)
  std::string label;    // file label for error messages
  std::string name;
  std::string base;  // modules only
  int order = 0;
  int one = 0;  // semirings only
  std::vector<std::uint8_t> add;
  std::vector<std::uint8_t> second;  // mul table or action table
};

class BlockParser {
 public:
  BlockParser(std::vector<TokenLine> lines, std::string label)
      : lines_(std::move(lines)), label_(std::move(label)) {}

  std::vector<RawBlock> parse() {
    std::vector<RawBlock> blocks;
    while (pos_ < lines_.size()) blocks.push_back(parse_block());
    return blocks;
  }

 private:
  [[noreturn]] void fail(int line, const std::string& msg) const {
    throw ParseError(line, label_.empty() ? msg : label_ + ": " + msg);
  }

  const TokenLine& next(const std::string& expect) {
    if (pos_ >= lines_.size())
      fail(lines_.empty() ? 1 : lines_.back().line, "unexpected end of input, expected " + expect);
    return lines_[pos_++];
  }

  int parse_int(const std::string& tok, int line, const std::string& what) const {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      fail(line, what + " must be an integer, got '" + tok + "'");
    }
    if (used != tok.size()) fail(line, what + " must be an integer, got '" + tok + "'");
    if (value < 0) fail(line, what + " must be nonnegative, got '" + tok + "'");
    return value;
  }

  void expect_keyword(const char* kw) {
    const TokenLine& tl = next(std::string("'") + kw + "'");
    if (tl.tokens.size() != 1 || tl.tokens[0] != kw)
      fail(tl.line, std::string("expected '") + kw + "'");
  }

  std::vector<std::uint8_t> parse_rows(int rows, int cols, int bound, const char* what) {
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    for (int r = 0; r < rows; ++r) {
      const TokenLine& tl = next(std::string(what) + " row");
      if (static_cast<int>(tl.tokens.size()) != cols)
        fail(tl.line, std::string(what) + " row needs " + std::to_string(cols) +
                          " entries, got " + std::to_string(tl.tokens.size()));
      for (const std::string& tok : tl.tokens) {
        int v = parse_int(tok, tl.line, std::string(what) + " entry");
        if (v >= bound)
          fail(tl.line, std::string(what) + " entry " + tok + " is out of range (order " +
                            std::to_string(bound) + ")");
        out.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return out;
  }

  RawBlock parse_block() {
    const TokenLine& head = next("'semiring' or 'semimodule'");
    RawBlock b;
    b.line = head.line;
    b.label = label_;
    if (head.tokens[0] == "semiring" && head.tokens.size() == 2) {
      b.name = head.tokens[1];
    } else if (head.tokens[0] == "semimodule" && head.tokens.size() == 4 &&
               head.tokens[2] == "over") {
      b.is_module = true;
      b.name = head.tokens[1];
      b.base = head.tokens[3];
    } else {
      fail(head.line, "expected 'semiring <name>' or 'semimodule <name> over <base>'");
    }

    const TokenLine& ord = next("'order <n>'");
    if (ord.tokens.size() != 2 || ord.tokens[0] != "order") fail(ord.line, "expected 'order <n>'");
    b.order = parse_int(ord.tokens[1], ord.line, "order");
    if (b.order < 1 || b.order > kMaxOrder)
      fail(ord.line, "order must lie in [1, 64], got " + std::to_string(b.order));

    if (!b.is_module) {
      const TokenLine& one = next("'one <i>'");
      if (one.tokens.size() != 2 || one.tokens[0] != "one") fail(one.line, "expected 'one <i>'");
      b.one = parse_int(one.tokens[1], one.line, "one");
      if (b.one >= b.order) fail(one.line, "one is out of range");
      expect_keyword("add-table");
      b.add = parse_rows(b.order, b.order, b.order, "add-table");
      expect_keyword("mul-table");
      b.second = parse_rows(b.order, b.order, b.order, "mul-table");
      expect_keyword("end");
      return b;
    }

    expect_keyword("add-table");
    b.add = parse_rows(b.order, b.order, b.order, "add-table");
    const TokenLine& act = next("'action-table'");
    if (act.tokens.size() != 1 || act.tokens[0] != "action-table")
      fail(act.line, "expected 'action-table'");
    b.action_line = act.line;
    // The row count equals the base order, which is unknown until the
    // base resolves; rows run until the closing 'end'.
    while (true) {
      if (pos_ >= lines_.size()) fail(lines_.back().line, "unexpected end of input, expected 'end'");
      const TokenLine& tl = lines_[pos_];
      if (tl.tokens.size() == 1 && tl.tokens[0] == "end") {
        ++pos_;
        break;
      }
      ++pos_;
      if (static_cast<int>(tl.tokens.size()) != b.order)
        fail(tl.line, "action-table row needs " + std::to_string(b.order) + " entries, got " +
                          std::to_string(tl.tokens.size()));
      for (const std::string& tok : tl.tokens) {
        int v = parse_int(tok, tl.line, "action-table entry");
        if (v >= b.order)
          fail(tl.line, "action-table entry " + tok + " is out of range (order " +
                            std::to_string(b.order) + ")");
        b.second.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return b;
  }

  std::vector<TokenLine> lines_;
  std::string label_;
  std::size_t pos_ = 0;
};

[[noreturn]] void block_fail(const RawBlock& b, int line, const std::string& msg) {
  throw ParseError(line, b.label.empty() ? msg : b.label + ": " + msg);
}

Corpus assemble(const std::vector<RawBlock>& blocks, const Corpus* context) {
  Corpus out;
  for (const RawBlock& b : blocks) {
    bool dup = b.is_module ? std::any_of(blocks.begin(), blocks.end(),
                                         [&](const RawBlock& o) {
                                           return &o != &b && o.is_module && o.name == b.name;
                                         })
                           : std::any_of(blocks.begin(), blocks.end(), [&](const RawBlock& o) {
                               return &o != &b && !o.is_module && o.name == b.name;
                             });
    if (dup) block_fail(b, b.line, "duplicate structure name '" + b.name + "'");
  }
  for (const RawBlock& b : blocks) {
    if (b.is_module) continue;
    if (b.order < 2) block_fail(b, b.line, "semiring order must be at least 2");
    RawTables rt;
    rt.name = b.name;
    rt.order = b.order;
    rt.one = b.one;
    rt.add = b.add;
    rt.mul = b.second;
    out.semirings.push_back(validate_semiring(std::move(rt)));
  }
  for (const RawBlock& b : blocks) {
    if (!b.is_module) continue;
    SemiringPtr base = out.find_semiring(b.base);
    if (!base && context) base = context->find_semiring(b.base);
    if (!base)
      throw UnknownBase("line " + std::to_string(b.line) + ": " +
                        (b.label.empty() ? "" : b.label + ": ") + "semimodule '" + b.name +
                        "' names unknown base '" + b.base + "'");
    const std::size_t want = static_cast<std::size_t>(base->order()) * b.order;
    if (b.second.size() != want)
      block_fail(b, b.action_line,
                 "action-table needs " + std::to_string(base->order()) + " rows (one per " +
                     b.base + " element), got " +
                     std::to_string(b.second.size() / static_cast<std::size_t>(b.order)));
    RawModuleTables mt;
    mt.name = b.name;
    mt.order = b.order;
    mt.add = b.add;
    mt.action = b.second;
    out.modules.push_back(validate_semimodule(base, std::move(mt)));
  }
  return out;
}

std::string print_table(const std::vector<std::uint8_t>& table, int rows, int cols) {
  std::string out;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c) out += ' ';
      out += std::to_string(int(table[static_cast<std::size_t>(r) * cols + c]));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

Corpus parse_structures(const std::string& text, const Corpus* context) {
  return assemble(BlockParser(tokenize(text), "").parse(), context);
}

std::string print_semiring(const FiniteSemiring& s) {
  std::string out = "semiring " + s.name() + "\n";
  out += "order " + std::to_string(s.order()) + "\n";
  out += "one " + std::to_string(s.one()) + "\n";
  out += "add-table\n" + print_table(s.tables().add, s.order(), s.order());
  out += "mul-table\n" + print_table(s.tables().mul, s.order(), s.order());
  out += "end\n";
  return out;
}

std::string print_semimodule(const FiniteSemimodule& m) {
  std::string out = "semimodule " + m.name() + " over " + m.base().name() + "\n";
  out += "order " + std::to_string(m.order()) + "\n";
  out += "add-table\n" + print_table(m.tables().add, m.order(), m.order());
  out += "action-table\n" + print_table(m.tables().action, m.base().order(), m.order());
  out += "end\n";
  return out;
}

Corpus load_corpus_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error("load_corpus_dir: '" + dir + "' is not a directory");
  std::vector<fs::path> files;
  for (const fs::directory_entry& e : fs::directory_iterator(dir, ec))
    if (e.is_regular_file()) files.push_back(e.path());
  if (ec) throw Error("load_corpus_dir: cannot read '" + dir + "': " + ec.message());
  std::sort(files.begin(), files.end(),
            [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

  std::vector<RawBlock> blocks;
  for (const fs::path& f : files) {
    std::ifstream in(f);
    if (!in) throw Error("load_corpus_dir: cannot open '" + f.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::vector<RawBlock> parsed =
        BlockParser(tokenize(buf.str()), f.filename().string()).parse();
    blocks.insert(blocks.end(), parsed.begin(), parsed.end());
  }
  return assemble(blocks, nullptr);
}

}  // namespace semiring_lab
