#ifndef BLOWUP_IO_HPP
#define BLOWUP_IO_HPP

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "blowup/ideal.hpp"
#include "blowup/parse.hpp"

namespace blowup {

// Ideal file format:
//   ring: x0..x4 over QQ order grevlex
//   # comment
//   x2^2 - x1*x3
//   ...
// One polynomial per line; `#` starts a comment; blank lines ignored.
// The field is QQ or FP:<p>; the order is grevlex, lex or grlex.
// Variables are a comma list of names or <prefix><i>..<prefix><j> ranges.

struct FieldSpec {
  bool rational = true;
  std::uint64_t prime = 0;

  std::string name() const {
    return rational ? "QQ" : "FP:" + std::to_string(prime);
  }

  static FieldSpec parse(const std::string& tok) {
    if (tok == "QQ") return {};
    if (tok.rfind("FP:", 0) == 0) {
      FieldSpec fs;
      fs.rational = false;
      try {
        fs.prime = std::stoull(tok.substr(3));
      } catch (const std::exception&) {
        throw Error("bad field spec '" + tok + "'");
      }
      return fs;
    }
    throw Error("bad field spec '" + tok + "' (expected QQ or FP:<p>)");
  }
};

inline std::optional<OrderKind> parse_order_kind(const std::string& tok) {
  if (tok == "grevlex") return OrderKind::grevlex;
  if (tok == "lex") return OrderKind::lex;
  if (tok == "grlex") return OrderKind::grlex;
  return std::nullopt;
}

struct IdealFileData {
  std::vector<std::string> vars;
  FieldSpec field;
  OrderKind order = OrderKind::grevlex;
  std::vector<std::string> polynomials;  // raw text, one per line
};

namespace detail {

inline void expand_var_group(const std::string& group, std::vector<std::string>& out) {
  auto dots = group.find("..");
  if (dots == std::string::npos) {
    out.push_back(group);
    return;
  }
  std::string lhs = group.substr(0, dots), rhs = group.substr(dots + 2);
  auto split_tail_digits = [](const std::string& s) -> std::pair<std::string, std::string> {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return {s.substr(0, i), s.substr(i)};
  };
  auto [lp, ld] = split_tail_digits(lhs);
  auto [rp, rd] = split_tail_digits(rhs);
  if (lp != rp || ld.empty() || rd.empty())
    throw Error("bad variable range '" + group + "'");
  std::uint64_t lo = std::stoull(ld), hi = std::stoull(rd);
  if (lo > hi) throw Error("bad variable range '" + group + "'");
  for (std::uint64_t i = lo; i <= hi; ++i) out.push_back(lp + std::to_string(i));
}

}  // namespace detail

inline IdealFileData parse_ideal_header(const std::string& line) {
  if (line.rfind("ring:", 0) != 0)
    throw Error("ideal file must start with a 'ring:' header, got '" + line + "'");
  std::istringstream in(line.substr(5));
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);

  std::size_t i = 0;
  std::string varspec;
  while (i < toks.size() && toks[i] != "over") varspec += toks[i++];
  if (i + 1 >= toks.size() || toks[i] != "over")
    throw Error("ring header needs 'over <field>'");
  IdealFileData data;
  data.field = FieldSpec::parse(toks[i + 1]);
  i += 2;
  if (i + 1 >= toks.size() || toks[i] != "order")
    throw Error("ring header needs 'order <order>'");
  auto ord = parse_order_kind(toks[i + 1]);
  if (!ord) throw Error("unknown order '" + toks[i + 1] + "'");
  data.order = *ord;
  if (i + 2 != toks.size()) throw Error("trailing tokens in ring header");

  std::size_t start = 0;
  while (start <= varspec.size()) {
    auto comma = varspec.find(',', start);
    std::string group = varspec.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!group.empty()) detail::expand_var_group(group, data.vars);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (data.vars.empty()) throw Error("ring header lists no variables");
  return data;
}

inline IdealFileData read_ideal_file(std::istream& in) {
  std::string line;
  std::optional<IdealFileData> data;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    std::size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (!data) {
      data = parse_ideal_header(line);
    } else {
      data->polynomials.push_back(line);
    }
  }
  if (!data) throw Error("empty ideal file");
  return *data;
}

template <class K>
RingPtr<K> ring_from_file_data(const IdealFileData& data, K field) {
  return make_ring(std::move(field), data.vars, MonomialOrder::simple(data.order));
}

template <class K>
Ideal<K> ideal_from_file_data(const IdealFileData& data, const RingPtr<K>& ring) {
  std::vector<Polynomial<K>> gens;
  gens.reserve(data.polynomials.size());
  for (const auto& text : data.polynomials)
    gens.push_back(parse_polynomial(text, ring));
  return Ideal<K>(ring, std::move(gens));
}

/// Variable list, compressing runs of <prefix><i> with consecutive i.
inline std::string compress_var_list(const std::vector<std::string>& vars) {
  auto split_tail_digits = [](const std::string& s) -> std::pair<std::string, std::string> {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return {s.substr(0, i), s.substr(i)};
  };
  std::string out;
  std::size_t i = 0;
  while (i < vars.size()) {
    auto [prefix, digits] = split_tail_digits(vars[i]);
    std::size_t j = i;
    if (!digits.empty()) {
      std::uint64_t cur = std::stoull(digits);
      while (j + 1 < vars.size()) {
        auto [p2, d2] = split_tail_digits(vars[j + 1]);
        if (p2 != prefix || d2.empty() || std::stoull(d2) != cur + 1) break;
        ++cur;
        ++j;
      }
    }
    if (!out.empty()) out += ',';
    if (j > i)
      out += vars[i] + ".." + vars[j];
    else
      out += vars[i];
    i = j + 1;
  }
  return out;
}

template <class K>
std::string ring_header(const Ring<K>& ring) {
  if (ring.order().kind() == OrderKind::block)
    throw Error("block orders are not serializable in ideal files");
  return "ring: " + compress_var_list(ring.vars()) + " over " +
         ring.field().name() + " order " + order_kind_name(ring.order().kind());
}

template <class K>
void write_ideal_file(std::ostream& out, const Ideal<K>& I) {
  out << ring_header(*I.ring()) << "\n";
  for (const auto& g : I.gens()) out << to_string(g) << "\n";
}

}  // namespace blowup

#endif  // BLOWUP_IO_HPP
