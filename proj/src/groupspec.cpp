#include "zgr/groupspec.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zgr {

std::string GroupSpec::print() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::cyclic: out << "cyclic(" << args[0] << ")"; break;
    case Kind::elemab: out << "elemab(" << args[0] << "," << args[1] << ")"; break;
    case Kind::dihedral: out << "dihedral(" << args[0] << ")"; break;
    case Kind::quaternion: out << "quaternion(" << args[0] << ")"; break;
    case Kind::sym: out << "sym(" << args[0] << ")"; break;
    case Kind::alt: out << "alt(" << args[0] << ")"; break;
    case Kind::product: out << "product(" << sub[0]->print() << "," << sub[1]->print() << ")"; break;
    case Kind::perm: {
      out << "perm[";
      for (std::size_t p = 0; p < perms.size(); ++p) {
        if (p) out << ",";
        if (perms[p].empty()) out << "()";
        for (const auto& cyc : perms[p]) {
          out << "(";
          for (std::size_t i = 0; i < cyc.size(); ++i) out << (i ? " " : "") << cyc[i];
          out << ")";
        }
      }
      out << "]";
      break;
    }
  }
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input after spec");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (pos_ == start) fail("expected a constructor name");
    return s_.substr(start, pos_ - start);
  }

  long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  GroupSpec parse_spec() {
    std::size_t at = pos_;
    std::string name = ident();
    GroupSpec spec;
    if (name == "perm") {
      spec.kind = GroupSpec::Kind::perm;
      expect('[');
      do {
        spec.perms.push_back(parse_cycles());
      } while (eat(','));
      expect(']');
      return spec;
    }
    expect('(');
    if (name == "cyclic" || name == "dihedral" || name == "sym" || name == "alt" ||
        name == "quaternion") {
      spec.kind = name == "cyclic"      ? GroupSpec::Kind::cyclic
                  : name == "dihedral"  ? GroupSpec::Kind::dihedral
                  : name == "sym"       ? GroupSpec::Kind::sym
                  : name == "alt"       ? GroupSpec::Kind::alt
                                        : GroupSpec::Kind::quaternion;
      long v = integer();
      if ((name == "cyclic" || name == "sym" || name == "alt") && v < 1)
        fail(name + "(n) requires n >= 1");
      if (name == "dihedral" && v < 3) fail("dihedral(n) requires n >= 3");
      if (name == "quaternion" && v != 8) fail("quaternion(n) is only provided for n = 8");
      spec.args.push_back(v);
    } else if (name == "elemab") {
      spec.kind = GroupSpec::Kind::elemab;
      long p = integer();
      if (p < 2) fail("elemab(p,k) requires p >= 2");
      spec.args.push_back(p);
      expect(',');
      long k = integer();
      if (k < 1) fail("elemab(p,k) requires k >= 1");
      spec.args.push_back(k);
    } else if (name == "product") {
      spec.kind = GroupSpec::Kind::product;
      spec.sub.push_back(std::make_shared<GroupSpec>(parse_spec()));
      expect(',');
      spec.sub.push_back(std::make_shared<GroupSpec>(parse_spec()));
    } else {
      pos_ = at;
      fail("unknown constructor '" + name + "'");
    }
    expect(')');
    return spec;
  }

  // one permutation: a run of cycles "(1 2)(3 4)" or the identity "()"
  std::vector<std::vector<int>> parse_cycles() {
    std::vector<std::vector<int>> cycles;
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '(' starting a cycle");
    while (eat('(')) {
      std::vector<int> cyc;
      skip_ws();
      while (pos_ < s_.size() && s_[pos_] != ')') {
        long v = integer();
        if (v < 1) fail("cycle points are 1-based");
        cyc.push_back(static_cast<int>(v));
        skip_ws();
      }
      expect(')');
      if (!cyc.empty()) cycles.push_back(std::move(cyc));
      skip_ws();
      if (pos_ >= s_.size() || s_[pos_] != '(') break;
    }
    return cycles;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::vector<int> perm_from_cycles(const std::vector<std::vector<int>>& cycles, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  // cycles applied left to right (disjoint cycles commute anyway)
  for (const auto& cyc : cycles) {
    std::vector<int> step(degree);
    for (int i = 0; i < degree; ++i) step[i] = i;
    for (std::size_t i = 0; i < cyc.size(); ++i)
      step[cyc[i] - 1] = cyc[(i + 1) % cyc.size()] - 1;
    for (int i = 0; i < degree; ++i) img[i] = step[img[i]];
  }
  return img;
}

}  // namespace

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

GroupPtr build_group(const GroupSpec& spec, const Config& cfg) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic:
      if (spec.args[0] < 1) throw Error("cyclic(n) requires n >= 1");
      return build_cyclic(static_cast<int>(spec.args[0]), cfg);
    case GroupSpec::Kind::elemab:
      return build_elemab(static_cast<int>(spec.args[0]), static_cast<int>(spec.args[1]), cfg);
    case GroupSpec::Kind::dihedral:
      return build_dihedral(static_cast<int>(spec.args[0]), cfg);
    case GroupSpec::Kind::quaternion:
      if (spec.args[0] != 8) throw Error("quaternion(n) is only provided for n = 8");
      return build_quaternion8();
    case GroupSpec::Kind::sym:
      return build_sym(static_cast<int>(spec.args[0]), cfg);
    case GroupSpec::Kind::alt:
      return build_alt(static_cast<int>(spec.args[0]), cfg);
    case GroupSpec::Kind::product:
      return build_group_product(spec, cfg).group;
    case GroupSpec::Kind::perm: {
      int degree = 1;
      for (const auto& perm : spec.perms)
        for (const auto& cyc : perm)
          for (int v : cyc) degree = std::max(degree, v);
      std::vector<std::vector<int>> gens;
      for (const auto& perm : spec.perms) gens.push_back(perm_from_cycles(perm, degree));
      return build_perm_group(gens, cfg);
    }
  }
  throw Error("unreachable spec kind");
}

DirectProduct build_group_product(const GroupSpec& spec, const Config& cfg) {
  if (spec.kind != GroupSpec::Kind::product)
    throw PreconditionError("build_group_product needs a product spec");
  return build_product(build_group(*spec.sub[0], cfg), build_group(*spec.sub[1], cfg), cfg);
}

}  // namespace zgr
