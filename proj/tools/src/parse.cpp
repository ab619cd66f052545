#include "circtree/cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace circtree::cli {

namespace {

std::vector<std::string> split(const std::string& text, char separator) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream stream(text);
  while (std::getline(stream, part, separator)) {
    parts.push_back(part);
  }
  if (!text.empty() && text.back() == separator) {
    parts.emplace_back();
  }
  return parts;
}

std::int64_t parse_integer(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw InvalidSpec("expected an integer, got '" + text + "'");
  }
  return value;
}

PowerVariant parse_variant(const std::string& text) {
  if (text == "n") {
    return PowerVariant::PowerN;
  }
  if (text == "n-1") {
    return PowerVariant::PowerNMinus1;
  }
  throw InvalidSpec("cycle-power variant must be 'n' or 'n-1', got '" + text + "'");
}

DirectedCirculantSpec digraph_from_fields(const std::vector<std::int64_t>& v) {
  if (v.size() < 3) {
    throw InvalidSpec("--digraph expects beta,n,p[,gamma...]");
  }
  DirectedCirculantSpec spec{v[0], v[1], v[2], {v.begin() + 3, v.end()}};
  spec.validate();
  return spec;
}

}  // namespace

DirectedCirculantSpec parse_digraph(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const auto& field : split(text, ',')) {
    values.push_back(parse_integer(field));
  }
  return digraph_from_fields(values);
}

CyclePowerSpec parse_cycle_power(const std::string& text) {
  const auto fields = split(text, ',');
  if (fields.size() != 3) {
    throw InvalidSpec("--cycle-power expects beta,n,{n|n-1}");
  }
  CyclePowerSpec spec{parse_integer(fields[0]), parse_integer(fields[1]),
                      parse_variant(fields[2])};
  spec.validate();
  return spec;
}

std::vector<std::int64_t> parse_range(const std::string& text) {
  std::vector<std::int64_t> values;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      values.push_back(parse_integer(item));
      continue;
    }
    const auto lo = parse_integer(item.substr(0, dots));
    const auto hi = parse_integer(item.substr(dots + 2));
    if (lo > hi || hi - lo > 1'000'000) {
      throw InvalidSpec("bad range '" + item + "'");
    }
    for (auto v = lo; v <= hi; ++v) {
      values.push_back(v);
    }
  }
  if (values.empty()) {
    throw InvalidSpec("empty range");
  }
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw InvalidSpec("range '" + text + "' repeats a value");
  }
  return values;
}

FamilyTemplate parse_family(const std::string& text) {
  FamilyTemplate family{split(text, ',')};
  bool has_n = false;
  for (const auto& field : family.fields) {
    has_n = has_n || field == "n";
  }
  if (!has_n) {
    throw InvalidSpec("family template '" + text + "' has no 'n' placeholder");
  }
  return family;
}

bool FamilyTemplate::uses_beta() const {
  return std::find(fields.begin(), fields.end(), "b") != fields.end();
}

namespace {

std::int64_t substitute(const std::string& field, std::int64_t beta, std::int64_t n) {
  if (field == "b") {
    return beta;
  }
  if (field == "n") {
    return n;
  }
  return parse_integer(field);
}

}  // namespace

DirectedCirculantSpec FamilyTemplate::digraph(std::int64_t beta, std::int64_t n) const {
  std::vector<std::int64_t> values;
  for (const auto& field : fields) {
    values.push_back(substitute(field, beta, n));
  }
  return digraph_from_fields(values);
}

CyclePowerSpec FamilyTemplate::cycle_power(std::int64_t beta, std::int64_t n) const {
  if (fields.size() != 2 && fields.size() != 3) {
    throw InvalidSpec("--cycle-power-family expects beta,n[,{n|n-1}]");
  }
  if (fields[1] != "n") {
    throw InvalidSpec("the second cycle-power field must be the 'n' placeholder");
  }
  CyclePowerSpec spec{substitute(fields[0], beta, n), n,
                      fields.size() == 3 ? parse_variant(fields[2]) : PowerVariant::PowerN};
  spec.validate();
  return spec;
}

}  // namespace circtree::cli
