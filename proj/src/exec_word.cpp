#include "gstlab/exec_word.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace gstlab {

bool valid_label_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
  });
}

ExecWord ExecWord::normalize(const std::vector<Segment>& raw) {
  if (raw.empty()) throw std::invalid_argument("empty word");
  std::vector<Segment> out;
  out.reserve(raw.size());
  for (const Segment& seg : raw) {
    if (!out.empty() && out.back().shape == Shape::Dense && seg.shape == Shape::Dense &&
        out.back().label == seg.label) {
      continue;  // dense run of one label collapses to a single segment
    }
    out.push_back(seg);
  }
  return ExecWord(std::move(out));
}

bool ExecWord::all_points() const {
  return std::all_of(segments_.begin(), segments_.end(),
                     [](const Segment& s) { return s.shape == Shape::Point; });
}

ExecWord concat(const ExecWord& a, const ExecWord& b) {
  std::vector<Segment> joined = a.segments();
  joined.insert(joined.end(), b.segments().begin(), b.segments().end());
  return ExecWord::normalize(joined);
}

std::vector<std::pair<ExecWord, ExecWord>> splits(const ExecWord& w) {
  const std::vector<Segment>& segs = w.segments();
  std::vector<std::pair<ExecWord, ExecWord>> out;
  auto piece = [&](std::size_t from, std::size_t to) {  // [from, to)
    return ExecWord::normalize(std::vector<Segment>(segs.begin() + from, segs.begin() + to));
  };
  for (std::size_t i = 1; i < segs.size(); ++i)
    out.emplace_back(piece(0, i), piece(i, segs.size()));
  // A dense segment also splits in its interior; both halves keep the full
  // dense segment since a half-open sub-stretch has the same order type.
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].shape != Shape::Dense) continue;
    out.emplace_back(piece(0, i + 1), piece(i, segs.size()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void skip_ws(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

Segment parse_segment(std::string_view text, std::size_t& pos) {
  skip_ws(text, pos);
  if (pos >= text.size()) throw ParseError(pos, "expected segment");
  char shape_char = text[pos];
  if (shape_char != 'D' && shape_char != 'P')
    throw ParseError(pos, "expected segment shape 'D' or 'P'");
  ++pos;
  skip_ws(text, pos);
  std::size_t start = pos;
  while (pos < text.size() &&
         (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_' ||
          text[pos] == '.')) {
    ++pos;
  }
  std::string name(text.substr(start, pos - start));
  if (!valid_label_name(name)) throw ParseError(start, "expected label");
  return {shape_char == 'D' ? Shape::Dense : Shape::Point, {std::move(name)}};
}

}  // namespace

ExecWord parse_word(std::string_view text) {
  std::size_t pos = 0;
  std::vector<Segment> segs;
  segs.push_back(parse_segment(text, pos));
  skip_ws(text, pos);
  while (pos < text.size()) {
    if (text[pos] != ',') throw ParseError(pos, "expected ','");
    ++pos;
    segs.push_back(parse_segment(text, pos));
    skip_ws(text, pos);
  }
  return ExecWord::normalize(segs);
}

std::string format_word(const ExecWord& w) {
  std::string out;
  for (std::size_t i = 0; i < w.segments().size(); ++i) {
    const Segment& s = w.segments()[i];
    if (i > 0) out += ", ";
    out += (s.shape == Shape::Dense) ? 'D' : 'P';
    out += ' ';
    out += s.label.name;
  }
  return out;
}

Rational Rational::make(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (den < 0) { num = -num; den = -den; }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) { num /= g; den /= g; }
  return {num, den};
}

std::string Rational::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::vector<std::pair<Rational, Label>> realize(const ExecWord& w, int interior_samples) {
  if (interior_samples < 0) throw std::invalid_argument("negative sample count");
  std::vector<std::pair<Rational, Label>> out;
  long long base = 0;  // segment i occupies (base, base + 1]
  for (const Segment& seg : w.segments()) {
    if (seg.shape == Shape::Point) {
      out.emplace_back(Rational::make(base + 1, 1), seg.label);
    } else {
      for (int j = 1; j <= interior_samples; ++j)
        out.emplace_back(Rational::make(base * (interior_samples + 1) + j, interior_samples + 1),
                         seg.label);
      out.emplace_back(Rational::make(base + 1, 1), seg.label);
    }
    ++base;
  }
  return out;
}

}  // namespace gstlab
