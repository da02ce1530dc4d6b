#ifndef GSTLAB_EXEC_WORD_HPP
#define GSTLAB_EXEC_WORD_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gstlab {

// Execution words are the transition alphabet of the whole library.  A word
// is a finite sequence of segments, each of which is either a single labeled
// point or a dense half-open stretch (no least element, a greatest element)
// of one label.  A word stands for the order type of the labeled chain
// obtained by concatenating its segments left to right.
//
// Canonical form: two adjacent dense segments with the same label denote the
// same order type as one, so they are merged.  No other adjacent pair can be
// collapsed (a point is always detectable as "has an immediate predecessor
// or is the minimum"), which makes canonical sequences a complete invariant:
// two words denote order-isomorphic labeled chains iff their canonical
// segment sequences are equal.

struct ParseError : std::runtime_error {
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        pos(position), msg(message) {}
  std::size_t pos;
  std::string msg;
};

struct Label {
  std::string name;
  auto operator<=>(const Label&) const = default;
};

// True iff the name matches [A-Za-z][A-Za-z0-9_.]*
bool valid_label_name(std::string_view name);

enum class Shape : std::uint8_t { Point, Dense };

struct Segment {
  Shape shape;
  Label label;
  auto operator<=>(const Segment&) const = default;
};

inline Segment point(std::string name) { return {Shape::Point, {std::move(name)}}; }
inline Segment dense(std::string name) { return {Shape::Dense, {std::move(name)}}; }

class ExecWord {
 public:
  // Canonicalizes a raw segment sequence by exhaustively merging adjacent
  // equal-label dense pairs.  Throws std::invalid_argument("empty word") on
  // empty input.  The merge system is confluent, so a single left-to-right
  // fold reaches the unique normal form.
  static ExecWord normalize(const std::vector<Segment>& raw);

  const std::vector<Segment>& segments() const { return segments_; }
  std::size_t size() const { return segments_.size(); }

  bool all_points() const;

  auto operator<=>(const ExecWord&) const = default;

 private:
  explicit ExecWord(std::vector<Segment> segments) : segments_(std::move(segments)) {}
  std::vector<Segment> segments_;
};

// Canonical-form equality decides order equivalence for this segment family.
inline bool equivalent(const ExecWord& a, const ExecWord& b) { return a == b; }

ExecWord concat(const ExecWord& a, const ExecWord& b);

// All ordered pairs (w1, w2) with concat(w1, w2) == w: one per inter-segment
// boundary plus, for each dense segment, the pair that cuts it in two.
// Cutting a dense segment at a boundary collapses to the same canonical pair,
// so the result is returned deduplicated and sorted.
std::vector<std::pair<ExecWord, ExecWord>> splits(const ExecWord& w);

// Grammar: word := seg ("," seg)* ; seg := ("D"|"P") label.  Normalizes.
ExecWord parse_word(std::string_view text);
std::string format_word(const ExecWord& w);

struct Rational {
  long long num = 0;
  long long den = 1;  // > 0, reduced
  static Rational make(long long num, long long den);
  // Numeric order; reduced form makes field equality value equality.
  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const {
    return num * o.den <=> o.num * den;
  }
  std::string str() const;
};

// Concrete sampling of a word into rational positions.  Segment i (1-based)
// occupies the interval (i-1, i]: a point segment samples {i}; a dense
// segment samples k evenly spaced interior positions plus the endpoint i.
// Positions are strictly increasing and the label readout spells the word.
std::vector<std::pair<Rational, Label>> realize(const ExecWord& w, int interior_samples);

}  // namespace gstlab

#endif
