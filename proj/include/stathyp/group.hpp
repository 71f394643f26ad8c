#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace stathyp {

struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class GroupKind : std::uint8_t {
  free_group,
  free_abelian,
  cyclic,
  infinite_dihedral,
  free_product,
  direct_product,
  lamplighter,
};

/// Declarative description of a group together with its standard symmetric
/// generating set (1 not in S, S = S^-1; involutions are listed once).
/// Product specs own their factor specs; the whole value is immutable.
class GroupSpec {
 public:
  static GroupSpec free_group(std::int64_t rank);
  static GroupSpec free_abelian(std::int64_t dim);
  static GroupSpec cyclic(std::int64_t order);
  static GroupSpec infinite_dihedral();
  static GroupSpec free_product(GroupSpec left, GroupSpec right);
  static GroupSpec direct_product(GroupSpec left, GroupSpec right);
  static GroupSpec lamplighter(std::int64_t modulus);

  /// Parses the config grammar, e.g. "free(2)", "direct(free(2),cyclic(3))",
  /// "free_product(abelian(2),free(1))", "dihedral_inf", "lamplighter(2)".
  static GroupSpec parse(std::string_view text);

  GroupKind kind() const { return kind_; }
  std::int64_t param() const { return param_; }  // rank / dim / order / modulus
  const GroupSpec& left() const { return factors_[0]; }
  const GroupSpec& right() const { return factors_[1]; }
  bool is_product() const {
    return kind_ == GroupKind::free_product || kind_ == GroupKind::direct_product;
  }

  std::string to_string() const;
  bool operator==(const GroupSpec& other) const;

  int generator_count() const;
  int generator_inverse(int index) const;
  std::string generator_name(int index) const;

 private:
  GroupSpec(GroupKind kind, std::int64_t param) : kind_(kind), param_(param) {}
  GroupKind kind_;
  std::int64_t param_ = 0;
  std::vector<GroupSpec> factors_;  // exactly 2 for product kinds
};

/// Index into a GroupSpec's generating-set list.
struct Generator {
  int index = 0;
};

/// Canonical form of a group element. The representation is variant-specific
/// and unique per element, so equality is structural and hashing can use the
/// byte encoding. Values are immutable once built.
class Element {
 public:
  struct FreeWord {  // reduced word; letter +k / -k means generator k / inverse
    std::vector<std::int16_t> letters;
    bool operator==(const FreeWord&) const = default;
  };
  struct AbelianVec {
    std::vector<std::int64_t> coords;
    bool operator==(const AbelianVec&) const = default;
  };
  struct CyclicRes {
    std::int64_t residue = 0;
    bool operator==(const CyclicRes&) const = default;
  };
  struct DihedralWord {  // alternating word in the two involutions a=0, b=1
    std::uint32_t length = 0;
    std::uint8_t first = 0;  // 0 when length == 0
    bool operator==(const DihedralWord&) const = default;
  };
  struct Syllable;
  struct Syllables {  // free product normal form: alternating non-identity syllables
    std::vector<Syllable> parts;
    bool operator==(const Syllables&) const;
  };
  struct DirectPair {
    std::vector<Element> parts;  // exactly two
    bool operator==(const DirectPair&) const;
  };
  struct Lamps {  // wreath product Z_m wr Z: finitely many lamps plus head position
    std::vector<std::pair<std::int64_t, std::int64_t>> lamps;  // (position, value in [1,m)), sorted
    std::int64_t head = 0;
    bool operator==(const Lamps&) const = default;
  };
  using Rep = std::variant<FreeWord, AbelianVec, CyclicRes, DihedralWord,
                           Syllables, DirectPair, Lamps>;

  Element() = default;
  explicit Element(Rep rep) : rep_(std::move(rep)) {}

  const Rep& rep() const { return rep_; }
  Rep& rep() { return rep_; }
  bool is_identity() const;
  bool operator==(const Element& other) const { return rep_ == other.rep_; }

 private:
  Rep rep_;
};

struct Element::Syllable {
  std::uint8_t factor = 0;  // 0 = left, 1 = right
  Element elem;
  bool operator==(const Syllable&) const;
};

// Group operations. All functions are pure; elements passed in must be
// canonical for the spec (ops preserve canonicality). A representation that
// does not match the spec's variant raises std::invalid_argument.

Element identity(const GroupSpec& spec);
Element multiply(const GroupSpec& spec, const Element& x, const Element& y);
Element inverse(const GroupSpec& spec, const Element& x);
std::uint64_t word_length(const GroupSpec& spec, const Element& x);
std::uint64_t distance(const GroupSpec& spec, const Element& x, const Element& y);

Element generator_element(const GroupSpec& spec, Generator g);
/// x * s for generator s; the fast path used by sphere enumeration.
Element apply_generator(const GroupSpec& spec, const Element& x, Generator g);

/// Exact graph distance by bidirectional breadth-first search over the Cayley
/// graph, using only generator multiplication. Returns nullopt if the
/// distance exceeds cap. Independent of the closed-form metric; serves as its
/// validation oracle.
std::optional<std::uint64_t> bfs_distance(const GroupSpec& spec, const Element& x,
                                          const Element& y, std::uint64_t cap);

/// Canonical byte encoding; unique per element, self-delimiting given spec.
std::string encode(const GroupSpec& spec, const Element& x);
Element decode(const GroupSpec& spec, std::string_view bytes);
/// Decodes a prefix of `bytes` starting at pos; advances pos.
Element decode_prefix(const GroupSpec& spec, std::string_view bytes, std::size_t& pos);

bool is_canonical(const GroupSpec& spec, const Element& x);

}  // namespace stathyp
