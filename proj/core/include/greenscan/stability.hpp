#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "greenscan/green_path.hpp"
#include "greenscan/representation.hpp"
#include "greenscan/submodules.hpp"

namespace greenscan {

/// Exact phase: either a point (x, y) with y > 0 of the upper half-plane,
/// ordered by angle, or a crossing time t in [0, 1].
class PhaseValue {
 public:
  enum class Kind { HalfPlane, PathTime };
  static PhaseValue half_plane(Rational x, Rational y);
  static PhaseValue path_time(Rational t);

  Kind kind() const { return kind_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  const Rational& time() const { return x_; }
  std::string to_string() const;

  /// Negative, zero or positive. Mixing kinds throws InputError.
  friend int compare(const PhaseValue& a, const PhaseValue& b);
  friend bool operator<(const PhaseValue& a, const PhaseValue& b) { return compare(a, b) < 0; }
  friend bool operator>(const PhaseValue& a, const PhaseValue& b) { return compare(a, b) > 0; }
  friend bool operator<=(const PhaseValue& a, const PhaseValue& b) { return compare(a, b) <= 0; }
  friend bool operator>=(const PhaseValue& a, const PhaseValue& b) { return compare(a, b) >= 0; }
  friend bool operator==(const PhaseValue& a, const PhaseValue& b) { return compare(a, b) == 0; }

 private:
  Kind kind_ = Kind::PathTime;
  Rational x_, y_;
};

/// Z(M) = (a[M], b[M]); b must be positive on every simple.
struct CentralCharge {
  RationalVector a;
  RationalVector b;
};

/// Parses "a=(1,-1);b=(1,1)".
CentralCharge parse_charge(std::string_view text, std::size_t n);

class StabilitySpec {
 public:
  static StabilitySpec charge(CentralCharge z);
  static StabilitySpec path(GreenPath gamma);

  bool is_path() const { return std::holds_alternative<GreenPath>(data_); }
  const GreenPath& green_path() const { return std::get<GreenPath>(data_); }
  const CentralCharge& central_charge() const { return std::get<CentralCharge>(data_); }
  std::size_t rank() const;
  /// Phase of any module with dimension vector dims (nonzero). Throws Refusal
  /// NOT_GREEN_PATH when a path does not cross the hyperplane of dims exactly once.
  PhaseValue phase(const IntVector& dims) const;
  PhaseValue phase(const Representation& m) const { return phase(m.dims()); }
  std::string describe() const;

 private:
  std::variant<CentralCharge, GreenPath> data_;
};

enum class StabilityClass { Stable, Semistable, Unstable, Inconclusive };
const char* to_string(StabilityClass c);

struct Classification {
  StabilityClass cls = StabilityClass::Inconclusive;
  std::optional<IntVector> witness;  // dims of a destabilizing submodule
};

/// King: stable iff theta(M) = 0 and theta(L) < 0 for all proper nonzero L.
Classification theta_classify(const RationalVector& theta, const Representation& m, const SubmoduleBudget& budget = {});
/// Phase stability: stable iff phase(L) < phase(M) for all proper nonzero L.
Classification classify(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget = {});

struct HNFiltration {
  std::vector<VertexSubspaces> chain;  // M_1 ⊊ ... ⊊ M_k = M in coordinates of M
  std::vector<Representation> factors; // F_i = M_i / M_{i-1}
  std::vector<PhaseValue> phases;      // strictly decreasing
};

/// Throws BoundExhausted when a submodule search is not certified complete.
HNFiltration hn_filtration(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget = {});

struct Destabilizing {
  Representation object;
  Morphism map;  // inclusion for the subobject, projection for the quotient
};
Destabilizing max_destab_subobject(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget = {});
Destabilizing max_destab_quotient(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget = {});

/// Jordan-Hölder factors of a semistable module (sorted by dimension vector).
/// Throws InputError if m is not semistable.
std::vector<Representation> stable_factors(const StabilitySpec& spec, const Representation& m, const SubmoduleBudget& budget = {});

enum class TorsionSide { InT, InF, Neither };
const char* to_string(TorsionSide s);
/// M in T_p iff phase(MDQ) >= p; M in F_p iff phase(MDS) < p.
TorsionSide torsion_membership(const StabilitySpec& spec, const PhaseValue& p, const Representation& m,
                               const SubmoduleBudget& budget = {});

struct TorsionSnapshot {
  std::optional<PhaseValue> threshold;   // none for the zero class
  std::vector<std::size_t> generators;   // stable universe modules with phase >= threshold
  std::vector<std::size_t> members;      // universe modules in the class
};

struct MgsExtraction {
  bool refused = false;
  std::string reason_code;  // NOT_DISCRETE, BOUND_EXHAUSTED or NOT_GREEN_PATH
  std::string detail;
  std::vector<std::size_t> stables;  // universe indices, phase descending
  std::vector<PhaseValue> phases;
  std::vector<TorsionSnapshot> chain;  // {0} = T_0 ⊊ ... ⊊ T_m
  bool endpoints_ok = false;           // first class zero, last class the whole universe
  std::size_t inconclusive = 0;        // universe modules whose classification was inconclusive
};

/// Stables of the universe in decreasing phase and the torsion classes they generate.
MgsExtraction extract_mgs(const StabilitySpec& spec, const std::vector<Representation>& universe,
                          const SubmoduleBudget& budget = {});

/// theta_{alpha(M,P)} = sum alpha_i g^{M_i} - sum alpha_j e_{P_j}.
RationalVector pair_functional(const std::vector<IntVector>& m_gvectors, const std::vector<int>& p_vertices,
                               const std::vector<Rational>& alpha, std::size_t n);

struct ProbeEntry {
  std::size_t index = 0;  // into the universe
  StabilityClass theta_class = StabilityClass::Inconclusive;
  bool perpendicular = false;  // hom(M,N) = hom(N,tau M) = hom(P,N) = 0
  bool agrees = true;
};
struct SemistableProbe {
  RationalVector theta;
  std::vector<ProbeEntry> entries;
  std::size_t stable_count = 0;
  long expected_stable_count = 0;  // n - |M| - |P|
  std::size_t disagreements = 0;
  std::size_t inconclusive = 0;
  bool consistent() const { return disagreements == 0 && static_cast<long>(stable_count) == expected_stable_count; }
};
/// Compares King semistability for theta_{alpha(M,P)} with the perpendicular
/// category test on every universe module. alpha covers M then P (empty: all ones).
SemistableProbe semistable_category_probe(const std::vector<Representation>& m_summands, const std::vector<int>& p_vertices,
                                          const std::vector<Rational>& alpha, const std::vector<Representation>& universe);

}  // namespace greenscan
