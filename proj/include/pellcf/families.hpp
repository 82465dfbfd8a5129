#pragma once

// The torsion families D_m(x;t): for m >= 4
//
//     D_m = (x^2 + v - w^2)^2 + 4v(x + w),   (v, w) = (v_m(t), w_m(t)),
//
// and the degenerate shapes for m = 2, 3.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pellcf/classify.hpp"
#include "pellcf/units.hpp"

namespace pellcf {

/// m in {2, ..., 10, 12}.
bool is_family_order(int m);

struct FamilyParams {
    Rat v;
    Rat w;
};

/// m in {4, ..., 10, 12}. Throws std::invalid_argument for other m and
/// std::domain_error where a denominator vanishes.
FamilyParams family_params(int m, const Rat& t);

/// For m = 2 the pair (u, w) is stored as (v, w) with D = (x^2+u)^2 + 4w;
/// for m = 3 it is (v, w) with D = (x^2-w^2)^2 + 4v(x+w). t is unused there.
struct FamilyInstance {
    int m = 0;
    Rat t;
    Rat v;
    Rat w;
    Poly D;
    bool regular = false;

    /// "m=10,t=2", "m=2,u=1,w=1", "m=3,v=1,w=1".
    std::string spec() const;
    friend bool operator==(const FamilyInstance&, const FamilyInstance&) = default;
};

FamilyInstance family_poly(int m, const Rat& t);
FamilyInstance family_poly2(const Rat& u, const Rat& w);
FamilyInstance family_poly3(const Rat& v, const Rat& w);

/// Inverse of FamilyInstance::spec. Throws std::invalid_argument.
FamilyInstance parse_family_spec(const std::string& spec);

/// Regular: parameters defined, D squarefree, and the unit search finds
/// torsion exactly m. t in {0, 1, 1/2} is always irregular for m = 10, 12.
bool is_regular(int m, const Rat& t);
bool is_regular(const FamilyInstance& inst);

/// k_4 = 4t, k_6 = 4t, k_8 = 4(t-1)(2t-1)^2/t^3. Only determined up to a
/// rational square factor. Throws std::invalid_argument for other m.
Rat expected_norm(int m, const Rat& t);

/// A cell the tables mark without a prediction.
struct Unresolved {
    std::string mark;
    friend bool operator==(const Unresolved&, const Unresolved&) = default;
};

enum class Table1Column { V4, C4 };

struct Table1Cell {
    Rat t;
    GaloisLabel label = GaloisLabel::D4;
    friend bool operator==(const Table1Cell&, const Table1Cell&) = default;
};

using Table1Entry = std::variant<std::monostate, Table1Cell, Unresolved>;

/// Parametrized t at which D_m(x;t) is predicted to have group V4 or C4.
/// std::monostate for empty cells. m in {4, 6, 8, 10, 12}.
/// Throws std::domain_error when the parametrization is undefined at s.
Table1Entry table1_expected(int m, Table1Column column, const Rat& s);

enum class Table2Column { Two = 2, Three = 3, Four = 4 };

struct Table2Cell {
    Rat t;
    int factor_count = 0;
    friend bool operator==(const Table2Cell&, const Table2Cell&) = default;
};

using Table2Entry = std::variant<std::monostate, Table2Cell, Unresolved>;

/// Parametrized t at which D_m(x;t) has the given number of irreducible
/// factors over Q. branch selects between the two two-factor forms for
/// m = 4, 6. m in {4, 6, 8}.
Table2Entry table2_expected(int m, Table2Column column, const Rat& s, int branch = 0);

/// The linear divisor of D_m(x;t), m in {5, 7, 9}, together with the sign
/// the tabulated form carries.
struct SignResolution {
    int m = 0;
    Rat t;
    Poly printed;
    Poly divisor;
    bool matches_print() const { return printed == divisor; }
};

/// Tries x - rho and x + rho and keeps the one dividing D_m(x;t). Throws
/// InvariantViolation when neither or both divide (rho = 0 leaves one
/// candidate).
SignResolution odd_linear_resolution(int m, const Rat& t);
Poly odd_linear_factor(int m, const Rat& t);

/// Degenerate m = 3. The tabulated cubic cofactor F_tab has constant
/// w^3 - 4v while D3 = (x+w)(x^3 - wx^2 - w^2x + w^3 + 4v), so the three
/// conditions below are stated for F_tab and reach D3 through v -> -v.
class D3Toolkit {
public:
    D3Toolkit(Rat v, Rat w);

    const Rat& v() const { return v_; }
    const Rat& w() const { return w_; }
    const Poly& D3() const { return D3_; }
    /// D3 / (x + w), by exact division.
    const Poly& F() const { return F_; }

    struct A3Condition {
        Rat v_tab;
        Poly cubic;
        Rat discriminant;
        bool square = false;
    };
    /// v = 8 t^2 w^3 / (27 t^2 + 1): F_tab has square discriminant.
    A3Condition a3_condition(const Rat& t) const;

    struct RootSplit {
        Rat v_tab;
        Poly cubic;
        Poly linear;
        Poly quadratic;
        bool expands = false;
    };
    /// v = (w + r)(w - r)^2/4: F_tab = (x - r)(x^2 - (w-r)x - w^2 - rw + r^2).
    RootSplit root_split(const Rat& r) const;

    struct FullSplit {
        Rat v_tab;
        Poly cubic;
        std::vector<Rat> roots;
        bool splits = false;
    };
    /// v = 8 w^3 (s^2-1)^2 / (s^2+3)^3: F_tab has three rational roots.
    FullSplit full_split(const Rat& s) const;

    /// x^3 - wx^2 - w^2x + w^3 - 4v for the given v.
    Poly tabulated_cubic(const Rat& v) const;

private:
    Rat v_;
    Rat w_;
    Poly D3_;
    Poly F_;
};

D3Toolkit d3_toolkit(const Rat& v, const Rat& w);

/// (x^2 + u)^2 - k. Throws std::invalid_argument for k = 0.
Poly d2_alt(const Rat& u, const Rat& k);

struct PlaneCurve {
    /// u^2 = rhs(t)
    std::string equation;
    Poly rhs;
    bool typo_suspect = false;
    std::string note;

    /// u with u^2 = rhs(t), when rhs(t) is a rational square.
    std::optional<Rat> point_at(const Rat& t) const;
    bool singular_at(const Rat& t) const { return rhs.eval(t).is_zero(); }
};

/// The two curves left open for m = 10 (D4 cases) and m = 8 (three
/// factors). The first is stored with "-2t-" in place of the printed "-2x-".
std::vector<PlaneCurve> unresolved_curves();

/// A known misprint and how it was settled.
struct TypoEntry {
    std::string where;
    std::string printed;
    std::string resolved;
};

/// Sign resolutions are recomputed at t = 2.
std::vector<TypoEntry> typo_ledger();

struct ScanRow {
    FamilyInstance instance;
    std::optional<ClassReport> report;
    std::string error;
};

/// One row per (m, t) in input order. Instances are evaluated on up to
/// `threads` worker threads; row order does not depend on scheduling.
std::vector<ScanRow> scan_families(const std::vector<std::pair<int, Rat>>& grid, unsigned threads = 1);
Json scan_row_to_json(const ScanRow& row);

}  // namespace pellcf
