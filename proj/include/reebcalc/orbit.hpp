#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "reebcalc/rational.hpp"

namespace reebcalc {

// One 2x2 block of the linearized Poincare return map. Elliptic blocks carry
// a rotation number theta (a non-integer rational witness; declared_irrational
// marks it as standing in for an irrational value). Hyperbolic blocks carry an
// integer winding: even for positive, odd for negative eigenvalue pairs.
class Block {
public:
    enum class Type { Elliptic, PositiveHyperbolic, NegativeHyperbolic };

    static Block elliptic(Rational theta, bool declared_irrational = false);
    static Block positive_hyperbolic(long long winding);
    static Block negative_hyperbolic(long long winding);

    Type type() const noexcept { return type_; }
    bool is_elliptic() const noexcept { return type_ == Type::Elliptic; }
    bool is_negative_hyperbolic() const noexcept { return type_ == Type::NegativeHyperbolic; }

    const Rational& theta() const;       // elliptic only
    bool declared_irrational() const;    // elliptic only
    long long winding() const;           // hyperbolic only

private:
    Block(Type t, Rational theta, bool irr, long long winding)
        : type_(t), theta_(std::move(theta)), declared_irrational_(irr), winding_(winding) {}

    Type type_;
    Rational theta_;
    bool declared_irrational_ = false;
    long long winding_ = 0;
};

// Block decomposition of the return map plus the even trivialization shift.
// An orbit on M^{2n-1} has exactly n-1 blocks.
class OrbitLinearization {
public:
    OrbitLinearization(std::vector<Block> blocks, long long shift = 0);

    const std::vector<Block>& blocks() const noexcept { return blocks_; }
    long long shift() const noexcept { return shift_; }
    // Ambient parameter implied by the block count (n - 1 blocks).
    std::size_t ambient_n() const noexcept { return blocks_.size() + 1; }

private:
    std::vector<Block> blocks_;
    long long shift_;
};

// Free homotopy class label. "contractible" is absorbing under iteration;
// any other label L iterates to the pair (L, k).
class HomotopyClass {
public:
    HomotopyClass() : label_("contractible") {}
    explicit HomotopyClass(std::string label);

    const std::string& label() const noexcept { return label_; }
    bool contractible() const noexcept { return label_ == "contractible"; }

    struct Iterated {
        std::string label;  // "contractible" absorbs; exponent then 1
        long long exponent;
        friend bool operator==(const Iterated&, const Iterated&) = default;
        friend bool operator<(const Iterated& a, const Iterated& b) {
            return a.label != b.label ? a.label < b.label : a.exponent < b.exponent;
        }
    };
    Iterated iterate(long long k) const;

private:
    std::string label_;
};

class SimpleOrbit {
public:
    SimpleOrbit(std::string name, Rational action, OrbitLinearization linearization,
                HomotopyClass homotopy_class = HomotopyClass());

    const std::string& name() const noexcept { return name_; }
    const Rational& action() const noexcept { return action_; }
    const OrbitLinearization& linearization() const noexcept { return lin_; }
    const HomotopyClass& homotopy_class() const noexcept { return class_; }

private:
    std::string name_;
    Rational action_;
    HomotopyClass class_;
    OrbitLinearization lin_;
};

// --- index calculus -------------------------------------------------------

// Mean index of the k-th iterate, sum over blocks of 2k*theta / k*winding
// plus k*shift. Defined for every k (degenerate or not).
Rational mean_index(const SimpleOrbit& orbit, long long k = 1);

// True iff iterate k has an eigenvalue 1 (k*theta integral for some block).
bool is_degenerate_iterate(const SimpleOrbit& orbit, long long k);

// Throws DegenerateIterateError (with the offending block and the orbit's
// horizon) when iterate k is degenerate.
void require_nondegenerate(const SimpleOrbit& orbit, long long k);

// Minimal k >= 1 with a degenerate iterate: min of the elliptic theta
// denominators. 0 means "never" (no elliptic block).
long long degeneracy_horizon(const SimpleOrbit& orbit);

// Conley-Zehnder index of the k-th iterate. Throws DegenerateIterateError
// when the iterate fails non-degeneracy.
long long cz_index(const SimpleOrbit& orbit, long long k);

// Grading degree |x^k| = cz_index + n - 3; n must match the linearization.
long long degree(const SimpleOrbit& orbit, long long k, std::size_t n);

// Even iff the count of negative hyperbolic blocks (eigenvalue pairs meeting
// (-1,0)) is even.
bool is_even(const SimpleOrbit& orbit);

// Bad orbits are even iterates of odd orbits; everything else is good.
bool is_good(const SimpleOrbit& orbit, long long k);

// Poincare-type sign -(-1)^{cz_index}: +1 for odd index, -1 for even.
int sigma(const SimpleOrbit& orbit, long long k = 1);

Rational iterate_action(const SimpleOrbit& orbit, long long k);

}  // namespace reebcalc
