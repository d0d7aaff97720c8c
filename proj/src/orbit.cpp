#include "reebcalc/orbit.hpp"

#include "reebcalc/errors.hpp"

namespace reebcalc {

Block Block::elliptic(Rational theta, bool declared_irrational) {
    if (theta.is_integer())
        throw InvariantError("elliptic block with integer rotation number " + theta.str() +
                             " (degenerate simple orbit)");
    return Block(Type::Elliptic, std::move(theta), declared_irrational, 0);
}

Block Block::positive_hyperbolic(long long winding) {
    if (winding % 2 != 0)
        throw InvariantError("positive hyperbolic block needs an even winding, got " +
                             std::to_string(winding));
    return Block(Type::PositiveHyperbolic, Rational(0), false, winding);
}

Block Block::negative_hyperbolic(long long winding) {
    if (winding % 2 == 0)
        throw InvariantError("negative hyperbolic block needs an odd winding, got " +
                             std::to_string(winding));
    return Block(Type::NegativeHyperbolic, Rational(0), false, winding);
}

const Rational& Block::theta() const {
    if (type_ != Type::Elliptic) throw InvariantError("theta() on a hyperbolic block");
    return theta_;
}

bool Block::declared_irrational() const {
    if (type_ != Type::Elliptic) throw InvariantError("declared_irrational() on a hyperbolic block");
    return declared_irrational_;
}

long long Block::winding() const {
    if (type_ == Type::Elliptic) throw InvariantError("winding() on an elliptic block");
    return winding_;
}

OrbitLinearization::OrbitLinearization(std::vector<Block> blocks, long long shift)
    : blocks_(std::move(blocks)), shift_(shift) {
    if (blocks_.empty())
        throw InvariantError("linearization needs at least one block (n >= 2)");
    if (shift_ % 2 != 0)
        throw InvariantError("trivialization shift must be even, got " + std::to_string(shift_));
}

HomotopyClass::HomotopyClass(std::string label) : label_(std::move(label)) {
    if (label_.empty()) throw InvariantError("empty homotopy class label");
}

HomotopyClass::Iterated HomotopyClass::iterate(long long k) const {
    if (contractible()) return {label_, 1};
    return {label_, k};
}

SimpleOrbit::SimpleOrbit(std::string name, Rational action, OrbitLinearization linearization,
                         HomotopyClass homotopy_class)
    : name_(std::move(name)), action_(std::move(action)),
      class_(std::move(homotopy_class)), lin_(std::move(linearization)) {
    if (name_.empty()) throw InvariantError("orbit needs a non-empty name");
    if (action_.sign() <= 0)
        throw InvariantError("orbit '" + name_ + "' needs a positive action, got " + action_.str());
}

Rational mean_index(const SimpleOrbit& orbit, long long k) {
    Rational total(0);
    for (const Block& b : orbit.linearization().blocks()) {
        if (b.is_elliptic())
            total += Rational(2 * k) * b.theta();
        else
            total += Rational(k * b.winding());
    }
    total += Rational(k * orbit.linearization().shift());
    return total;
}

bool is_degenerate_iterate(const SimpleOrbit& orbit, long long k) {
    for (const Block& b : orbit.linearization().blocks())
        if (b.is_elliptic() && (Rational(k) * b.theta()).is_integer()) return true;
    return false;
}

void require_nondegenerate(const SimpleOrbit& orbit, long long k) {
    const auto& blocks = orbit.linearization().blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (b.is_elliptic() && (Rational(k) * b.theta()).is_integer())
            throw DegenerateIterateError(orbit.name(), i, b.theta().str(), k,
                                         degeneracy_horizon(orbit));
    }
}

long long degeneracy_horizon(const SimpleOrbit& orbit) {
    mpz_class horizon = 0;
    for (const Block& b : orbit.linearization().blocks()) {
        if (!b.is_elliptic()) continue;
        mpz_class q = b.theta().denominator();
        if (horizon == 0 || q < horizon) horizon = q;
    }
    if (!horizon.fits_slong_p())
        return 0;  // effectively unreachable horizon
    return horizon.get_si();
}

long long cz_index(const SimpleOrbit& orbit, long long k) {
    if (k < 1) throw InvariantError("iteration order must be >= 1, got " + std::to_string(k));
    mpz_class total = 0;
    const auto& blocks = orbit.linearization().blocks();
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        const Block& b = blocks[i];
        if (b.is_elliptic()) {
            Rational rotated = Rational(k) * b.theta();
            if (rotated.is_integer())
                throw DegenerateIterateError(orbit.name(), i, b.theta().str(), k,
                                             degeneracy_horizon(orbit));
            total += 2 * rotated.floor() + 1;
        } else {
            total += mpz_class(static_cast<long>(k)) * static_cast<long>(b.winding());
        }
    }
    total += mpz_class(static_cast<long>(k)) * static_cast<long>(orbit.linearization().shift());
    if (!total.fits_slong_p())
        throw InvariantError("Conley-Zehnder index overflows machine range");
    return total.get_si();
}

long long degree(const SimpleOrbit& orbit, long long k, std::size_t n) {
    if (n != orbit.linearization().ambient_n())
        throw WrongDimensionError("orbit '" + orbit.name() + "' has " +
                                  std::to_string(orbit.linearization().blocks().size()) +
                                  " blocks but ambient parameter n = " + std::to_string(n));
    return cz_index(orbit, k) + static_cast<long long>(n) - 3;
}

bool is_even(const SimpleOrbit& orbit) {
    std::size_t negatives = 0;
    for (const Block& b : orbit.linearization().blocks())
        if (b.is_negative_hyperbolic()) ++negatives;
    return negatives % 2 == 0;
}

bool is_good(const SimpleOrbit& orbit, long long k) {
    return !(k % 2 == 0 && !is_even(orbit));
}

int sigma(const SimpleOrbit& orbit, long long k) {
    return cz_index(orbit, k) % 2 == 0 ? -1 : +1;
}

Rational iterate_action(const SimpleOrbit& orbit, long long k) {
    return Rational(k) * orbit.action();
}

}  // namespace reebcalc
