#include "uccone/farkas.hpp"

namespace uccone {

namespace bmp = boost::multiprecision;

LinearInequality LinearInequality::make(int n, std::map<SubsetMask, Rational, CanonicalLess> lhs,
                                        std::map<SubsetMask, Rational, CanonicalLess> rhs) {
    check_dimension(n);
    auto validate = [n](const auto& side) {
        for (const auto& [a, c] : side) {
            if (a.empty() || !a.fits(n)) throw std::invalid_argument("coefficient on a subset outside [n]");
            if (c < 0) throw std::invalid_argument("coefficients must be nonnegative");
        }
    };
    validate(lhs);
    validate(rhs);
    LinearInequality out{n, {}, {}};
    std::map<SubsetMask, Rational, CanonicalLess> net;
    for (const auto& [a, c] : lhs) net[a] += c;
    for (const auto& [a, c] : rhs) net[a] -= c;
    for (const auto& [a, c] : net) {
        if (c > 0) out.lhs[a] = c;
        if (c < 0) out.rhs[a] = -c;
    }
    return out;
}

std::vector<Rational> LinearInequality::coefficients() const {
    std::vector<Rational> out((std::size_t{1} << n) - 1);
    for (const auto& [a, c] : lhs) out[a.bits() - 1] += c;
    for (const auto& [a, c] : rhs) out[a.bits() - 1] -= c;
    return out;
}

Rational LinearInequality::slack(const ProjectionVector& v) const {
    Rational total = 0;
    for (const auto& [a, c] : lhs) total += c * v[a];
    for (const auto& [a, c] : rhs) total -= c * v[a];
    return total;
}

Real LinearInequality::slack(const RealVector& v) const {
    Real total = 0;
    for (const auto& [a, c] : lhs) total += to_real(c) * v[a];
    for (const auto& [a, c] : rhs) total -= to_real(c) * v[a];
    return total;
}

LinearInequality LinearInequality::from_generator(int n, const CoverInequality& g) {
    std::map<SubsetMask, Rational, CanonicalLess> lhs;
    for (SubsetMask p : g.cover.parts) lhs[p] += 1;
    return make(n, std::move(lhs), {{g.cover.ground, Rational(g.cover.k)}});
}

std::string LinearInequality::to_string() const {
    auto side = [](const auto& terms) {
        std::string out;
        for (const auto& [a, c] : terms) {
            if (!out.empty()) out += " + ";
            out += format_rational(c) + "*{" + a.to_string() + "}";
        }
        return out.empty() ? std::string("0") : out;
    };
    return side(lhs) + " >= " + side(rhs);
}

Implication check_implication(const ConeSystem& system, const LinearInequality& inequality,
                              const FarkasOptions& options) {
    if (inequality.n != system.n) throw std::invalid_argument("inequality dimension does not match system");
    const std::size_t coords = (std::size_t{1} << system.n) - 1;
    const std::size_t gens = system.generators.size();
    const std::vector<Rational> target = inequality.coefficients();
    std::vector<std::vector<Integer>> columns;
    columns.reserve(gens);
    for (const CoverInequality& g : system.generators) columns.push_back(g.coefficients(system.n));

    // Primal: target = sum_g weight_g * g, weight >= 0, minimizing total weight.
    LinearProgram<Rational> primal(gens);
    for (std::size_t a = 0; a < coords; ++a) {
        std::vector<Rational> r(gens);
        for (std::size_t g = 0; g < gens; ++g) r[g] = Rational(columns[g][a]);
        primal.add_row(std::move(r), Relation::Equal, target[a]);
    }
    std::fill(primal.objective.begin(), primal.objective.end(), Rational(1));
    LpSolution<Rational> combination = solve_lp(primal, options.lp);
    if (combination.status == LpStatus::Optimal) {
        FarkasCertificate certificate;
        for (std::size_t g = 0; g < gens; ++g) {
            if (combination.x[g] > 0) certificate.weights.emplace_back(g, combination.x[g]);
        }
        return certificate;
    }

    // Dual: v = p - q with g.v >= 0 for all generators and target.v = -1, minimizing |v|_1.
    LinearProgram<Rational> dual(2 * coords);
    for (std::size_t g = 0; g < gens; ++g) {
        std::vector<Rational> r(2 * coords);
        for (std::size_t a = 0; a < coords; ++a) {
            r[a] = Rational(columns[g][a]);
            r[coords + a] = Rational(-columns[g][a]);
        }
        dual.add_row(std::move(r), Relation::GreaterEqual, Rational(0));
    }
    {
        std::vector<Rational> r(2 * coords);
        for (std::size_t a = 0; a < coords; ++a) {
            r[a] = target[a];
            r[coords + a] = -target[a];
        }
        dual.add_row(std::move(r), Relation::Equal, Rational(-1));
    }
    std::fill(dual.objective.begin(), dual.objective.end(), Rational(1));
    LpSolution<Rational> separation = solve_lp(dual, options.lp);
    if (separation.status != LpStatus::Optimal) {
        throw std::logic_error("neither a certificate nor a separating vector was found");
    }
    ProjectionVector witness(system.n);
    for (SubsetMask a : canonical_subset_order(system.n)) {
        const std::size_t i = a.bits() - 1;
        witness[a] = separation.x[i] - separation.x[coords + i];
    }
    return witness;
}

bool verify_certificate(const ConeSystem& system, const LinearInequality& inequality,
                        const FarkasCertificate& certificate) {
    if (inequality.n != system.n) return false;
    std::vector<Rational> sum((std::size_t{1} << system.n) - 1);
    for (const auto& [index, weight] : certificate.weights) {
        if (index >= system.generators.size() || weight < 0) return false;
        const std::vector<Integer> g = system.generators[index].coefficients(system.n);
        for (std::size_t a = 0; a < sum.size(); ++a) sum[a] += weight * Rational(g[a]);
    }
    return sum == inequality.coefficients();
}

bool violates_exactly(const LinearInequality& inequality, const ProjectionVector& volumes) {
    Integer scale = 1;
    auto absorb = [&](const auto& side) {
        for (const auto& [a, c] : side) scale = bmp::lcm(scale, Integer(bmp::denominator(c)));
    };
    absorb(inequality.lhs);
    absorb(inequality.rhs);
    auto product = [&](const auto& side) {
        Rational total = 1;
        for (const auto& [a, c] : side) {
            if (!(volumes[a] > 0)) throw std::invalid_argument("projection volume must be positive");
            Integer exponent = bmp::numerator(c) * (scale / bmp::denominator(c));
            total *= pow(volumes[a], exponent.convert_to<unsigned>());
        }
        return total;
    };
    return product(inequality.lhs) < product(inequality.rhs);
}

ViolatingBody violating_body(const ConeSystem& system, const LinearInequality& inequality,
                             const ProjectionVector& witness, const ViolationOptions& options) {
    if (!membership(system, witness).inside) throw std::invalid_argument("witness is not in the cone");
    const Rational gap = inequality.slack(witness);
    if (gap >= 0) throw std::invalid_argument("witness does not violate the inequality");

    // Shifting every coordinate by eps moves the slack by eps * (sum lhs - sum rhs); keep half the gap.
    Rational drift = 0;
    for (const auto& [a, c] : inequality.lhs) drift += c;
    for (const auto& [a, c] : inequality.rhs) drift -= c;
    const Rational eps = drift > 0 ? Rational(-gap / (2 * drift)) : Rational(1);

    RealizationResult realized = find_lambda(system, witness, eps, options.lambda_cap, options.realization);
    Rational thickening = options.thickening;
    for (int attempt = 0; attempt < 64; ++attempt, thickening /= 2) {
        BoxUnionBody body = thicken(realized.body, thickening);
        LogProjection projection = log_projection_vector(body);
        if (violates_exactly(inequality, projection.volumes)) {
            Real margin = inequality.slack(projection.logs);
            return ViolatingBody{std::move(body), realized.lambda, realized.vector, thickening, true, margin};
        }
    }
    throw RealizationInconclusive("thickened body no longer violates the inequality");
}

}  // namespace uccone
