#include "spinstrata/monomial_action.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace spinstrata {

MonomialAction MonomialAction::identity(std::shared_ptr<const CoordinateSystem> sys) {
    MonomialAction a;
    a.perm.resize(static_cast<std::size_t>(sys->dimension()));
    for (std::size_t i = 0; i < a.perm.size(); ++i) a.perm[i] = static_cast<int>(i);
    a.scalar.assign(a.perm.size(), RootOfUnity::one());
    a.system = std::move(sys);
    return a;
}

bool MonomialAction::is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != static_cast<int>(i) || !scalar[i].is_one()) return false;
    return true;
}

bool MonomialAction::operator<(const MonomialAction& o) const {
    if (perm != o.perm) return perm < o.perm;
    for (std::size_t i = 0; i < scalar.size(); ++i)
        if (!(scalar[i] == o.scalar[i])) return scalar[i] < o.scalar[i];
    return false;
}

MonomialAction compose(const MonomialAction& outer, const MonomialAction& inner) {
    MonomialAction r;
    r.system = inner.system;
    const std::size_t n = inner.perm.size();
    r.perm.resize(n);
    r.scalar.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        int mid = inner.perm[i];
        r.perm[i] = outer.perm[static_cast<std::size_t>(mid)];
        r.scalar[i] = inner.scalar[i] * outer.scalar[static_cast<std::size_t>(mid)];
    }
    return r;
}

MonomialAction inverse(const MonomialAction& a) {
    MonomialAction r;
    r.system = a.system;
    const std::size_t n = a.perm.size();
    r.perm.resize(n);
    r.scalar.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        r.perm[static_cast<std::size_t>(a.perm[i])] = static_cast<int>(i);
        r.scalar[static_cast<std::size_t>(a.perm[i])] = a.scalar[i].inverse();
    }
    return r;
}

namespace {

// visit each permutation cycle once: calls f(start_slot, length, product_exponent)
template <typename F>
void for_each_cycle(const MonomialAction& a, F&& f) {
    std::vector<char> seen(a.perm.size(), 0);
    for (std::size_t i = 0; i < a.perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t j = i;
        int len = 0;
        RootOfUnity prod;
        do {
            seen[j] = 1;
            prod = prod * a.scalar[j];
            j = static_cast<std::size_t>(a.perm[j]);
            ++len;
        } while (j != i);
        f(i, len, prod);
    }
}

} // namespace

std::int64_t MonomialAction::order() const {
    std::int64_t result = 1;
    for_each_cycle(*this, [&](std::size_t, int len, RootOfUnity prod) {
        result = lcm64(result, static_cast<std::int64_t>(len) * prod.order());
    });
    return result;
}

std::vector<Rational> eigen_exponents(const MonomialAction& a) {
    std::vector<Rational> out;
    out.reserve(a.perm.size());
    for_each_cycle(a, [&](std::size_t, int len, RootOfUnity prod) {
        for (int j = 0; j < len; ++j)
            out.push_back(mod1((prod.exponent() + j) / len));
    });
    std::sort(out.begin(), out.end());
    return out;
}

bool is_quasireflection(const MonomialAction& a) {
    int ones = 0;
    for (const Rational& e : eigen_exponents(a))
        if (e.numerator() == 0) ++ones;
    return ones == static_cast<int>(a.perm.size()) - 1;
}

MonomialAction prill_quotient(const MonomialAction& a,
                              std::shared_ptr<const CoordinateSystem> u_system) {
    if (a.system->level() != Level::Tau)
        throw SpinError(ErrorCode::WrongLevel, "prill quotient needs a tau-level action");
    if (u_system->level() != Level::U || !u_system->same_layout(*a.system) ||
        !(u_system->support() == a.system->support()))
        throw SpinError(ErrorCode::WrongLevel, "u-level system does not match the support");
    MonomialAction r = a;
    r.system = std::move(u_system);
    const auto& slots = a.system->slots();
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (slots[i].kind != SlotKind::Node) continue;
        switch (slots[i].cls) {
            case EdgeClass::TailNode: r.scalar[i] = r.scalar[i].pow(4); break;
            case EdgeClass::DisconnectingExceptional: r.scalar[i] = r.scalar[i].pow(2); break;
            default: break;
        }
    }
    return r;
}

MonomialAction prill_quotient(const MonomialAction& a) {
    if (a.system->level() != Level::Tau)
        throw SpinError(ErrorCode::WrongLevel, "prill quotient needs a tau-level action");
    return prill_quotient(a, CoordinateSystem::for_support(a.system->support(), Level::U));
}

std::size_t MonomialActionHash::operator()(const MonomialAction& a) const {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    auto mix = [&h](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (int p : a.perm) mix(static_cast<std::uint64_t>(p));
    for (const RootOfUnity& s : a.scalar) {
        mix(static_cast<std::uint64_t>(s.exponent().numerator()));
        mix(static_cast<std::uint64_t>(s.exponent().denominator()));
    }
    return static_cast<std::size_t>(h);
}

std::vector<MonomialAction> group_closure(const std::vector<MonomialAction>& generators, long long cap) {
    std::shared_ptr<const CoordinateSystem> sys;
    if (!generators.empty()) sys = generators.front().system;
    if (!sys) throw SpinError(ErrorCode::NotFromSpinDatum, "closure needs at least one generator");

    std::unordered_set<MonomialAction, MonomialActionHash> seen;
    std::deque<MonomialAction> frontier;
    MonomialAction id = MonomialAction::identity(sys);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        MonomialAction cur = std::move(frontier.front());
        frontier.pop_front();
        for (const MonomialAction& g : generators) {
            MonomialAction next = compose(g, cur);
            if (seen.insert(next).second) {
                if (static_cast<long long>(seen.size()) > cap)
                    throw SpinError(ErrorCode::CapExceeded,
                                    "group closure exceeded cap " + std::to_string(cap));
                frontier.push_back(std::move(next));
            }
        }
    }
    std::vector<MonomialAction> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace spinstrata
