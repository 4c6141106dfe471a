#include "caysum/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace caysum {

GroupSpec GroupSpec::from_factors(std::vector<long> factor_orders) {
    if (factor_orders.empty())
        throw validation_error("group needs at least one cyclic factor");
    GroupSpec g;
    g.factors_ = std::move(factor_orders);
    for (long n : g.factors_) {
        if (n < 2)
            throw validation_error("cyclic factor order must be >= 2, got " +
                                   std::to_string(n));
        long odd = n;
        int m = 0;
        while (odd % 2 == 0) {
            odd /= 2;
            ++m;
        }
        if (m > 0) g.two_exp_.push_back(m);
        if (odd > 1) g.odd_factors_.push_back(odd);
        if (g.order_ > (1L << 40) / n)
            throw validation_error("group order too large");
        g.order_ *= n;
    }
    return g;
}

bool GroupSpec::is_elementary_abelian_2() const {
    return std::all_of(factors_.begin(), factors_.end(),
                       [](long n) { return n == 2; });
}

std::string GroupSpec::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << 'x';
        os << 'Z' << factors_[i];
    }
    return os.str();
}

std::string to_string(const GroupSpec& g, const Element& e) {
    std::ostringstream os;
    if (g.rank() == 1) {
        os << e.residues[0];
    } else {
        os << '(';
        for (std::size_t i = 0; i < e.residues.size(); ++i) {
            if (i) os << ',';
            os << e.residues[i];
        }
        os << ')';
    }
    return os.str();
}

ElementSet::ElementSet(std::vector<Element> items) : items_(std::move(items)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool ElementSet::contains(const Element& e) const {
    return std::binary_search(items_.begin(), items_.end(), e);
}

void ElementSet::insert(const Element& e) {
    auto it = std::lower_bound(items_.begin(), items_.end(), e);
    if (it == items_.end() || *it != e) items_.insert(it, e);
}

bool is_valid(const GroupSpec& g, const Element& e) {
    if (e.residues.size() != g.rank()) return false;
    for (std::size_t j = 0; j < g.rank(); ++j)
        if (e.residues[j] < 0 || e.residues[j] >= g.factor_orders()[j])
            return false;
    return true;
}

void require_valid(const GroupSpec& g, const Element& e) {
    if (e.residues.size() != g.rank())
        throw structural_error("element has " +
                               std::to_string(e.residues.size()) +
                               " residues but group " + g.to_string() +
                               " has rank " + std::to_string(g.rank()));
    if (!is_valid(g, e))
        throw structural_error("element " + to_string(g, e) +
                               " out of range for " + g.to_string());
}

Element zero(const GroupSpec& g) {
    return Element(std::vector<long>(g.rank(), 0));
}

Element add(const GroupSpec& g, const Element& a, const Element& b) {
    require_valid(g, a);
    require_valid(g, b);
    Element r = a;
    for (std::size_t j = 0; j < g.rank(); ++j)
        r.residues[j] = (a.residues[j] + b.residues[j]) % g.factor_orders()[j];
    return r;
}

Element negate(const GroupSpec& g, const Element& a) {
    require_valid(g, a);
    Element r = a;
    for (std::size_t j = 0; j < g.rank(); ++j)
        r.residues[j] = (g.factor_orders()[j] - a.residues[j]) %
                        g.factor_orders()[j];
    return r;
}

Element subtract(const GroupSpec& g, const Element& a, const Element& b) {
    return add(g, a, negate(g, b));
}

Element doubled(const GroupSpec& g, const Element& a) { return add(g, a, a); }

Element scalar_multiple(const GroupSpec& g, long k, const Element& a) {
    require_valid(g, a);
    Element r = a;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        long n = g.factor_orders()[j];
        long kk = ((k % n) + n) % n;
        r.residues[j] = (a.residues[j] * kk) % n;
    }
    return r;
}

long element_order(const GroupSpec& g, const Element& a) {
    require_valid(g, a);
    long ord = 1;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        long n = g.factor_orders()[j];
        long oj = n / std::gcd(n, a.residues[j]);
        ord = std::lcm(ord, oj);
    }
    return ord;
}

std::vector<Element> all_elements(const GroupSpec& g) {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    Element cur = zero(g);
    while (true) {
        out.push_back(cur);
        // mixed-radix increment, last coordinate fastest
        std::size_t j = g.rank();
        while (j > 0) {
            --j;
            if (++cur.residues[j] < g.factor_orders()[j]) break;
            cur.residues[j] = 0;
            if (j == 0) return out;
        }
    }
}

bool is_square(const GroupSpec& g, const Element& a) {
    require_valid(g, a);
    for (std::size_t j = 0; j < g.rank(); ++j)
        if (g.factor_orders()[j] % 2 == 0 && a.residues[j] % 2 != 0)
            return false;
    return true;
}

namespace {

Subgroup make_subgroup(const GroupSpec& g, ElementSet gens, ElementSet elems) {
    Subgroup h;
    h.generators = std::move(gens);
    h.elements = std::move(elems);
    h.index = g.order() / static_cast<long>(h.elements.size());
    return h;
}

ElementSet closure(const GroupSpec& g, const ElementSet& gens) {
    std::set<Element> seen{zero(g)};
    std::queue<Element> work;
    work.push(zero(g));
    while (!work.empty()) {
        Element e = work.front();
        work.pop();
        for (const Element& s : gens) {
            Element next = add(g, e, s);
            if (seen.insert(next).second) work.push(next);
        }
    }
    return ElementSet(std::vector<Element>(seen.begin(), seen.end()));
}

}  // namespace

Subgroup squares_subgroup(const GroupSpec& g) {
    std::set<Element> sq;
    for (const Element& a : all_elements(g)) sq.insert(doubled(g, a));
    std::vector<Element> gens;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        Element e = zero(g);
        e.residues[j] = 2 % g.factor_orders()[j];
        if (e != zero(g)) gens.push_back(e);
    }
    return make_subgroup(g, ElementSet(std::move(gens)),
                         ElementSet(std::vector<Element>(sq.begin(), sq.end())));
}

std::pair<Subgroup, Subgroup> decompose_2_and_odd(const GroupSpec& g) {
    std::vector<Element> two, odd;
    for (const Element& a : all_elements(g)) {
        long ord = element_order(g, a);
        if ((ord & (ord - 1)) == 0)
            two.push_back(a);  // order a power of two (incl. identity)
        if (ord % 2 == 1) odd.push_back(a);
    }
    Subgroup a2 = make_subgroup(g, ElementSet(two), ElementSet(two));
    Subgroup a2p = make_subgroup(g, ElementSet(odd), ElementSet(odd));
    return {std::move(a2), std::move(a2p)};
}

Subgroup subgroup_generate(const GroupSpec& g, const ElementSet& gens) {
    for (const Element& e : gens) require_valid(g, e);
    return make_subgroup(g, gens, closure(g, gens));
}

void require_subgroup(const GroupSpec& g, const Subgroup& h) {
    if (h.elements.empty() || !h.elements.contains(zero(g)))
        throw structural_error("subgroup must contain the identity");
    for (const Element& a : h.elements) {
        if (!h.elements.contains(negate(g, a)))
            throw structural_error("set not closed under negation");
        for (const Element& b : h.elements)
            if (!h.elements.contains(add(g, a, b)))
                throw structural_error("set not closed under addition");
    }
    if (g.order() % static_cast<long>(h.elements.size()) != 0 ||
        h.index * static_cast<long>(h.elements.size()) != g.order())
        throw structural_error("subgroup index inconsistent with its size");
}

std::vector<Subgroup> all_subgroups(const GroupSpec& g, long bound) {
    if (g.order() > bound)
        throw resource_error("subgroup enumeration bound " +
                             std::to_string(bound) + " exceeded by |A| = " +
                             std::to_string(g.order()));
    // Cyclic subgroups first, then breadth-first closure under joins.
    std::map<ElementSet, ElementSet> found;  // elements -> generators
    ElementSet trivial(std::vector<Element>{zero(g)});
    found.emplace(trivial, ElementSet());
    std::vector<std::pair<Element, ElementSet>> cyclic;
    for (const Element& a : all_elements(g)) {
        Subgroup c = subgroup_generate(g, ElementSet({a}));
        if (found.emplace(c.elements, c.generators).second)
            cyclic.emplace_back(a, c.elements);
    }
    std::queue<ElementSet> work;
    for (const auto& [elems, gens] : found) work.push(elems);
    while (!work.empty()) {
        ElementSet base = work.front();
        work.pop();
        const ElementSet& base_gens = found.at(base);
        for (const auto& [gen, celems] : cyclic) {
            if (base.contains(gen)) continue;
            ElementSet gens = base_gens;
            gens.insert(gen);
            ElementSet join = closure(g, gens);
            if (found.emplace(join, gens).second) work.push(join);
        }
    }
    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& [elems, gens] : found)
        out.push_back(make_subgroup(g, gens, elems));
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.elements.size() != b.elements.size())
            return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    return out;
}

CosetDecomposition cosets_and_transversal(const GroupSpec& g,
                                          const Subgroup& h) {
    require_subgroup(g, h);
    CosetDecomposition out;
    std::set<Element> assigned;
    for (const Element& a : all_elements(g)) {
        if (assigned.count(a)) continue;
        std::vector<Element> coset;
        coset.reserve(h.elements.size());
        for (const Element& x : h.elements) coset.push_back(add(g, a, x));
        ElementSet cs(std::move(coset));
        for (const Element& e : cs) assigned.insert(e);
        out.transversal.insert(cs[0]);  // lex scan makes a the least element
        out.cosets.push_back(std::move(cs));
    }
    return out;
}

std::vector<long> invariant_factors(const GroupSpec& g, const Subgroup& h) {
    require_subgroup(g, h);
    std::vector<long> orders;
    orders.reserve(h.elements.size());
    for (const Element& a : h.elements) orders.push_back(element_order(g, a));
    long n = static_cast<long>(h.elements.size());
    std::vector<long> divisors;
    for (long p = 2; p <= n; ++p) {
        if (n % p != 0) continue;
        bool prime = true;
        for (long q = 2; q * q <= p; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        // c_k = #{x in h : p^k x = 0}; d_k = log_p(c_k / c_{k-1}) counts the
        // cyclic p-factors of exponent >= k.
        std::vector<long> d;
        long prev = 1;
        for (long pk = p;; pk *= p) {
            long c = static_cast<long>(std::count_if(
                orders.begin(), orders.end(),
                [pk](long o) { return pk % o == 0; }));
            if (c == prev) break;
            long dk = 0;
            for (long q = prev; q < c; q *= p) ++dk;
            d.push_back(dk);
            prev = c;
        }
        for (std::size_t k = 0; k < d.size(); ++k) {
            long next = (k + 1 < d.size()) ? d[k + 1] : 0;
            long pk = 1;
            for (std::size_t i = 0; i <= k; ++i) pk *= p;
            for (long c = 0; c < d[k] - next; ++c) divisors.push_back(pk);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

bool is_inverse_closed(const GroupSpec& g, const ElementSet& x) {
    for (const Element& a : x)
        if (!x.contains(negate(g, a))) return false;
    return true;
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& k) {
    return std::all_of(h.elements.begin(), h.elements.end(),
                       [&](const Element& e) { return k.elements.contains(e); });
}

}  // namespace caysum
