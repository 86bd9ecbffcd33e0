#include "egypt/rational.hpp"

#include <algorithm>
#include <cctype>

namespace egypt {

namespace {

Int parse_int(const std::string& text) {
    if (text.empty())
        throw std::domain_error("empty integer text");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) &&
            !(c == '-' && &c == text.data()))
            throw std::domain_error("malformed integer: '" + text + "'");
    return Int(text);
}

}  // namespace

std::string Rational::str() const {
    if (den_ == 1) return num_.get_str();
    return num_.get_str() + "/" + den_.get_str();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        return Rational(parse_int(text));
    Int n = parse_int(text.substr(0, slash));
    Int d = parse_int(text.substr(slash + 1));
    return Rational(std::move(n), std::move(d));
}

EgyptianRepr::EgyptianRepr(std::vector<Int> denominators)
    : dens_(std::move(denominators)) {
    for (std::size_t i = 0; i < dens_.size(); ++i) {
        if (dens_[i] < 2)
            throw std::domain_error("EgyptianRepr: denominator must be >= 2");
        if (i > 0 && dens_[i] <= dens_[i - 1])
            throw std::domain_error(
                "EgyptianRepr: denominators must be strictly increasing");
    }
}

EgyptianRepr::EgyptianRepr(std::initializer_list<long> denominators) {
    std::vector<Int> v;
    v.reserve(denominators.size());
    for (long d : denominators) v.emplace_back(d);
    *this = EgyptianRepr(std::move(v));
}

bool EgyptianRepr::contains(const Int& d) const {
    return std::binary_search(dens_.begin(), dens_.end(), d);
}

void EgyptianRepr::insert(const Int& d) {
    if (d < 2)
        throw std::domain_error("EgyptianRepr: denominator must be >= 2");
    auto it = std::lower_bound(dens_.begin(), dens_.end(), d);
    if (it != dens_.end() && *it == d)
        throw std::domain_error("EgyptianRepr: duplicate denominator " +
                                d.get_str());
    dens_.insert(it, d);
}

void EgyptianRepr::erase(const Int& d) {
    auto it = std::lower_bound(dens_.begin(), dens_.end(), d);
    if (it == dens_.end() || *it != d)
        throw std::domain_error("EgyptianRepr: denominator " + d.get_str() +
                                " not present");
    dens_.erase(it);
}

std::string EgyptianRepr::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < dens_.size(); ++i) {
        if (i) out += ",";
        out += dens_[i].get_str();
    }
    out += "]";
    return out;
}

EgyptianRepr EgyptianRepr::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::domain_error("EgyptianRepr: expected \"[d1,d2,...]\"");
    std::vector<Int> dens;
    std::string body = text.substr(1, text.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
        auto comma = body.find(',', pos);
        if (comma == std::string::npos) comma = body.size();
        dens.push_back(parse_int(body.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return EgyptianRepr(std::move(dens));
}

namespace {

// Balanced pairwise summation: keeps intermediate denominators near the
// size of the final one instead of rebuilding a huge denominator on every
// step of a linear fold.
Rational sum_range(const std::vector<Int>& dens, std::size_t lo,
                   std::size_t hi) {
    if (hi - lo == 1) return Rational::unit(dens[lo]);
    std::size_t mid = lo + (hi - lo) / 2;
    return sum_range(dens, lo, mid) + sum_range(dens, mid, hi);
}

}  // namespace

Rational repr_sum(const EgyptianRepr& x) {
    if (x.empty())
        throw std::domain_error("repr_sum: representation must be nonempty");
    return sum_range(x.denominators(), 0, x.size());
}

bool ParityVector::all_odd() const {
    return std::all_of(parities_.begin(), parities_.end(),
                       [](Parity p) { return p == Parity::odd; });
}

bool ParityVector::all_same() const {
    return parities_.empty() ||
           std::all_of(parities_.begin(), parities_.end(),
                       [&](Parity p) { return p == parities_.front(); });
}

std::string ParityVector::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parities_.size(); ++i) {
        if (i) out += ",";
        out += parities_[i] == Parity::odd ? "o" : "e";
    }
    out += ")";
    return out;
}

ParityVector parity_signature(std::span<const Int> terms) {
    std::vector<Parity> p;
    p.reserve(terms.size());
    for (const Int& t : terms) {
        if (t < 1)
            throw std::domain_error("parity_signature: terms must be >= 1");
        p.push_back(parity_of(t));
    }
    return ParityVector(std::move(p));
}

}  // namespace egypt
