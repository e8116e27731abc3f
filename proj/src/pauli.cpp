#include "switchsim/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace switchsim {

namespace {

void check_same_size(const PauliString& a, const PauliString& b) {
    if (a.n() != b.n()) {
        throw std::invalid_argument("Pauli length mismatch: " + std::to_string(a.n()) + " vs " +
                                    std::to_string(b.n()));
    }
}

}  // namespace

std::complex<double> PauliString::phase() const {
    switch (k_) {
        case 0: return {1, 0};
        case 1: return {0, 1};
        case 2: return {-1, 0};
        default: return {0, -1};
    }
}

char PauliString::pauli_at(int q) const {
    bool x = x_bit(q), z = z_bit(q);
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

void PauliString::set(int q, char p) {
    if (q < 0 || q >= n_) throw std::invalid_argument("qubit index out of range");
    // Clear any existing factor first (only valid on fresh slots in practice).
    x_ &= ~(1u << q);
    z_ &= ~(1u << q);
    switch (p) {
        case 'I': break;
        case 'X': x_ |= 1u << q; break;
        case 'Z': z_ |= 1u << q; break;
        case 'Y':
            x_ |= 1u << q;
            z_ |= 1u << q;
            k_ = (k_ + 1) & 3;
            break;
        default: throw std::invalid_argument("unknown Pauli letter");
    }
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

PauliString& PauliString::operator*=(const PauliString& rhs) {
    check_same_size(*this, rhs);
    // (X^x1 Z^z1)(X^x2 Z^z2) = (-1)^{|z1 & x2|} X^{x1^x2} Z^{z1^z2}
    int swaps = std::popcount(z_ & rhs.x_);
    k_ = (k_ + rhs.k_ + 2 * (swaps & 1)) & 3;
    x_ ^= rhs.x_;
    z_ ^= rhs.z_;
    return *this;
}

bool PauliString::commutes_with(const PauliString& other) const {
    check_same_size(*this, other);
    int s = std::popcount(x_ & other.z_) + std::popcount(z_ & other.x_);
    return (s & 1) == 0;
}

PauliString PauliString::remap(int new_n, std::span<const int> qubit_map) const {
    if (static_cast<int>(qubit_map.size()) != n_) {
        throw std::invalid_argument("qubit map size mismatch");
    }
    PauliString out(new_n);
    out.k_ = k_;
    for (int q = 0; q < n_; ++q) {
        int t = qubit_map[q];
        if (t < 0 || t >= new_n) throw std::invalid_argument("qubit map target out of range");
        out.x_ |= static_cast<uint32_t>(x_bit(q)) << t;
        out.z_ |= static_cast<uint32_t>(z_bit(q)) << t;
    }
    return out;
}

namespace {

// Phase prefix relative to the Hermitian Pauli letters: P = i^k X^x Z^z with
// XZ = -iY, so the displayed factor is i^(k - #Y).
int display_exponent(const PauliString& p) {
    int y_count = std::popcount(p.x_mask() & p.z_mask());
    return ((p.phase_exponent() - y_count) % 4 + 4) % 4;
}

}  // namespace

std::string PauliString::str() const {
    std::string out;
    switch (display_exponent(*this)) {
        case 0: out = "+"; break;
        case 1: out = "i"; break;
        case 2: out = "-"; break;
        default: out = "-i"; break;
    }
    for (int q = 0; q < n_; ++q) out.push_back(pauli_at(q));
    return out;
}

std::string PauliString::sparse_str() const {
    std::string sign;
    switch (display_exponent(*this)) {
        case 0: sign = ""; break;
        case 1: sign = "i"; break;
        case 2: sign = "-"; break;
        default: sign = "-i"; break;
    }
    std::string body;
    for (int q = 0; q < n_; ++q) {
        char p = pauli_at(q);
        if (p == 'I') continue;
        if (!body.empty()) body.push_back('.');
        body.push_back(p);
        body += std::to_string(q + 1);
    }
    if (body.empty()) body = "I";
    return sign + body;
}

PauliString PauliString::parse(const std::string& text) {
    size_t pos = 0;
    int k = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') k = 2;
        ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
        k = (k + 1) & 3;
        ++pos;
    }
    PauliString out(static_cast<int>(text.size() - pos));
    out.k_ = k;  // set() folds the i-per-Y factors on top of this
    for (int q = 0; pos < text.size(); ++pos, ++q) out.set(q, text[pos]);
    return out;
}

PauliString PauliString::from_sparse(int n, const std::string& text) {
    PauliString out(n);
    size_t pos = 0;
    if (text.compare(0, 2, "-i") == 0) {
        out.k_ = 3;
        pos = 2;
    } else if (!text.empty() && text[0] == '-') {
        out.k_ = 2;
        pos = 1;
    } else if (!text.empty() && text[0] == 'i') {
        out.k_ = 1;
        pos = 1;
    }
    if (text.compare(pos, std::string::npos, "I") == 0) return out;
    while (pos < text.size()) {
        char p = text[pos++];
        size_t start = pos;
        while (pos < text.size() && isdigit(text[pos])) ++pos;
        if (start == pos) throw std::invalid_argument("bad sparse Pauli: " + text);
        int q = std::stoi(text.substr(start, pos - start)) - 1;
        if (q < 0 || q >= n) throw std::invalid_argument("sparse Pauli qubit out of range: " + text);
        out.set(q, p);
        if (pos < text.size()) {
            if (text[pos] != '.') throw std::invalid_argument("bad sparse Pauli: " + text);
            ++pos;
        }
    }
    return out;
}

PauliString PauliString::from_masks(int n, uint32_t x, uint32_t z, int k) {
    PauliString out(n);
    out.x_ = x;
    out.z_ = z;
    out.k_ = k & 3;
    return out;
}

PauliString single_pauli(int n, int q, char p) {
    PauliString out(n);
    out.set(q, p);
    return out;
}

std::vector<int> syndrome_of(const PauliString& error, std::span<const PauliString> generators) {
    std::vector<int> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(error.commutes_with(g) ? 0 : 1);
    return out;
}

bool PauliGroup::is_valid_stabilizer_group() const {
    const size_t k = generators.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            if (!generators[i].commutes_with(generators[j])) return false;
        }
    }
    if (k > 20) throw std::length_error("stabilizer group too large for subset check");
    // -I is in the group iff some subset product has trivial support and phase -1.
    for (uint32_t mask = 1; mask < (1u << k); ++mask) {
        PauliString prod = PauliString::identity(generators.empty() ? 0 : generators[0].n());
        for (size_t i = 0; i < k; ++i) {
            if ((mask >> i) & 1) prod *= generators[i];
        }
        if (prod.is_identity() && prod.phase_exponent() != 0) return false;
    }
    return true;
}

}  // namespace switchsim
