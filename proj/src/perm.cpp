#include "kfd/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kfd {

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    for (int l : lengths_) {
        if (l <= 0) throw std::invalid_argument("cycle length must be positive");
        degree_ += l;
    }
    std::sort(lengths_.begin(), lengths_.end(), std::greater<int>());
}

long long CycleType::order() const {
    long long m = 1;
    for (int l : lengths_) m = std::lcm(m, static_cast<long long>(l));
    return m;
}

bool CycleType::operator<(const CycleType& o) const {
    if (degree_ != o.degree_) return degree_ < o.degree_;
    return lengths_ < o.lengths_;
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < lengths_.size(); ++i) {
        if (i) os << ',';
        os << lengths_[i];
    }
    os << ']';
    return os.str();
}

CycleType product_cycle_type(const CycleType& x, const CycleType& y) {
    std::vector<int> out;
    for (int e : x.lengths())
        for (int f : y.lengths()) {
            int g = std::gcd(e, f);
            int l = e / g * f;
            for (int i = 0; i < g; ++i) out.push_back(l);
        }
    return CycleType(out);
}

CycleType power_cycle_type(const CycleType& ct, long long k) {
    if (k <= 0) throw std::invalid_argument("power_cycle_type needs k >= 1");
    std::vector<int> out;
    for (int l : ct.lengths()) {
        long long g = std::gcd(static_cast<long long>(l), k);
        for (long long i = 0; i < g; ++i) out.push_back(static_cast<int>(l / g));
    }
    return CycleType(out);
}

Perm Perm::identity(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    Perm p;
    p.img_.resize(n);
    std::iota(p.img_.begin(), p.img_.end(), 0);
    return p;
}

Perm Perm::from_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    Perm p;
    p.img_.resize(n);
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        int v = images[i];
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("not a bijection of {1..n}");
        seen[v - 1] = true;
        p.img_[i] = v - 1;
    }
    return p;
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity(n);
    std::vector<bool> used(n, false);
    for (const auto& cyc : cycles) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            int a = cyc[i], b = cyc[(i + 1) % cyc.size()];
            if (a < 1 || a > n) throw std::invalid_argument("cycle entry out of range");
            if (used[a - 1]) throw std::invalid_argument("point repeated in cycles");
            used[a - 1] = true;
            p.img_[a - 1] = b - 1;
        }
    }
    // validate bijection (catches malformed overlapping cycles)
    std::vector<bool> seen(n, false);
    for (int v : p.img_) {
        if (seen[v]) throw std::invalid_argument("cycles do not define a permutation");
        seen[v] = true;
    }
    return p;
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::operator*(const Perm& rhs) const {
    if (degree() != rhs.degree()) throw std::invalid_argument("degree mismatch in product");
    Perm p;
    p.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) p.img_[i] = rhs.img_[img_[i]];
    return p;
}

Perm Perm::inverse() const {
    Perm p;
    p.img_.resize(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) p.img_[img_[i]] = static_cast<int>(i);
    return p;
}

Perm Perm::pow(long long k) const {
    Perm base = k >= 0 ? *this : inverse();
    unsigned long long e = k >= 0 ? static_cast<unsigned long long>(k)
                                  : static_cast<unsigned long long>(-(k + 1)) + 1;
    Perm acc = identity(degree());
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::vector<std::vector<int>> Perm::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == static_cast<int>(i)) continue;
        std::vector<int> cyc;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            cyc.push_back(static_cast<int>(j) + 1);
            j = static_cast<size_t>(img_[j]);
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

CycleType Perm::cycle_type() const {
    std::vector<int> lens;
    std::vector<bool> seen(img_.size(), false);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            ++len;
            j = static_cast<size_t>(img_[j]);
        }
        lens.push_back(len);
    }
    return CycleType(lens);
}

int Perm::index() const { return cycle_type().index(); }

int Perm::first_moved() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return i + 1;
    return 0;
}

std::string Perm::to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (size_t i = 0; i < c.size(); ++i) {
            if (i) os << ' ';
            os << c[i];
        }
        os << ')';
    }
    return os.str();
}

std::string Perm::to_image_string() const {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < img_.size(); ++i) {
        if (i) os << ',';
        os << img_[i] + 1;
    }
    os << ']';
    return os.str();
}

Perm parse_perm(const std::string& text, int degree) {
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected integer in permutation: " + text);
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    if (pos < text.size() && text[pos] == '[') {
        ++pos;
        std::vector<int> images;
        skip_ws();
        if (pos < text.size() && text[pos] == ']') {
            ++pos;
        } else {
            for (;;) {
                images.push_back(read_int());
                skip_ws();
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                if (pos < text.size() && text[pos] == ']') {
                    ++pos;
                    break;
                }
                throw std::invalid_argument("malformed image notation: " + text);
            }
        }
        if (degree && degree != static_cast<int>(images.size()))
            throw std::invalid_argument("permutation degree mismatch");
        return Perm::from_images(images);
    }
    if (pos < text.size() && text[pos] == '(') {
        if (!degree) throw std::invalid_argument("cycle notation needs an explicit degree");
        std::vector<std::vector<int>> cycles;
        while (pos < text.size()) {
            skip_ws();
            if (pos >= text.size()) break;
            if (text[pos] != '(') throw std::invalid_argument("malformed cycle notation: " + text);
            ++pos;
            std::vector<int> cyc;
            for (;;) {
                skip_ws();
                if (pos < text.size() && text[pos] == ')') {
                    ++pos;
                    break;
                }
                if (pos < text.size() && text[pos] == ',') {
                    ++pos;
                    continue;
                }
                cyc.push_back(read_int());
            }
            if (cyc.size() > 1) cycles.push_back(std::move(cyc));
            skip_ws();
        }
        return Perm::from_cycles(degree, cycles);
    }
    throw std::invalid_argument("unrecognized permutation syntax: " + text);
}

}  // namespace kfd
