#pragma once

#include <string>
#include <vector>

namespace kfd {

// Multiset of cycle lengths of a permutation, kept sorted descending.
// index() is the degree minus the number of cycles (fixed points count
// as cycles of length 1).
class CycleType {
  public:
    CycleType() = default;
    explicit CycleType(std::vector<int> lengths);

    int degree() const { return degree_; }
    int count() const { return static_cast<int>(lengths_.size()); }
    int index() const { return degree_ - count(); }
    bool is_even() const { return index() % 2 == 0; }
    // Order of any permutation with this cycle type (lcm of the lengths).
    long long order() const;
    const std::vector<int>& lengths() const { return lengths_; }

    bool operator==(const CycleType&) const = default;
    bool operator<(const CycleType& o) const;
    std::string to_string() const;  // "[2,1,1]"

  private:
    std::vector<int> lengths_;
    int degree_ = 0;
};

// Cycle type of (x, y) acting on the product of the two underlying sets:
// each pair of cycle lengths (e, f) contributes gcd(e,f) cycles of length
// lcm(e,f).
CycleType product_cycle_type(const CycleType& x, const CycleType& y);

// Cycle type of a k-th power: a cycle of length l splits into gcd(l,k)
// cycles of length l/gcd(l,k).
CycleType power_cycle_type(const CycleType& ct, long long k);

// A permutation of {1..n}. Stored 0-based internally; all text I/O is 1-based.
// Products compose left-to-right: (a*b)(x) = b(a(x)).
class Perm {
  public:
    Perm() = default;
    static Perm identity(int n);
    // images[i] = image of point i+1, as 1-based values.
    static Perm from_images(const std::vector<int>& images);
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    // 1-based application.
    int apply(int point) const { return img_[point - 1] + 1; }
    bool is_identity() const;
    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    Perm pow(long long k) const;
    bool operator==(const Perm&) const = default;
    bool operator<(const Perm& o) const { return img_ < o.img_; }

    std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, 1-based
    CycleType cycle_type() const;
    int index() const;
    bool is_even() const { return index() % 2 == 0; }
    // smallest moved point (1-based), or 0 for the identity
    int first_moved() const;

    std::string to_cycle_string() const;  // "(1 2)(3 4 5)", "()" for identity
    std::string to_image_string() const;  // "[2,1,4,5,3]"

  private:
    std::vector<int> img_;
};

// Accepts cycle notation "(1 2)(3 4 5)" (degree required) or image notation
// "[2,1,4,5,3]" (degree optional, checked when given).
Perm parse_perm(const std::string& text, int degree = 0);

}  // namespace kfd
