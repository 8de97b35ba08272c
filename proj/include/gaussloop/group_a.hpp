#ifndef GAUSSLOOP_GROUP_A_HPP
#define GAUSSLOOP_GROUP_A_HPP

#include <algorithm>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace gaussloop {

// Element of the group A, stored through the isomorphism with the direct sum of
// copies of Z/2: the support is the set of coordinates holding a one.
class AElement {
public:
    AElement() = default;
    explicit AElement(std::set<int> support) : support_(std::move(support)) {}
    AElement(std::initializer_list<int> coords) : support_(coords) {}

    const std::set<int>& support() const { return support_; }
    bool is_identity() const { return support_.empty(); }
    std::vector<int> coords() const { return {support_.begin(), support_.end()}; }

    AElement& operator*=(const AElement& o) {
        for (int c : o.support_)
            if (!support_.erase(c)) support_.insert(c);
        return *this;
    }
    friend AElement operator*(AElement a, const AElement& b) { return a *= b; }
    bool operator==(const AElement&) const = default;

    // product of interval generators over maximal runs of ones
    std::string str() const {
        if (support_.empty()) return "1";
        std::string out;
        auto it = support_.begin();
        while (it != support_.end()) {
            int lo = *it, hi = *it;
            ++it;
            while (it != support_.end() && *it == hi + 1) hi = *it++;
            out += "A_{" + std::to_string(lo) + "," + std::to_string(hi + 1) + "}";
        }
        return out;
    }

private:
    std::set<int> support_;
};

// A_{ij}: ones in coordinates min(i,j) .. max(i,j)-1
inline AElement generator(int i, int j) {
    std::set<int> s;
    for (int c = std::min(i, j); c < std::max(i, j); ++c) s.insert(c);
    return AElement(std::move(s));
}

inline AElement multiply(const AElement& x, const AElement& y) { return x * y; }

// coordinate i -> i-1
inline AElement shift(const AElement& x) {
    std::set<int> s;
    for (int c : x.support()) s.insert(c - 1);
    return AElement(std::move(s));
}

// coordinate i -> -i-1, the image of A_{ij} -> A_{-i,-j}
inline AElement reflect(const AElement& x) {
    std::set<int> s;
    for (int c : x.support()) s.insert(-c - 1);
    return AElement(std::move(s));
}

enum class Parity { even, odd };

inline Parity support_parity(const AElement& x) { return x.support().size() % 2 ? Parity::odd : Parity::even; }

}  // namespace gaussloop

#endif
