#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qrlab/groups.hpp"

namespace qrlab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int v : img_) {
        if (v < 0 || v >= int(img_.size()) || seen[v])
            throw std::invalid_argument("images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
    return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation r;
    r.img_.resize(a.img_.size());
    for (int i = 0; i < a.degree(); ++i) r.img_[i] = a.img_[b.img_[i]];
    return r;
}

std::vector<Permutation> read_permutations(std::istream& in, int degree) {
    std::vector<Permutation> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::vector<int> img;
        int v;
        while (row >> v) img.push_back(v);
        if (int(img.size()) != degree)
            throw std::runtime_error("permutation degree mismatch");
        out.emplace_back(std::move(img));  // constructor validates bijectivity
    }
    return out;
}

void write_permutations(std::ostream& out, const std::vector<Permutation>& perms) {
    for (const auto& p : perms) {
        for (int i = 0; i < p.degree(); ++i) out << (i ? " " : "") << p(i);
        out << "\n";
    }
}

}  // namespace qrlab
