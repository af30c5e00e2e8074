#include "qgl/tensorspace.hpp"

namespace qgl {

BasisIndex::BasisIndex(SuperDim dm, int kk, int ll) : dims(dm), k(kk), l(ll) {
    if (k < 0 || l < 0) throw Error("BasisIndex: negative tensor degree");
    if (dims.r < 0 || dims.s < 0 || dims.d() < 1) throw Error("BasisIndex: bad super dimension");
}

long long BasisIndex::size() const {
    long long n = 1;
    for (int i = 0; i < legs(); ++i) n *= dims.d();
    return n;
}

int BasisIndex::letter(long long idx, int leg) const {
    long long stride = 1;
    for (int i = leg + 1; i < legs(); ++i) stride *= dims.d();
    return static_cast<int>((idx / stride) % dims.d());
}

std::vector<int> BasisIndex::letters(long long idx) const {
    std::vector<int> ls(static_cast<size_t>(legs()));
    for (int i = legs() - 1; i >= 0; --i) {
        ls[static_cast<size_t>(i)] = static_cast<int>(idx % dims.d());
        idx /= dims.d();
    }
    return ls;
}

long long BasisIndex::index_of(const std::vector<int>& ls) const {
    if (static_cast<int>(ls.size()) != legs()) throw Error("BasisIndex: wrong letter count");
    long long idx = 0;
    for (int v : ls) {
        if (v < 0 || v >= dims.d()) throw Error("BasisIndex: letter out of range");
        idx = idx * dims.d() + v;
    }
    return idx;
}

int BasisIndex::parity(long long idx) const {
    int p = 0;
    for (int i = 0; i < legs(); ++i) p += dims.parity(letter(idx, i));
    return p & 1;
}

Weight BasisIndex::weight(long long idx) const {
    Weight w(static_cast<size_t>(dims.d()), 0);
    for (int i = 0; i < legs(); ++i) {
        int v = letter(idx, i);
        w[static_cast<size_t>(v)] += (i < k) ? 1 : -1;
    }
    return w;
}

std::string BasisIndex::name(long long idx) const {
    std::string cov, con;
    for (int i = 0; i < legs(); ++i) {
        int v = letter(idx, i) + 1;
        if (i < k) {
            if (!cov.empty()) cov += ".";
            cov += "x" + std::to_string(v);
        } else {
            if (!con.empty()) con += ".";
            con += "xi" + std::to_string(v);
        }
    }
    if (cov.empty() && con.empty()) return "1";
    if (con.empty()) return cov;
    if (cov.empty()) return "|" + con;
    return cov + "|" + con;
}

BasisIndex tensor_basis(SuperDim dims, int k, int l) { return BasisIndex(dims, k, l); }

}  // namespace qgl
