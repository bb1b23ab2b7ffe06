#include "lca/modelem.hpp"

#include <sstream>
#include <stdexcept>

namespace lca {

ModElem ModElem::basis(int rank, int index) {
    ModElem v(rank);
    v.coords[index] = Poly(1);
    return v;
}

bool ModElem::is_zero() const {
    for (const auto &p : coords)
        if (!p.is_zero())
            return false;
    return true;
}

ModElem ModElem::operator-() const {
    ModElem r(rank());
    for (int i = 0; i < rank(); ++i)
        r.coords[i] = -coords[i];
    return r;
}

ModElem &ModElem::operator+=(const ModElem &o) {
    if (rank() != o.rank())
        throw std::invalid_argument("rank mismatch in ModElem addition");
    for (int i = 0; i < rank(); ++i)
        coords[i] += o.coords[i];
    return *this;
}

ModElem &ModElem::operator-=(const ModElem &o) {
    if (rank() != o.rank())
        throw std::invalid_argument("rank mismatch in ModElem subtraction");
    for (int i = 0; i < rank(); ++i)
        coords[i] -= o.coords[i];
    return *this;
}

ModElem ModElem::operator+(const ModElem &o) const {
    ModElem r(*this);
    r += o;
    return r;
}

ModElem ModElem::operator-(const ModElem &o) const {
    ModElem r(*this);
    r -= o;
    return r;
}

ModElem ModElem::scaled(const Poly &p) const {
    ModElem r(rank());
    for (int i = 0; i < rank(); ++i)
        r.coords[i] = coords[i] * p;
    return r;
}

ModElem ModElem::subst(const std::map<int, Poly> &bindings) const {
    ModElem r(rank());
    for (int i = 0; i < rank(); ++i)
        r.coords[i] = coords[i].subst(bindings);
    return r;
}

int ModElem::max_lambda() const {
    int k = 0;
    for (const auto &p : coords)
        k = std::max(k, p.max_lambda());
    return k;
}

std::string ModElem::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rank(); ++i) {
        if (i)
            os << ", ";
        os << coords[i].to_string();
    }
    os << "]";
    return os.str();
}

ConformalMap ConformalMap::identity(int n) {
    ConformalMap m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Poly(1);
    return m;
}

ConformalMap ConformalMap::zero(int r, int c) { return ConformalMap(r, c); }

ConformalMap ConformalMap::scalar(int n, const Rat &c) {
    ConformalMap m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = Poly(c);
    return m;
}

bool ConformalMap::is_zero() const {
    for (const auto &p : entries)
        if (!p.is_zero())
            return false;
    return true;
}

bool ConformalMap::d_only() const {
    for (const auto &p : entries)
        if (p.max_lambda() > 0)
            return false;
    return true;
}

bool ConformalMap::operator==(const ConformalMap &o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
}

ModElem ConformalMap::apply(const ModElem &v) const {
    if (v.rank() != cols)
        throw std::invalid_argument("dimension mismatch in ConformalMap::apply");
    ModElem r(rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (!at(i, j).is_zero() && !v.coords[j].is_zero())
                r.coords[i] += at(i, j) * v.coords[j];
    return r;
}

ConformalMap ConformalMap::compose(const ConformalMap &o) const {
    if (cols != o.rows)
        throw std::invalid_argument("dimension mismatch in compose");
    ConformalMap r(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k)
            if (!at(i, k).is_zero())
                for (int j = 0; j < o.cols; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
    return r;
}

ConformalMap ConformalMap::operator+(const ConformalMap &o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("dimension mismatch");
    ConformalMap r(rows, cols);
    for (size_t i = 0; i < entries.size(); ++i)
        r.entries[i] = entries[i] + o.entries[i];
    return r;
}

ConformalMap ConformalMap::operator-(const ConformalMap &o) const {
    if (rows != o.rows || cols != o.cols)
        throw std::invalid_argument("dimension mismatch");
    ConformalMap r(rows, cols);
    for (size_t i = 0; i < entries.size(); ++i)
        r.entries[i] = entries[i] - o.entries[i];
    return r;
}

ConformalMap ConformalMap::operator-() const {
    ConformalMap r(rows, cols);
    for (size_t i = 0; i < entries.size(); ++i)
        r.entries[i] = -entries[i];
    return r;
}

namespace {

Poly det_rec(const ConformalMap &m, std::vector<int> &rows_left,
             std::vector<int> &cols_left) {
    int n = static_cast<int>(rows_left.size());
    if (n == 0)
        return Poly(1);
    if (n == 1)
        return m.at(rows_left[0], cols_left[0]);
    Poly acc;
    int r0 = rows_left[0];
    std::vector<int> rrest(rows_left.begin() + 1, rows_left.end());
    for (int k = 0; k < n; ++k) {
        const Poly &e = m.at(r0, cols_left[k]);
        if (e.is_zero())
            continue;
        std::vector<int> crest;
        crest.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != k)
                crest.push_back(cols_left[j]);
        Poly sub = det_rec(m, rrest, crest);
        if (k % 2 == 0)
            acc += e * sub;
        else
            acc -= e * sub;
    }
    return acc;
}

} // namespace

Poly ConformalMap::determinant() const {
    if (rows != cols)
        throw std::invalid_argument("determinant of non-square map");
    std::vector<int> r(rows), c(cols);
    for (int i = 0; i < rows; ++i)
        r[i] = c[i] = i;
    return det_rec(*this, r, c);
}

bool ConformalMap::inverse(ConformalMap &out) const {
    if (rows != cols)
        return false;
    Poly det = determinant();
    if (!det.is_constant() || det.constant_value() == 0)
        return false;
    Rat inv_det = Rat(1) / det.constant_value();
    int n = rows;
    out = ConformalMap(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            std::vector<int> r, c;
            for (int k = 0; k < n; ++k)
                if (k != j)
                    r.push_back(k);
            for (int k = 0; k < n; ++k)
                if (k != i)
                    c.push_back(k);
            Poly minor = det_rec(*this, r, c);
            Rat sign = ((i + j) % 2 == 0) ? Rat(1) : Rat(-1);
            out.at(i, j) = minor * (sign * inv_det);
        }
    }
    return true;
}

ConformalMap ConformalMap::block(const ConformalMap &a, const ConformalMap &b,
                                 const ConformalMap &c, const ConformalMap &d) {
    if (a.rows != b.rows || c.rows != d.rows || a.cols != c.cols ||
        b.cols != d.cols)
        throw std::invalid_argument("incompatible block dimensions");
    ConformalMap m(a.rows + c.rows, a.cols + b.cols);
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j)
            m.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols; ++j)
            m.at(i, a.cols + j) = b.at(i, j);
    }
    for (int i = 0; i < c.rows; ++i) {
        for (int j = 0; j < c.cols; ++j)
            m.at(a.rows + i, j) = c.at(i, j);
        for (int j = 0; j < d.cols; ++j)
            m.at(a.rows + i, a.cols + j) = d.at(i, j);
    }
    return m;
}

} // namespace lca
