#include "orbloop/finite_group.hpp"

#include "orbloop/field.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace orbloop {

namespace {

void check_associativity(const std::vector<std::vector<int>>& m) {
    const int n = static_cast<int>(m.size());
    if (n <= 256) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    if (m[m[a][b]][c] != m[a][m[b][c]])
                        throw std::invalid_argument("multiplication table is not associative");
        return;
    }
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 10000; ++t) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (m[m[a][b]][c] != m[a][m[b][c]])
            throw std::invalid_argument("multiplication table is not associative");
    }
}

std::vector<std::string> default_labels(int n, int identity) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = "g" + std::to_string(i);
    labels[identity] = "e";
    return labels;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mult,
                                    std::vector<std::string> labels) {
    const int n = static_cast<int>(mult.size());
    if (n == 0) throw std::invalid_argument("empty multiplication table");
    for (const auto& row : mult)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("multiplication table is not square");

    // Latin square: every row and column is a permutation of 0..n-1.
    for (int i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int j = 0; j < n; ++j) {
            int r = mult[i][j], c = mult[j][i];
            if (r < 0 || r >= n || c < 0 || c >= n)
                throw std::invalid_argument("table entry out of range");
            if (seen_row[r] || seen_col[c])
                throw std::invalid_argument("multiplication table is not a Latin square");
            seen_row[r] = seen_col[c] = true;
        }
    }

    int identity = -1;
    for (int e = 0; e < n && identity < 0; ++e) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = mult[e][i] == i && mult[i][e] == i;
        if (ok) identity = e;
    }
    if (identity < 0) throw std::invalid_argument("table has no identity element");

    std::vector<int> inverse(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (mult[i][j] == identity && mult[j][i] == identity) {
                inverse[i] = j;
                break;
            }
        if (inverse[i] < 0) throw std::invalid_argument("element without inverse");
    }

    check_associativity(mult);

    FiniteGroup G;
    G.mult_ = std::move(mult);
    G.identity_ = identity;
    G.inverse_ = std::move(inverse);
    G.labels_ = labels.empty() ? default_labels(n, identity) : std::move(labels);
    if (static_cast<int>(G.labels_.size()) != n)
        throw std::invalid_argument("label count does not match group order");
    G.name_ = "order-" + std::to_string(n) + " group";
    return G;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                           int domain_size, std::size_t cap) {
    if (domain_size < 1) throw std::invalid_argument("permutation domain must be nonempty");
    for (const auto& g : generators) {
        if (static_cast<int>(g.size()) != domain_size)
            throw std::invalid_argument("generator does not permute the stated domain");
        std::vector<bool> seen(domain_size, false);
        for (int v : g) {
            if (v < 0 || v >= domain_size || seen[v])
                throw std::invalid_argument("malformed permutation");
            seen[v] = true;
        }
    }

    Permutation id(domain_size);
    for (int i = 0; i < domain_size; ++i) id[i] = i;

    // (p * q)(i) = q[p[i]]
    auto compose = [](const Permutation& p, const Permutation& q) {
        Permutation r(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
        return r;
    };

    std::vector<Permutation> elements{id};
    std::map<Permutation, int> index{{id, 0}};
    for (std::size_t head = 0; head < elements.size(); ++head) {
        for (const auto& g : generators) {
            Permutation next = compose(elements[head], g);
            if (index.emplace(next, static_cast<int>(elements.size())).second) {
                elements.push_back(std::move(next));
                if (elements.size() > cap) throw std::runtime_error("group too large");
            }
        }
    }

    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            mult[a][b] = index.at(compose(elements[a], elements[b]));

    FiniteGroup G = from_table(std::move(mult));
    G.name_ = "permutation group of order " + std::to_string(n);
    return G;
}

FiniteGroup FiniteGroup::special_linear_2(std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("matrix group requires a prime modulus");
    if (p > 31) throw std::invalid_argument("matrix enumeration cap exceeded (p <= 31)");
    const std::int64_t expected_order = p * (p * p - 1);
    if (expected_order > static_cast<std::int64_t>(kDefaultClosureCap))
        throw std::runtime_error("group too large");

    struct Mat { int a, b, c, d; };
    std::vector<Mat> elements;
    std::vector<int> index(p * p * p * p, -1);
    auto encode = [p](const Mat& m) {
        return ((m.a * p + m.b) * p + m.c) * p + m.d;
    };

    // identity first so it gets index 0
    elements.push_back({1, 0, 0, 1});
    index[encode(elements[0])] = 0;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b)
            for (int c = 0; c < p; ++c)
                for (int d = 0; d < p; ++d) {
                    if (((a * d - b * c) % p + p) % p != 1) continue;
                    Mat m{a, b, c, d};
                    if (index[encode(m)] >= 0) continue;
                    index[encode(m)] = static_cast<int>(elements.size());
                    elements.push_back(m);
                }

    const int n = static_cast<int>(elements.size());
    auto mul = [p](const Mat& x, const Mat& y) {
        auto r = [p](std::int64_t v) { return static_cast<int>(((v % p) + p) % p); };
        return Mat{r(x.a * y.a + x.b * y.c), r(x.a * y.b + x.b * y.d),
                   r(x.c * y.a + x.d * y.c), r(x.c * y.b + x.d * y.d)};
    };

    std::vector<std::vector<int>> mult(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mult[i][j] = index[encode(mul(elements[i], elements[j]))];

    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        const Mat& m = elements[i];
        labels[i] = "[[" + std::to_string(m.a) + "," + std::to_string(m.b) + "],[" +
                    std::to_string(m.c) + "," + std::to_string(m.d) + "]]";
    }

    FiniteGroup G = from_table(std::move(mult), std::move(labels));
    G.name_ = "SL2_" + std::to_string(p);
    return G;
}

namespace {

FiniteGroup quaternion_q8() {
    // elements: (sign, axis) with axis in {1, i, j, k}; index = axis*2 + (sign<0)
    // axis products: i*j = k, j*k = i, k*i = j, anti-commuting, squares = -1
    auto mul = [](int x, int y) {
        int ax = x / 2, sx = x % 2, ay = y / 2, sy = y % 2;
        int sign = sx ^ sy;  // 0 = +, 1 = -
        int axis;
        if (ax == 0) axis = ay;
        else if (ay == 0) axis = ax;
        else if (ax == ay) { axis = 0; sign ^= 1; }
        else {
            axis = 6 - ax - ay;  // the remaining imaginary unit
            // cyclic order i->j->k is positive
            bool forward = (ay - ax + 3) % 3 == 1;
            if (!forward) sign ^= 1;
        }
        return axis * 2 + sign;
    };
    std::vector<std::vector<int>> table(8, std::vector<int>(8));
    for (int x = 0; x < 8; ++x)
        for (int y = 0; y < 8; ++y) table[x][y] = mul(x, y);
    std::vector<std::string> labels{"e", "-1", "i", "-i", "j", "-j", "k", "-k"};
    FiniteGroup G = FiniteGroup::from_table(std::move(table), std::move(labels));
    return G;
}

Permutation cycle_on(int n) {
    Permutation p(n);
    for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
    return p;
}

}  // namespace

FiniteGroup FiniteGroup::named(const std::string& name) {
    auto with_name = [&name](FiniteGroup G) {
        G.name_ = name;
        return G;
    };
    if (name == "trivial" || name == "Z1" || name == "C1" || name == "S1")
        return with_name(from_permutations({}, 1));
    if (name == "Q8") return with_name(quaternion_q8());

    if (name.size() >= 2 &&
        (name[0] == 'Z' || name[0] == 'C' || name[0] == 'S' || name[0] == 'D')) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(name.substr(1), &used);
            if (used != name.size() - 1) n = 0;
        } catch (const std::exception&) {
            n = 0;
        }
        if (n >= 2) {
            if ((name[0] == 'Z' || name[0] == 'C') && n <= 50)
                return with_name(from_permutations({cycle_on(n)}, n));
            if (name[0] == 'S' && n <= 5) {
                Permutation t(n);
                for (int i = 0; i < n; ++i) t[i] = i;
                std::swap(t[0], t[1]);
                return with_name(from_permutations({t, cycle_on(n)}, n));
            }
            if (name[0] == 'D' && n >= 3 && n <= 12) {
                Permutation refl(n);
                for (int i = 0; i < n; ++i) refl[i] = (n - i) % n;
                return with_name(from_permutations({cycle_on(n), refl}, n));
            }
        }
    }
    if (name.rfind("SL2_", 0) == 0) {
        std::int64_t p = std::stoll(name.substr(4));
        return special_linear_2(p);
    }
    throw std::invalid_argument("unknown group name: " + name);
}

ConjugacyClassSet conjugacy_classes(const FiniteGroup& G) {
    const int n = G.order();
    ConjugacyClassSet cs;
    cs.class_of.assign(n, -1);
    for (int g = 0; g < n; ++g) {
        if (cs.class_of[g] >= 0) continue;
        const int idx = cs.count();
        std::vector<int> members;
        for (int h = 0; h < n; ++h) {
            int c = G.conjugate(g, h);
            if (cs.class_of[c] < 0) {
                cs.class_of[c] = idx;
                members.push_back(c);
            }
        }
        std::sort(members.begin(), members.end());
        int centralizer = 0;
        for (int h = 0; h < n; ++h)
            if (G.mul(h, g) == G.mul(g, h)) ++centralizer;
        cs.classes.push_back(std::move(members));
        cs.representative.push_back(cs.classes.back().front());
        cs.centralizer_order.push_back(centralizer);
    }
    return cs;
}

std::vector<std::string> catalog_group_names() {
    std::vector<std::string> names{"trivial"};
    for (int n = 2; n <= 50; ++n) names.push_back("Z" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) names.push_back("S" + std::to_string(n));
    for (int n = 3; n <= 12; ++n) names.push_back("D" + std::to_string(n));
    names.push_back("Q8");
    names.push_back("SL2_5");
    return names;
}

}  // namespace orbloop
