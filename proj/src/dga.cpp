#include "ncfib/dga.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace ncfib {

namespace {

void accumulate(std::map<std::pair<Word, int>, Scalar>& terms, const std::pair<Word, int>& key,
                const Scalar& c) {
    auto it = terms.find(key);
    if (it == terms.end()) {
        if (!c.is_zero()) terms.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

FormElement FormElement::operator+(const FormElement& o) const {
    if (calc != o.calc || degree != o.degree) throw Error("FormElement: degree/calculus mismatch in +");
    FormElement out = *this;
    for (const auto& [key, c] : o.terms) accumulate(out.terms, key, c);
    return out;
}

FormElement FormElement::operator-(const FormElement& o) const {
    if (calc != o.calc || degree != o.degree) throw Error("FormElement: degree/calculus mismatch in -");
    FormElement out = *this;
    for (const auto& [key, c] : o.terms) accumulate(out.terms, key, -c);
    return out;
}

FormElement FormElement::operator*(const Scalar& c) const {
    FormElement out{calc, degree, {}};
    if (c.is_zero()) return out;
    for (const auto& [key, v] : terms) out.terms.emplace(key, v * c);
    return out;
}

std::string FormElement::str() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int g : key.first) os << "^" << calc->gen_names()[g];
        os << "." << calc->algebra().labels[key.second];
    }
    return os.str();
}

Calculus::Calculus(const FiniteDimAlgebra* alg, std::vector<std::string> gen_names,
                   RewriteSystem rewrite)
    : alg_(alg), gen_names_(std::move(gen_names)), rewrite_(std::move(rewrite)) {
    if (!alg_) throw Error("Calculus: null algebra");
    // Default: generators commute with the whole algebra.
    int g = gen_count();
    comm_.assign(alg_->dim, std::vector<SparseVec>(g));
    rev_comm_ = comm_;
    for (int x = 0; x < alg_->dim; ++x)
        for (int j = 0; j < g; ++j) {
            comm_[x][j] = {{j, Scalar(1)}};
            rev_comm_[x][j] = {{j, Scalar(1)}};
        }
    d0_.assign(alg_->dim, zero(1));
    dgen_.assign(g, zero(2));
    star_gen_.assign(g, SparseVec{});
    for (int j = 0; j < g; ++j) star_gen_[j] = {{j, Scalar(1)}};
}

Calculus& Calculus::operator=(const Calculus& o) {
    if (this == &o) return *this;
    alg_ = o.alg_;
    gen_names_ = o.gen_names_;
    rewrite_ = o.rewrite_;
    comm_ = o.comm_;
    rev_comm_ = o.rev_comm_;
    d0_ = o.d0_;
    dgen_ = o.dgen_;
    star_gen_ = o.star_gen_;
    normal_cache_ = o.normal_cache_;
    mono_cache_ = o.mono_cache_;
    mono_index_cache_ = o.mono_index_cache_;
    for (FormElement& f : d0_) f.calc = this;
    for (FormElement& f : dgen_) f.calc = this;
    return *this;
}

Calculus& Calculus::operator=(Calculus&& o) noexcept {
    if (this == &o) return *this;
    alg_ = o.alg_;
    gen_names_ = std::move(o.gen_names_);
    rewrite_ = std::move(o.rewrite_);
    comm_ = std::move(o.comm_);
    rev_comm_ = std::move(o.rev_comm_);
    d0_ = std::move(o.d0_);
    dgen_ = std::move(o.dgen_);
    star_gen_ = std::move(o.star_gen_);
    normal_cache_ = std::move(o.normal_cache_);
    mono_cache_ = std::move(o.mono_cache_);
    mono_index_cache_ = std::move(o.mono_index_cache_);
    for (FormElement& f : d0_) f.calc = this;
    for (FormElement& f : dgen_) f.calc = this;
    return *this;
}

void Calculus::set_commutation(std::vector<std::vector<SparseVec>> comm,
                               std::vector<std::vector<SparseVec>> rev_comm) {
    comm_ = std::move(comm);
    rev_comm_ = std::move(rev_comm);
}

bool Calculus::is_normal(const Word& w) const {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (rewrite_.applies(w[i], w[i + 1])) return false;
    return true;
}

const std::map<Word, Scalar>& Calculus::normalize(const Word& w) const {
    auto it = normal_cache_.find(w);
    if (it != normal_cache_.end()) return it->second;
    std::map<Word, Scalar> result;
    size_t pos = w.size();
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (rewrite_.applies(w[i], w[i + 1])) {
            pos = i;
            break;
        }
    if (pos == w.size()) {
        result.emplace(w, Scalar(1));
    } else {
        const auto& rule = rewrite_.rules.at({w[pos], w[pos + 1]});
        for (const auto& [c, repl] : rule) {
            Word nw(w.begin(), w.begin() + pos);
            nw.insert(nw.end(), repl.begin(), repl.end());
            nw.insert(nw.end(), w.begin() + pos + 2, w.end());
            for (const auto& [m, cm] : normalize(nw)) {
                Scalar& slot = result[m];
                slot += c * cm;
                if (slot.is_zero()) result.erase(m);
            }
        }
    }
    return normal_cache_.emplace(w, std::move(result)).first->second;
}

const std::vector<Word>& Calculus::monomials(int n) const {
    auto it = mono_cache_.find(n);
    if (it != mono_cache_.end()) return it->second;
    std::vector<Word> out;
    Word w;
    // Depth-first in lex order over generator indices, pruning at the first
    // reducible adjacent pair so only normal words survive.
    std::function<void()> rec = [&]() {
        if (int(w.size()) == n) {
            out.push_back(w);
            return;
        }
        for (int g = 0; g < gen_count(); ++g) {
            if (!w.empty() && rewrite_.applies(w.back(), g)) continue;
            w.push_back(g);
            rec();
            w.pop_back();
        }
    };
    rec();
    std::map<Word, int> index;
    for (size_t i = 0; i < out.size(); ++i) index.emplace(out[i], int(i));
    mono_index_cache_[n] = std::move(index);
    return mono_cache_.emplace(n, std::move(out)).first->second;
}

int Calculus::mono_index(int n, const Word& w) const {
    monomials(n);
    const auto& index = mono_index_cache_.at(n);
    auto it = index.find(w);
    if (it == index.end()) throw Error("Calculus: word is not a normal monomial");
    return it->second;
}

std::vector<std::pair<Word, int>> Calculus::enumerate_basis(int n) const {
    std::vector<std::pair<Word, int>> out;
    for (const Word& w : monomials(n))
        for (int j = 0; j < alg_->dim; ++j) out.emplace_back(w, j);
    return out;
}

FormElement Calculus::mono_form(const Word& w) const {
    FormElement out = zero(int(w.size()));
    for (int j = 0; j < alg_->dim; ++j)
        if (!alg_->unit[j].is_zero()) add_term(out, w, j, alg_->unit[j]);
    return out;
}

FormElement Calculus::basis_form(const Word& w, int alg_idx) const {
    FormElement out = zero(int(w.size()));
    add_term(out, w, alg_idx, Scalar(1));
    return out;
}

FormElement Calculus::from_coords(int degree, const Vec& coords) const {
    if (int(coords.size()) != basis_dim(degree)) throw Error("Calculus::from_coords: dimension mismatch");
    FormElement out = zero(degree);
    const auto& monos = monomials(degree);
    for (size_t m = 0; m < monos.size(); ++m)
        for (int j = 0; j < alg_->dim; ++j) {
            const Scalar& c = coords[m * alg_->dim + j];
            if (!c.is_zero()) out.terms.emplace(std::make_pair(monos[m], j), c);
        }
    return out;
}

Vec Calculus::coords_of(const FormElement& x) const {
    Vec out(basis_dim(x.degree));
    for (const auto& [key, c] : x.terms) out[basis_index(x.degree, key.first, key.second)] = c;
    return out;
}

void add_term(FormElement& x, const Word& w, int alg_idx, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [m, cm] : x.calc->normalize(w)) accumulate(x.terms, {m, alg_idx}, c * cm);
}

namespace {

/// e_x * w = sum_k c (w_k * e_x): moves an algebra basis element through a
/// word left to right; the algebra element is unchanged by construction.
std::vector<std::pair<Scalar, Word>> pass_through(const Calculus& calc, int x, const Word& w) {
    std::vector<std::pair<Scalar, Word>> acc{{Scalar(1), Word{}}};
    for (int g : w) {
        std::vector<std::pair<Scalar, Word>> next;
        for (const auto& [c, partial] : acc)
            for (const auto& [k, ck] : calc.comm(x, g)) {
                Word nw = partial;
                nw.push_back(k);
                next.emplace_back(c * ck, std::move(nw));
            }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

FormElement wedge(const FormElement& x, const FormElement& y) {
    if (x.calc != y.calc) throw Error("wedge: calculus mismatch");
    const Calculus& calc = *x.calc;
    const FiniteDimAlgebra& alg = calc.algebra();
    FormElement out = calc.zero(x.degree + y.degree);
    for (const auto& [kx, cx] : x.terms)
        for (const auto& [ky, cy] : y.terms) {
            // (w1 . a1) ^ (w2 . a2) = w1 ^ (a1 . w2) ^ a2
            for (const auto& [cp, w2p] : pass_through(calc, kx.second, ky.first)) {
                Word w = kx.first;
                w.insert(w.end(), w2p.begin(), w2p.end());
                for (const auto& [k, ck] : alg.mul[kx.second][ky.second])
                    add_term(out, w, k, cx * cy * cp * ck);
            }
        }
    return out;
}

FormElement left_mul(const Vec& a, const FormElement& x) {
    const Calculus& calc = *x.calc;
    const FiniteDimAlgebra& alg = calc.algebra();
    FormElement out = calc.zero(x.degree);
    for (int i = 0; i < int(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (const auto& [key, c] : x.terms)
            for (const auto& [cp, wp] : pass_through(calc, i, key.first))
                for (const auto& [k, ck] : alg.mul[i][key.second])
                    add_term(out, wp, k, a[i] * c * cp * ck);
    }
    return out;
}

FormElement right_mul(const FormElement& x, const Vec& a) {
    const Calculus& calc = *x.calc;
    const FiniteDimAlgebra& alg = calc.algebra();
    FormElement out = calc.zero(x.degree);
    for (const auto& [key, c] : x.terms)
        for (int i = 0; i < int(a.size()); ++i) {
            if (a[i].is_zero()) continue;
            for (const auto& [k, ck] : alg.mul[key.second][i])
                add_term(out, key.first, k, c * a[i] * ck);
        }
    return out;
}

FormElement d_form(const FormElement& x) {
    const Calculus& calc = *x.calc;
    FormElement out = calc.zero(x.degree + 1);
    for (const auto& [key, c] : x.terms) {
        const Word& w = key.first;
        // d(w . a) = d(w) . a + (-1)^|w| w ^ d(a), with d(w) by Leibniz
        // over the letters.
        for (size_t p = 0; p < w.size(); ++p) {
            FormElement piece = wedge(calc.mono_form(Word(w.begin(), w.begin() + p)),
                                      wedge(calc.dgen(w[p]),
                                            calc.mono_form(Word(w.begin() + p + 1, w.end()))));
            Vec a(calc.algebra().dim);
            a[key.second] = (p % 2 == 0) ? c : -c;
            out = out + right_mul(piece, a);
        }
        FormElement tail = wedge(calc.mono_form(w), calc.d0(key.second));
        out = out + tail * (w.size() % 2 == 0 ? c : -c);
    }
    return out;
}

FormElement star_form(const FormElement& x) {
    const Calculus& calc = *x.calc;
    const FiniteDimAlgebra& alg = calc.algebra();
    if (x.degree == 0) {
        FormElement out = calc.zero(0);
        for (const auto& [key, c] : x.terms) {
            const Vec& st = alg.star[key.second];
            for (int k = 0; k < alg.dim; ++k) accumulate(out.terms, {Word{}, k}, c.conjugate() * st[k]);
        }
        return out;
    }
    if (x.degree != 1) throw Error("star_form: defined on degrees 0 and 1 only");
    FormElement out = calc.zero(1);
    for (const auto& [key, c] : x.terms) {
        // (g . a)^* = a^* . g^*
        FormElement gstar = calc.zero(1);
        for (const auto& [k, ck] : calc.star_gen()[key.first[0]])
            gstar = gstar + calc.mono_form(Word{k}) * ck.conjugate();
        out = out + left_mul(alg.star[key.second], gstar) * c.conjugate();
    }
    return out;
}

void Calculus::check_confluence() const {
    for (int n = 2; n <= 3; ++n) {
        // every word over the generators, not just normal ones
        std::vector<Word> words{{}};
        for (int step = 0; step < n; ++step) {
            std::vector<Word> next;
            for (const Word& w : words)
                for (int g = 0; g < gen_count(); ++g) {
                    Word nw = w;
                    nw.push_back(g);
                    next.push_back(std::move(nw));
                }
            words = std::move(next);
        }
        for (const Word& w : words) {
            const auto& base = normalize(w);
            for (size_t p = 0; p + 1 < w.size(); ++p) {
                if (!rewrite_.applies(w[p], w[p + 1])) continue;
                std::map<Word, Scalar> got;
                for (const auto& [c, repl] : rewrite_.rules.at({w[p], w[p + 1]})) {
                    Word nw(w.begin(), w.begin() + p);
                    nw.insert(nw.end(), repl.begin(), repl.end());
                    nw.insert(nw.end(), w.begin() + p + 2, w.end());
                    for (const auto& [m, cm] : normalize(nw)) {
                        Scalar& slot = got[m];
                        slot += c * cm;
                        if (slot.is_zero()) got.erase(m);
                    }
                }
                if (got != base)
                    throw Error("Calculus: rewrite system is not confluent at degree " +
                                std::to_string(n));
            }
        }
    }
}

void Calculus::check_calculus_axioms() const {
    const FiniteDimAlgebra& a = *alg_;
    // Leibniz on algebra basis pairs: d(e_i e_j) = d(e_i) e_j + e_i d(e_j).
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            FormElement lhs = zero(1);
            for (const auto& [k, ck] : a.mul[i][j]) lhs = lhs + d0_[k] * ck;
            Vec ei(a.dim), ej(a.dim);
            ei[i] = Scalar(1);
            ej[j] = Scalar(1);
            FormElement rhs = right_mul(d0_[i], ej) + left_mul(ei, d0_[j]);
            if (!(lhs == rhs))
                throw Error("Calculus: Leibniz rule fails on basis pair (" + a.labels[i] + ", " +
                            a.labels[j] + ")");
        }
    // d1 = 0 (d of the unit).
    FormElement du = zero(1);
    for (int j = 0; j < a.dim; ++j) du = du + d0_[j] * a.unit[j];
    if (!du.is_zero()) throw Error("Calculus: d(1) != 0");
    // d^2 = 0 on degree 0 and on the degree-1 monomial basis.
    for (int i = 0; i < a.dim; ++i)
        if (!d_form(d0_[i]).is_zero())
            throw Error("Calculus: d^2 != 0 on algebra basis element " + a.labels[i]);
    for (int g = 0; g < gen_count(); ++g)
        for (int j = 0; j < a.dim; ++j)
            if (!d_form(d_form(basis_form(Word{g}, j))).is_zero())
                throw Error("Calculus: d^2 != 0 on generator " + gen_names_[g]);
    // Commutation rules must be mutually inverse and multiplicative.
    for (int x = 0; x < a.dim; ++x)
        for (int g = 0; g < gen_count(); ++g) {
            SparseVec round;
            for (const auto& [k, ck] : comm_[x][g])
                for (const auto& [m, cm] : rev_comm_[x][k]) round.emplace_back(m, ck * cm);
            Vec d1 = to_dense(round, gen_count());
            Vec want(gen_count());
            want[g] = Scalar(1);
            if (d1 != want) throw Error("Calculus: comm and rev_comm are not mutually inverse");
        }
    for (int x = 0; x < a.dim; ++x)
        for (int y = 0; y < a.dim; ++y)
            for (int g = 0; g < gen_count(); ++g) {
                // (e_x e_y) g moved in one go vs. moving g past e_y then e_x;
                // compared in the generator x algebra coordinate space.
                Vec lhs(size_t(gen_count()) * a.dim), rhs(lhs.size());
                for (const auto& [k, ck] : a.mul[x][y])
                    for (const auto& [m, cm] : comm_[k][g]) lhs[m * a.dim + k] += ck * cm;
                for (const auto& [j, cj] : comm_[y][g])
                    for (const auto& [m, cm] : comm_[x][j])
                        for (const auto& [k, ck] : a.mul[x][y]) rhs[m * a.dim + k] += cj * cm * ck;
                if (lhs != rhs) throw Error("Calculus: commutation is not multiplicative");
            }
}

int Calculus::kernel_dim_d0() const {
    std::vector<Vec> cols;
    for (int i = 0; i < alg_->dim; ++i) cols.push_back(coords_of(d0_[i]));
    return kernel_basis(Matrix::from_columns(basis_dim(1), cols)).dim();
}

CocycleReport cocycle_check(const GroupCalculusData& data) {
    int n = int(data.table.size());
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int xy = data.table[x][y];
            // right representation: rho(xy) = rho(x) rho(y) in the row-vector
            // convention v <| x = v rho(x)
            if (!(data.rho[x] * data.rho[y] == data.rho[xy])) return {false, x, y};
            Vec expect = data.rho[y].transpose().apply(data.omega[x]) + data.omega[y];
            if (!(expect == data.omega[xy])) return {false, x, y};
        }
    return {true, -1, -1};
}

Calculus group_calculus(const GroupCalculusData& data, bool connectedness_required) {
    CocycleReport rep = cocycle_check(data);
    if (!rep.pass)
        throw Error("group_calculus: cocycle condition fails on pair (" +
                    data.alg->labels[rep.x] + ", " + data.alg->labels[rep.y] + ")");
    int gens = int(data.gen_names.size());
    RewriteSystem rw;
    for (int i = 0; i < gens; ++i) {
        rw.rules[{i, i}] = {};  // g ^ g = 0
        for (int j = 0; j < i; ++j) rw.rules[{i, j}] = {{Scalar(-1), Word{j, i}}};
    }
    Calculus calc(data.alg, data.gen_names, rw);

    std::vector<int> inv = group_inverses(data.table);
    int dim = data.alg->dim;
    std::vector<std::vector<SparseVec>> comm(dim, std::vector<SparseVec>(gens)),
        rev(dim, std::vector<SparseVec>(gens));
    for (int x = 0; x < dim; ++x)
        for (int j = 0; j < gens; ++j) {
            // x g = (g <| x^{-1}) x and g x = x (g <| x)
            for (int k = 0; k < gens; ++k) {
                const Scalar& c = data.rho[inv[x]].at(j, k);
                if (!c.is_zero()) comm[x][j].emplace_back(k, c);
                const Scalar& r = data.rho[x].at(j, k);
                if (!r.is_zero()) rev[x][j].emplace_back(k, r);
            }
        }
    calc.set_commutation(std::move(comm), std::move(rev));

    std::vector<FormElement> d0;
    for (int x = 0; x < dim; ++x) {
        // dx = (omega(x) <| x^{-1}) . x
        Vec moved = data.rho[inv[x]].transpose().apply(data.omega[x]);
        FormElement f = calc.zero(1);
        for (int k = 0; k < gens; ++k) add_term(f, Word{k}, x, moved[k]);
        d0.push_back(std::move(f));
    }
    calc.set_d0(std::move(d0));
    calc.set_dgen(std::vector<FormElement>(gens, calc.zero(2)));

    std::vector<SparseVec> star(gens);
    for (int j = 0; j < gens; ++j) star[j] = {{j, Scalar(-1)}};
    calc.set_star_gen(std::move(star));

    if (connectedness_required) {
        int e = -1;
        for (int x = 0; x < dim; ++x) {
            bool ident = true;
            for (int y = 0; y < dim; ++y) ident = ident && data.table[x][y] == y;
            if (ident) e = x;
        }
        for (int x = 0; x < dim; ++x)
            if (x != e && is_zero(data.omega[x]))
                throw Error("group_calculus: omega vanishes on " + data.alg->labels[x] +
                            ", the calculus is disconnected");
        if (calc.kernel_dim_d0() != 1)
            throw Error("group_calculus: kernel of d has dimension " +
                        std::to_string(calc.kernel_dim_d0()) + ", the calculus is disconnected");
    }
    return calc;
}

Calculus inner_calculus(const FiniteDimAlgebra* alg, std::vector<std::string> gen_names,
                        const std::vector<std::pair<int, Vec>>& theta, RewriteSystem rewrite,
                        std::vector<SparseVec> star_gen) {
    Calculus calc(alg, std::move(gen_names), std::move(rewrite));
    FormElement th = calc.zero(1);
    for (const auto& [g, coords] : theta)
        for (int j = 0; j < alg->dim; ++j) add_term(th, Word{g}, j, coords[j]);

    FormElement th2 = wedge(th, th);
    for (int i = 0; i < alg->dim; ++i) {
        Vec ei(alg->dim);
        ei[i] = Scalar(1);
        if (!(left_mul(ei, th2) == right_mul(th2, ei)))
            throw Error("inner_calculus: theta^theta is not central (fails at " + alg->labels[i] +
                        "), the rewrite rules do not extend the calculus");
    }

    std::vector<FormElement> d0;
    for (int i = 0; i < alg->dim; ++i) {
        Vec ei(alg->dim);
        ei[i] = Scalar(1);
        d0.push_back(right_mul(th, ei) - left_mul(ei, th));  // theta a - a theta
    }
    calc.set_d0(std::move(d0));

    std::vector<FormElement> dgen;
    for (int g = 0; g < calc.gen_count(); ++g) {
        FormElement xi = calc.mono_form(Word{g});
        dgen.push_back(wedge(th, xi) + wedge(xi, th));
    }
    calc.set_dgen(std::move(dgen));
    calc.set_star_gen(std::move(star_gen));
    return calc;
}

}  // namespace ncfib
