#ifndef NCFIB_GROUPS_HPP
#define NCFIB_GROUPS_HPP

#include <array>
#include <string>
#include <vector>

#include "ncfib/scalar.hpp"

namespace ncfib {

/// Multiplication table of S3 on the basis {e, u, v, uv, vu, uvu} with
/// u = (12), v = (23). Products compose as (xy)(k) = x(y(k)).
struct S3Tables {
    std::vector<std::string> labels;
    std::vector<std::vector<int>> table;
    int e = 0, u = 1, v = 2, uv = 3, vu = 4, uvu = 5;
};

inline S3Tables s3_tables() {
    using Perm = std::array<int, 3>;
    const Perm id{0, 1, 2}, pu{1, 0, 2}, pv{0, 2, 1};
    auto compose = [](const Perm& x, const Perm& y) {
        return Perm{x[y[0]], x[y[1]], x[y[2]]};
    };
    std::vector<Perm> perms{id, pu, pv, compose(pu, pv), compose(pv, pu),
                            compose(pu, compose(pv, pu))};
    S3Tables out;
    out.labels = {"e", "u", "v", "uv", "vu", "uvu"};
    out.table.assign(6, std::vector<int>(6, -1));
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            Perm p = compose(perms[i], perms[j]);
            for (int k = 0; k < 6; ++k)
                if (perms[k] == p) out.table[i][j] = k;
            if (out.table[i][j] < 0) throw Error("s3_tables: composition escaped the list");
        }
    return out;
}

}  // namespace ncfib

#endif
