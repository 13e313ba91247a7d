#pragma once

#include "alg2/bimodule.hpp"

namespace testsupport {

using namespace alg2;

/// Row vectors Q^d as a (Q, M_d(Q))-bimodule.
inline BimodulePtr rows(const AlgebraPtr& md) { return simple_module(md, 0); }

/// Column vectors Q^d as an (M_d(Q), Q)-bimodule: E_ij e_k = delta_jk e_i.
inline BimodulePtr columns(const AlgebraPtr& md, std::size_t d) {
    std::vector<Mat> l;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat m(d, d);
            m(i, j) = 1;
            l.push_back(m);
        }
    return make_bimodule(md, ground_field(), d, l, {Mat::identity(d)}, "cols");
}

inline BimodulePtr free_q(std::size_t n) {
    return make_bimodule(ground_field(), ground_field(), n, {Mat::identity(n)}, {Mat::identity(n)},
                         "Q^" + std::to_string(n));
}

}  // namespace testsupport
