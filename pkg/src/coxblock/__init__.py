"""Exact combinatorial model of the unipotent block of GL_d(K) modulo l
under the Coxeter congruence (q of order d modulo l)."""

from .arithmetic import Params, cuspidal_kernel_count, validate_coxeter
from .cohomology import (
    BiGradedR,
    SSPair,
    lefschetz,
    r_star,
    rhs,
    semisimplify_lhs,
    twist_equivariance_check,
    verify_all,
    verify_main_theorem,
)
from .combinatorics import (
    Partition,
    Permutation,
    RootSubset,
    coxeter_shift,
    descents,
    j_corner,
    jacquet_module,
    levi_partition,
    partial,
    whittaker_partition,
)
from .ext import PoincarePolynomial, dim_Y, e1_page, euler_check, ext_poincare
from .grothendieck import (
    VirtualClass,
    class_hbar,
    class_i,
    class_pi_in_i,
    class_v,
    decomposition_matrix,
    twist_class,
)
from .jacquet_langlands import DVirtualClass, lj, lj_effective, lj_linear
from .weil_deligne import (
    WDObject,
    WDString,
    deligne_primitive_parts,
    jordan_type,
    transpose_wd,
    twist_wd,
    wd_elliptic,
)

__version__ = "0.1.0"
