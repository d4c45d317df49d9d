"""
osp(1|2) link invariants of braid closures and their e-graded categorification.

The invariant Ĵ lives in Z[τ]/(τ⁴−1)[q, q⁻¹]; it is computed by a state sum,
through the Temperley–Lieb algebra, and through explicit super quantum group
matrices.  The e-graded Khovanov complex and its covering version over
Z[π]/(π²−1) categorify it.
"""

from .braid_words import BraidWord, markov_variants, parse_braid, random_braid, writhe
from .covering_homology import build_cov_complex, specialize_pi
from .egraded_homology import forget_tau, graded_euler, homology, homology_mod2, tqft_complex
from .errors import EbraidError
from .rep_oracle import jhat_oracle
from .resolution_cube import build_cube, sign_assignment
from .scalar_ring import CyclotomicInt4, PiScalar, TauLaurent
from .skein_eval import bracket, jhat

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "CyclotomicInt4",
    "EbraidError",
    "PiScalar",
    "TauLaurent",
    "bracket",
    "build_cov_complex",
    "build_cube",
    "forget_tau",
    "graded_euler",
    "homology",
    "homology_mod2",
    "jhat",
    "jhat_oracle",
    "markov_variants",
    "parse_braid",
    "random_braid",
    "sign_assignment",
    "specialize_pi",
    "tqft_complex",
    "writhe",
]
